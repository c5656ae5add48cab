#include "c4c/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace c4c {

CubicGraph CubicGraph::build(int n, std::vector<Edge> edge_list) {
    if (n < 4 || n % 2 != 0)
        throw GraphError(ErrorCode::OddOrder,
                         "cubic graphs need even order n >= 4, got n=" + std::to_string(n));
    if (n > 64)
        throw GraphError(ErrorCode::BadInput, "order cap is 64");

    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

    std::vector<int> deg(n, 0);
    std::vector<std::uint64_t> bits(n, 0);
    for (const Edge& e : edge_list) {
        if (e.u < 0 || e.v >= n)
            throw GraphError(ErrorCode::BadInput, "edge endpoint out of range");
        if (bits[e.u] >> e.v & 1u)
            throw GraphError(ErrorCode::NotSimple, "parallel edge");
        bits[e.u] |= 1ull << e.v;
        bits[e.v] |= 1ull << e.u;
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] != 3)
            throw GraphError(ErrorCode::NotCubic,
                             "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));

    CubicGraph g;
    g.n_ = n;
    g.bits_ = std::move(bits);
    g.adj_.resize(n);
    std::vector<int> fill(n, 0);
    for (const Edge& e : edge_list) {
        g.adj_[e.u][fill[e.u]++] = e.v;
        g.adj_[e.v][fill[e.v]++] = e.u;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw GraphError(ErrorCode::Disconnected, "graph is disconnected");
    return g;
}

std::vector<Edge> CubicGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int u = 0; u < n_; ++u)
        for (int w : adj_[u])
            if (w > u) out.emplace_back(u, w);
    return out;
}

int CubicGraph::third_neighbor(int v, int a, int b) const {
    for (int w : adj_[v])
        if (w != a && w != b) return w;
    throw GraphError(ErrorCode::BadInput, "no third neighbor");
}

SimpleGraph::SimpleGraph(const CubicGraph& g) : n(g.order()), adj(g.order()) {
    for (int v = 0; v < n; ++v)
        adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
}

bool SimpleGraph::has_edge(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

void SimpleGraph::add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
    adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
}

int SimpleGraph::edge_count() const {
    int d = 0;
    for (const auto& nb : adj) d += static_cast<int>(nb.size());
    return d / 2;
}

bool SimpleGraph::connected() const {
    return static_cast<int>(components().size()) <= 1;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

CubicGraph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw GraphError(ErrorCode::BadInput, "bad edge-list header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw GraphError(ErrorCode::BadInput, "truncated edge list");
        edges.emplace_back(u, v);
    }
    return CubicGraph::build(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const CubicGraph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace c4c
