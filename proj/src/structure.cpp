#include "c4c/structure.hpp"

#include <algorithm>
#include <queue>

namespace c4c {

int girth(const CubicGraph& g) {
    int best = g.order() + 1;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

static bool connected_without(const CubicGraph& g, std::uint64_t removed) {
    int n = g.order();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed >> v & 1u)) {
            if (start < 0) start = v;
            ++alive;
        }
    if (start < 0) return true;
    std::vector<int> stack{start};
    std::uint64_t seen = 1ull << start;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!(removed >> w & 1u) && !(seen >> w & 1u)) {
                seen |= 1ull << w;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

int vertex_connectivity(const CubicGraph& g) {
    int n = g.order();
    for (int v = 0; v < n; ++v)
        if (!connected_without(g, 1ull << v)) return 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!connected_without(g, (1ull << u) | (1ull << v))) return 2;
    return 3;
}

// Does the component contain a cycle? Holds iff it has at least as many
// edges as vertices.
static bool component_cyclic(const SimpleGraph& h, const std::vector<int>& comp) {
    int deg_sum = 0;
    for (int v : comp) deg_sum += h.degree(v);
    return deg_sum / 2 >= static_cast<int>(comp.size());
}

static std::optional<CutWitness> check_cut(const CubicGraph& g,
                                           const std::vector<Edge>& all,
                                           const std::vector<int>& pick) {
    SimpleGraph h(g);
    for (int i : pick) h.remove_edge(all[i].u, all[i].v);
    auto comps = h.components();
    if (comps.size() < 2) return std::nullopt;
    std::vector<const std::vector<int>*> cyclic;
    for (const auto& c : comps)
        if (component_cyclic(h, c)) cyclic.push_back(&c);
    if (cyclic.size() < 2) return std::nullopt;
    CutWitness w;
    for (int i : pick) w.edges.push_back(all[i]);
    w.side_a = *cyclic[0];
    for (const auto& c : comps)
        if (&c != cyclic[0]) w.side_b.insert(w.side_b.end(), c.begin(), c.end());
    std::sort(w.side_a.begin(), w.side_a.end());
    std::sort(w.side_b.begin(), w.side_b.end());
    w.both_cyclic = true;
    return w;
}

std::optional<CutWitness> find_cycle_separating_cut(const CubicGraph& g, int k) {
    if (k != 4 && k != 5)
        throw GraphError(ErrorCode::PreconditionViolated, "k must be 4 or 5");
    auto all = g.edges();
    const int m = static_cast<int>(all.size());
    std::vector<int> pick;
    std::optional<CutWitness> found;
    // enumerate subsets of size s in lexicographic order, smallest s first
    auto rec = [&](auto&& self, int next, int s) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == s) {
            found = check_cut(g, all, pick);
            return;
        }
        for (int i = next; i < m && !found; ++i) {
            pick.push_back(i);
            self(self, i + 1, s);
            pick.pop_back();
        }
    };
    for (int s = 1; s < k && !found; ++s) {
        pick.clear();
        rec(rec, 0, s);
    }
    return found;
}

bool is_cyclically_k_connected(const CubicGraph& g, int k) {
    if (g.order() < 2 * k) return false;
    if (vertex_connectivity(g) != 3) return false;
    return !find_cycle_separating_cut(g, k).has_value();
}

namespace {

struct ColorSearch {
    const CubicGraph& g;
    std::vector<Edge> edges;
    std::vector<int> color;        // per edge, 0 = uncolored
    std::vector<unsigned> vused;   // per vertex, bitmask of colors 1..3

    explicit ColorSearch(const CubicGraph& graph)
        : g(graph), edges(graph.edges()), color(edges.size(), 0), vused(graph.order(), 0) {}

    bool solve(int done) {
        if (done == static_cast<int>(edges.size())) return true;
        // most saturated uncolored edge first
        int best = -1, best_free = 4;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (color[i]) continue;
            unsigned used = vused[edges[i].u] | vused[edges[i].v];
            int free_cnt = 3 - __builtin_popcount(used & 7u);
            if (free_cnt < best_free) {
                best_free = free_cnt;
                best = i;
            }
        }
        if (best_free == 0) return false;
        const Edge e = edges[best];
        for (int c = 1; c <= 3; ++c) {
            unsigned bit = 1u << (c - 1);
            if ((vused[e.u] | vused[e.v]) & bit) continue;
            color[best] = c;
            vused[e.u] |= bit;
            vused[e.v] |= bit;
            if (solve(done + 1)) return true;
            color[best] = 0;
            vused[e.u] &= ~bit;
            vused[e.v] &= ~bit;
        }
        return false;
    }
};

}  // namespace

int edge_chromatic_class(const CubicGraph& g) {
    ColorSearch s(g);
    return s.solve(0) ? 3 : 4;
}

bool has_cut_edge(const CubicGraph& g) {
    for (const Edge& e : g.edges()) {
        SimpleGraph h(g);
        h.remove_edge(e.u, e.v);
        if (!h.connected()) return true;
    }
    return false;
}

bool is_snark(const CubicGraph& g) {
    return !has_cut_edge(g) && edge_chromatic_class(g) == 4;
}

StructureReport structure_report(const CubicGraph& g) {
    StructureReport r;
    r.girth = girth(g);
    r.vertex_connectivity = vertex_connectivity(g);
    auto cut4 = find_cycle_separating_cut(g, 4);
    r.cyclic_4 = g.order() >= 8 && r.vertex_connectivity == 3 && !cut4;
    r.cyclic_5 = g.order() >= 10 && r.vertex_connectivity == 3 &&
                 !find_cycle_separating_cut(g, 5);
    r.planar = is_planar(g);
    r.chromatic_class = edge_chromatic_class(g);
    r.witness = cut4;
    return r;
}

}  // namespace c4c
