#include "c4c/transform.hpp"

#include <algorithm>

namespace c4c {

static void require_edge(const CubicGraph& g, const Edge& e) {
    if (!g.has_edge(e)) throw GraphError(ErrorCode::EdgeNotPresent, "edge not in graph");
}

CubicGraph bridge(const CubicGraph& g, const Edge& e1, const Edge& e2) {
    require_edge(g, e1);
    require_edge(g, e2);
    if (e1 == e2) throw GraphError(ErrorCode::IdenticalEdges, "cannot bridge an edge with itself");

    const int n = g.order();
    const int x = n, y = n + 1;
    std::vector<Edge> edges;
    edges.reserve(g.size() + 3);
    for (const Edge& e : g.edges())
        if (e != e1 && e != e2) edges.push_back(e);
    edges.emplace_back(e1.u, x);
    edges.emplace_back(e1.v, x);
    edges.emplace_back(e2.u, y);
    edges.emplace_back(e2.v, y);
    edges.emplace_back(x, y);
    return CubicGraph::build(n + 2, std::move(edges));
}

UnbridgeResult unbridge(const CubicGraph& g, const Edge& xy) {
    require_edge(g, xy);
    const int x = xy.u, y = xy.v;

    int p = -1, q = -1, r = -1, s = -1;
    for (int w : g.neighbors(x))
        if (w != y) (p < 0 ? p : q) = w;
    for (int w : g.neighbors(y))
        if (w != x) (r < 0 ? r : s) = w;

    if (g.has_edge(p, q) || g.has_edge(r, s))
        throw GraphError(ErrorCode::SimplicityViolation,
                         "contraction endpoint lies on a triangle");
    if (Edge(p, q) == Edge(r, s))
        throw GraphError(ErrorCode::SimplicityViolation,
                         "both contractions produce the same edge");

    std::vector<int> relabel(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (v != x && v != y) relabel[v] = next++;

    std::vector<Edge> edges;
    edges.reserve(g.size() - 3);
    for (const Edge& e : g.edges())
        if (!e.contains(x) && !e.contains(y)) edges.emplace_back(relabel[e.u], relabel[e.v]);
    edges.emplace_back(relabel[p], relabel[q]);
    edges.emplace_back(relabel[r], relabel[s]);

    return {CubicGraph::build(g.order() - 2, std::move(edges)), std::move(relabel)};
}

SimpleGraph delete_edge(const CubicGraph& g, const Edge& e) {
    require_edge(g, e);
    SimpleGraph h(g);
    h.remove_edge(e.u, e.v);
    return h;
}

SimpleGraph contract_edge(const CubicGraph& g, const Edge& e) {
    require_edge(g, e);
    const int keep = e.u, drop = e.v;  // merge toward the smaller id
    for (int w : g.neighbors(drop))
        if (w != keep && g.has_edge(keep, w))
            throw GraphError(ErrorCode::SimplicityViolation,
                             "contraction would create a parallel edge");

    SimpleGraph h(g.order() - 1);
    auto map = [&](int v) { return v < drop ? v : v == drop ? keep : v - 1; };
    for (const Edge& f : g.edges()) {
        if (f == e) continue;
        h.add_edge(map(f.u), map(f.v));
    }
    return h;
}

}  // namespace c4c
