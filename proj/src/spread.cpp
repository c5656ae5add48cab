#include "c4c/spread.hpp"

#include <algorithm>
#include <queue>

namespace c4c {

static void require_edge(const CubicGraph& g, const Edge& e) {
    if (!g.has_edge(e)) throw GraphError(ErrorCode::EdgeNotPresent, "edge not in graph");
}

static std::vector<int> bfs_dist(const CubicGraph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

namespace {

// Depth-bounded enumeration of cycles of length exactly `len` through e1,
// restricted to cycles that also use e2. Tracks the lexicographically
// smallest arc split seen.
struct SpreadSearch {
    const CubicGraph& g;
    Edge e1, e2;
    int target;  // = e1.u, the cycle closes over edge e1
    std::vector<int> dist_b, dist_u2, dist_v2;
    std::vector<int> path;
    std::uint64_t used = 0;
    std::optional<CycleSpread> best;
    int cycle_len = 0;

    SpreadSearch(const CubicGraph& graph, Edge a, Edge b)
        : g(graph), e1(a), e2(b), target(a.u),
          dist_b(bfs_dist(graph, a.u)),
          dist_u2(bfs_dist(graph, b.u)),
          dist_v2(bfs_dist(graph, b.v)) {}

    void record() {
        // path = v0 .. v_L with v_L = v0; cycle edge E_k = (v_k, v_{k+1}),
        // E_0 = e1. If E_t = e2, the arcs strictly between the two edges
        // have t-1 and L-1-t edges.
        const int L = cycle_len;
        for (int t = 1; t < L; ++t) {
            if (Edge(path[t], path[t + 1]) == e2) {
                int a1 = t - 1;
                int a2 = L - 1 - t;
                CycleSpread s{std::min(a1, a2), std::max(a1, a2)};
                if (!best || s < *best) best = s;
                return;
            }
        }
    }

    // remaining = edges still to add before closing back to target.
    void dfs(int cur, int remaining, bool e2_used) {
        if (remaining == 0) {
            if (cur == target && e2_used) record();
            return;
        }
        if (dist_b[cur] > remaining) return;
        if (!e2_used) {
            int via = std::min(dist_u2[cur] + 1 + dist_b[e2.v],
                               dist_v2[cur] + 1 + dist_b[e2.u]);
            if (via > remaining) return;
        }
        for (int w : g.neighbors(cur)) {
            if (w == target) {
                if (remaining != 1) continue;
            } else if (used >> w & 1u) {
                continue;
            }
            bool step_e2 = Edge(cur, w) == e2;
            path.push_back(w);
            used |= 1ull << w;
            dfs(w, remaining - 1, e2_used || step_e2);
            used &= ~(1ull << w);
            path.pop_back();
        }
    }

    std::optional<CycleSpread> run() {
        // cycle = target(=e1.u), e1.v, ..., back to target
        for (cycle_len = 3; cycle_len <= g.order(); ++cycle_len) {
            best.reset();
            path = {target, e1.v};
            used = (1ull << target) | (1ull << e1.v);
            dfs(e1.v, cycle_len - 1, e1 == e2);
            if (best) return best;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<CycleSpread> cycle_spread(const CubicGraph& g, const Edge& e1, const Edge& e2) {
    require_edge(g, e1);
    require_edge(g, e2);
    if (e1 == e2) return CycleSpread{0, 0};
    return SpreadSearch(g, e1, e2).run();
}

bool meets_threshold(const CubicGraph& g, const Edge& e1, const Edge& e2, SpreadThreshold t) {
    require_edge(g, e1);
    require_edge(g, e2);
    if (e1 == e2) return false;
    switch (t) {
        case SpreadThreshold::Distinct:
            return true;
        case SpreadThreshold::AtLeast11:
            return !e1.shares_endpoint(e2);
        case SpreadThreshold::AtLeast12: {
            if (e1.shares_endpoint(e2)) return false;
            bool four_cycle = (g.has_edge(e1.u, e2.u) && g.has_edge(e1.v, e2.v)) ||
                              (g.has_edge(e1.u, e2.v) && g.has_edge(e1.v, e2.u));
            return !four_cycle;
        }
        case SpreadThreshold::AtLeast22:
            for (int p : {e1.u, e1.v})
                for (int q : {e2.u, e2.v})
                    if (p == q || g.has_edge(p, q)) return false;
            return true;
    }
    return false;
}

EdgePair make_edge_pair(const Edge& a, const Edge& b) {
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
}

std::vector<Candidate> candidate_configs(const CubicGraph& g, int b, int c, SpreadThreshold t) {
    if (b == c || g.has_edge(b, c))
        throw GraphError(ErrorCode::PreconditionViolated, "b and c must be distinct non-adjacent");
    if (t == SpreadThreshold::Distinct)
        throw GraphError(ErrorCode::PreconditionViolated, "no vertex procedure for Distinct");

    std::vector<Candidate> out;
    for (int d : g.neighbors(c)) {
        if (d == b) continue;
        if (t != SpreadThreshold::AtLeast11 && g.has_edge(b, d)) continue;
        for (int a : g.neighbors(b)) {
            if (a == c || a == d) continue;
            if (t == SpreadThreshold::AtLeast22 &&
                (g.has_edge(a, c) || g.has_edge(a, d)))
                continue;
            out.push_back({b, c, d, a});
        }
    }
    return out;
}

std::set<EdgePair> candidate_pairs(const CubicGraph& g, SpreadThreshold t) {
    std::set<EdgePair> out;
    if (t == SpreadThreshold::Distinct) {
        auto es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                out.insert(make_edge_pair(es[i], es[j]));
        return out;
    }
    for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c) {
            if (b == c || g.has_edge(b, c)) continue;
            for (const Candidate& cand : candidate_configs(g, b, c, t))
                out.insert(make_edge_pair(cand.edge_ab(), cand.edge_cd()));
        }
    return out;
}

}  // namespace c4c
