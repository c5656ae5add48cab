#include "c4c/exchange.hpp"

#include "c4c/structure.hpp"

namespace c4c {

static bool triangle_free(const CubicGraph& g) {
    for (const Edge& e : g.edges())
        for (int w : g.neighbors(e.u))
            if (w != e.v && g.has_edge(w, e.v)) return false;
    return true;
}

ExchangeOutcome exchange_to_wider(const CubicGraph& h, const Edge& e1, const Edge& e2) {
    if (h.order() < 8 || !triangle_free(h) || vertex_connectivity(h) < 2)
        throw GraphError(ErrorCode::PreconditionViolated,
                         "host must be triangle-free, 2-connected, n >= 8");
    if (!meets_threshold(h, e1, e2, SpreadThreshold::AtLeast11) ||
        meets_threshold(h, e1, e2, SpreadThreshold::AtLeast12))
        throw GraphError(ErrorCode::PreconditionViolated, "pair must have cycle spread (1,1)");

    // Orient the 4-cycle: pair {ab, cd} with cross edges ac, bd. In a
    // triangle-free graph the endpoint pairing is unique.
    int a, b, c, d;
    if (h.has_edge(e1.u, e2.u)) {
        a = e1.u;
        c = e2.u;
        b = e1.v;
        d = e2.v;
    } else {
        a = e1.u;
        c = e2.v;
        b = e1.v;
        d = e2.u;
    }
    // Exit via the endpoints of the larger cross edge.
    if (Edge(a, c) > Edge(b, d)) {
        std::swap(a, b);
        std::swap(c, d);
    }

    const EdgePair start = make_edge_pair(e1, e2);
    for (int step = 0; step <= h.order(); ++step) {
        int e = h.third_neighbor(b, a, d);
        int f = h.third_neighbor(d, c, b);
        Edge next1(b, e), next2(d, f);  // next1 carries x (it shares b with ab)
        if (make_edge_pair(next1, next2) == start) {
            int k = h.order() / 2;
            if (next1 == e1) return {ExchangeOutcome::Tag::Ladder, {}, {}, k};
            return {ExchangeOutcome::Tag::Moebius, {}, {}, k};
        }
        if (!h.has_edge(e, f)) return {ExchangeOutcome::Tag::WiderPair, next1, next2, 0};
        a = b;
        b = e;
        c = d;
        d = f;
    }
    throw GraphError(ErrorCode::PreconditionViolated, "exchange walk failed to terminate");
}

}  // namespace c4c
