#pragma once

#include "c4c/spread.hpp"

namespace c4c {

// Outcome of walking a spread-(1,1) bridge along the ladder of 4-cycles:
// either a replacement pair with spread >= (1,2) whose bridged result is
// isomorphic, or the host is recognized as a ladder / Moebius ladder.
struct ExchangeOutcome {
    enum class Tag { WiderPair, Ladder, Moebius } tag;
    Edge e1, e2;  // valid for WiderPair
    int k = 0;    // valid for Ladder / Moebius
};

// Precondition: h is cubic (by type), triangle-free, 2-connected, n >= 8,
// and cycle_spread(h, e1, e2) = (1,1).
ExchangeOutcome exchange_to_wider(const CubicGraph& h, const Edge& e1, const Edge& e2);

}  // namespace c4c
