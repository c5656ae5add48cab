#pragma once

#include <optional>
#include <set>
#include <vector>

#include "c4c/graph.hpp"

namespace c4c {

// Sorted pair of connecting-path lengths on a smallest cycle through two
// edges. (0,0) iff the edges are identical.
struct CycleSpread {
    int i = 0;
    int j = 0;
    auto operator<=>(const CycleSpread&) const = default;
};

enum class SpreadThreshold {
    Distinct,    // any pair of distinct edges
    AtLeast11,   // non-adjacent
    AtLeast12,   // non-adjacent, not in a common 4-cycle
    AtLeast22,   // endpoint neighborhoods disjoint
};

// Smallest cycle through both edges; among minimum-length cycles the
// lexicographically smallest (i,j) split. nullopt if no common cycle.
std::optional<CycleSpread> cycle_spread(const CubicGraph& g, const Edge& e1, const Edge& e2);

// Local adjacency criteria (not a full spread computation). Equivalent to
// spread >= (1,1) / (1,2) on 2-connected triangle-free graphs; AtLeast22
// is the sufficient endpoint-neighborhood criterion for spread >= (2,2).
bool meets_threshold(const CubicGraph& g, const Edge& e1, const Edge& e2, SpreadThreshold t);

using EdgePair = std::pair<Edge, Edge>;  // stored with first < second

EdgePair make_edge_pair(const Edge& a, const Edge& b);

// One (b,c,d,a) selection from the vertex-pair procedure; the bridged
// edges are ab and cd.
struct Candidate {
    int b, c, d, a;
    Edge edge_ab() const { return Edge(a, b); }
    Edge edge_cd() const { return Edge(c, d); }
};

// All selections for one non-adjacent vertex pair (b,c) at threshold t.
std::vector<Candidate> candidate_configs(const CubicGraph& g, int b, int c, SpreadThreshold t);

// Deduplicated unordered edge pairs over all non-adjacent vertex pairs
// (Distinct enumerates all distinct edge pairs directly).
std::set<EdgePair> candidate_pairs(const CubicGraph& g, SpreadThreshold t);

}  // namespace c4c
