#pragma once

#include "c4c/graph.hpp"

namespace c4c {

// Parameters of one bridge addition: e1 = ab gets subdivision vertex x = n,
// e2 = cd gets y = n+1.
struct BridgeSpec {
    Edge e1;
    Edge e2;
    int x = 0;
    int y = 0;
};

// Subdivide e1 with x and e2 with y, join x and y. Adds 2 vertices, 3 edges.
CubicGraph bridge(const CubicGraph& g, const Edge& e1, const Edge& e2);

struct UnbridgeResult {
    CubicGraph graph;
    // relabel[old_id] = new dense id, or -1 for the two removed vertices.
    std::vector<int> relabel;
};

// Inverse of bridging: delete xy, contract one remaining edge at each
// endpoint. Fails with SimplicityViolation if a contraction would create
// a loop or parallel edge.
UnbridgeResult unbridge(const CubicGraph& g, const Edge& xy);

// Plain deletion / contraction; results need not be cubic. Contraction
// merges the endpoints into the smaller id and refuses parallel edges.
SimpleGraph delete_edge(const CubicGraph& g, const Edge& e);
SimpleGraph contract_edge(const CubicGraph& g, const Edge& e);

}  // namespace c4c
