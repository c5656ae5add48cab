#pragma once

#include <optional>
#include <vector>

#include "c4c/graph.hpp"

namespace c4c {

struct CutWitness {
    std::vector<Edge> edges;
    std::vector<int> side_a;
    std::vector<int> side_b;
    bool both_cyclic = false;
};

struct StructureReport {
    int girth = 0;
    int vertex_connectivity = 0;
    bool cyclic_4 = false;
    bool cyclic_5 = false;
    bool planar = false;
    int chromatic_class = 0;  // 3 or 4
    std::optional<CutWitness> witness;
};

int girth(const CubicGraph& g);

// Minimum separator size, capped at 3 by cubicity.
int vertex_connectivity(const CubicGraph& g);

// Exhaustive search for a cycle-separating edge-cut of size < k, k in {4,5}.
std::optional<CutWitness> find_cycle_separating_cut(const CubicGraph& g, int k);

bool is_cyclically_k_connected(const CubicGraph& g, int k);

bool is_planar(const CubicGraph& g);
bool is_planar(const SimpleGraph& g);

// 3 if a proper 3-edge-coloring exists, else 4.
int edge_chromatic_class(const CubicGraph& g);

bool has_cut_edge(const CubicGraph& g);

// Bridgeless and edge-chromatic class 4.
bool is_snark(const CubicGraph& g);

StructureReport structure_report(const CubicGraph& g);

}  // namespace c4c
