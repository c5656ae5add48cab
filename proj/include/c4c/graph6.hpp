#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "c4c/graph.hpp"

namespace c4c {

// Standard graph6 short form for simple undirected graphs, n <= 62.
std::string to_graph6(const CubicGraph& g);
CubicGraph from_graph6(const std::string& line);

// One graph per line; edge-list files are detected by their "n m" header.
std::vector<CubicGraph> read_graph_file(std::istream& in);
std::vector<CubicGraph> read_graph_file(const std::string& path);

}  // namespace c4c
