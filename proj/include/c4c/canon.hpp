#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "c4c/graph.hpp"

namespace c4c {

// Canonical byte string: n, then the upper-triangle adjacency bits of the
// canonically relabeled graph, packed row-major. Equal iff isomorphic.
using Certificate = std::vector<std::uint8_t>;

Certificate certificate(const CubicGraph& g);

std::string to_hex(const Certificate& c);

bool are_isomorphic(const CubicGraph& g, const CubicGraph& h);

// First representative per certificate, keyed (and therefore sorted) by
// certificate bytes.
std::map<Certificate, CubicGraph> dedup(const std::vector<CubicGraph>& graphs);

}  // namespace c4c
