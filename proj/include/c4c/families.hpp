#pragma once

#include "c4c/graph.hpp"

namespace c4c {

// Named constructors with fixed labelings.

// Circular ladder Q_{2k}: outer cycle 0..k-1, inner cycle k..2k-1,
// rungs {i, k+i}. k=3 is the prism; k >= 4 is cyclically 4-connected.
CubicGraph ladder(int k);

// Moebius ladder V_{2k}: cycle 0,1,...,2k-1,0 plus chords {i, i+k}.
// V6 is K3,3.
CubicGraph moebius(int k);

// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9
// (5+i adjacent to 5+((i+2) mod 5)), spokes {i, i+5}.
CubicGraph petersen();

// W3 = K4.
CubicGraph wheel3();

}  // namespace c4c
