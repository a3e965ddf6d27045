#pragma once

#include <cstdint>

#include "anyd/lattice.hpp"
#include "anyd/matrix.hpp"

namespace anyd {

struct ExactResult {
    Matrix<double> dist;   // H x W
    Matrix<int64_t> pred;  // canonical linear indices, -1 = none
};

struct TurnAnnotatedResult {
    Matrix<double> dist;
    Matrix<int64_t> min_turns; // minimum turn count among minimum-cost paths
};

// Classical heap Dijkstra: binary min-heap, decrease-key by reinsertion,
// stale entries skipped. Ties pop the lower linear index first, so pred is
// deterministic. Correctness reference, not tuned for speed.
ExactResult dijkstra_reference(const Lattice& lattice, NodeCoord source);

// Exhaustive minimum over ALL simple paths; requires H*W <= 16 (SizeError).
double brute_force_distance(const Lattice& lattice, NodeCoord source, NodeCoord target);
Matrix<double> brute_force_distances(const Lattice& lattice, NodeCoord source);

// Dijkstra over (node, incoming-axis) states with lexicographic
// (cost, turns) keys; costs compared exactly. A turn is a change of axis
// between consecutive edges.
TurnAnnotatedResult min_turn_oracle(const Lattice& lattice, NodeCoord source);

} // namespace anyd
