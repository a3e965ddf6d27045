#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "anyd/lattice.hpp"
#include "anyd/matrix.hpp"
#include "anyd/oracle.hpp"
#include "anyd/solver.hpp"

namespace anyd {

struct Path {
    std::vector<NodeCoord> nodes; // source first, target last
    double cost = 0.0;
    int64_t turns = 0;
};

struct ErrorReport {
    double l1 = 0.0;
    double linf = 0.0;
    int64_t mismatched = 0; // |approx-exact| > 1e-9 * (1 + |exact|)
};

struct TraceEntry {
    IterationReport report;
    ErrorReport error;
};

// Walks pred from target back to the source and recomputes the path cost
// from edge costs. UnreachableError if dist[target] is infinite;
// CorruptionError on a broken chain (cycle, non-adjacent link, missing
// pred, or a trace longer than H*W).
Path extract_path(const Matrix<double>& dist, const Matrix<int64_t>& pred,
                  NodeCoord source, NodeCoord target, const Lattice& lattice);

Path extract_path(const SolveResult& result, NodeCoord source, NodeCoord target,
                  const Lattice& lattice);
Path extract_path(const ExactResult& result, NodeCoord source, NodeCoord target,
                  const Lattice& lattice);

// Number of axis changes between consecutive edges.
int64_t count_turns(std::span<const NodeCoord> nodes);

// Compares an approximate distance field against the exact one. Nodes the
// exact field cannot reach are skipped; an unreached approximate node
// contributes its exact distance to l1/linf and counts as mismatched.
ErrorReport error_vs_oracle(const Matrix<double>& approx, const ExactResult& exact);

// Runs the heap oracle once, then the sweep solver, recording the error
// after every iteration. The final entry of a converged run has
// mismatched == 0. `snapshot`, if given, sees each iteration's distance
// field before the error is computed.
std::vector<TraceEntry> convergence_trace(
    const Lattice& lattice, NodeCoord source, const SolveOptions& opts = {},
    const std::function<void(const IterationReport&, const Matrix<double>&)>& snapshot = {});

} // namespace anyd
