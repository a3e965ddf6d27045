#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "anyd/lattice.hpp"
#include "anyd/matrix.hpp"

namespace anyd {

enum class Orientation { Vertical, Horizontal };

struct IterationReport {
    int64_t iteration = 0;
    int64_t updates_vertical = 0;
    int64_t updates_horizontal = 0;
    std::chrono::duration<double, std::milli> wall_time{0.0};

    int64_t updates_total() const { return updates_vertical + updates_horizontal; }
};

struct SolveOptions {
    // Safety cap defaults to H*W + 1 (never reached in practice); must be
    // >= 1 when given.
    std::optional<int64_t> max_iterations;
    int threads = 1;
    // Opt-in: skip lines whose dirty bit is clear. Off by default; results
    // are identical either way (tested), skipping only saves work.
    bool skip_clean_lines = false;
    // Called after each full iteration, outside the parallel region, with
    // the report and the distance field in original (vertical) layout.
    // Return false to stop early with an anytime result.
    std::function<bool(const IterationReport&, const Matrix<double>&)> on_iteration;
};

// Solver fields. BED lives in the layout of the current orientation and is
// re-transposed at every orientation flip (ping-pong with bed_scratch), so
// a sweep always reads its line contiguously. PRED and UPD are write-only
// inside a sweep, so they stay in canonical (vertical, column-major) layout
// and horizontal sweeps write them strided. pred holds canonical linear
// indices (-1 = none).
struct SolverState {
    GridDims dims;
    NodeCoord source;
    Orientation orientation = Orientation::Vertical;
    int64_t iteration = 0;
    int64_t last_iteration_updates = -1; // -1 until the first full iteration

    Matrix<double> bed;
    Matrix<double> bed_scratch;
    Matrix<int64_t> pred;
    Matrix<uint8_t> upd;

    // Pending-work flags per original column / row. Seeded from the source
    // at init; a line stays dirty until a sweep of its orientation runs it.
    std::vector<uint8_t> dirty_cols;
    std::vector<uint8_t> dirty_rows;

    double distance_at(NodeCoord c) const {
        return orientation == Orientation::Vertical ? bed.at(c.row, c.col)
                                                    : bed.at(c.col, c.row);
    }
};

struct SolveResult {
    Matrix<double> bed;
    Matrix<int64_t> pred;
    int64_t k_iterations = 0;
    std::vector<IterationReport> reports;
    bool converged = false;
};

// bed[source]=0, pred[source]=source, upd[source]=true, everything else
// +inf / -1 / false. Throws IndexError on an out-of-bounds source.
SolverState init_state(const Lattice& lattice, NodeCoord source);

// Two linear relaxation passes over one line: downward
// bed[x] = min(bed[x], bed[x-1] + edge[x-1]), then the symmetric upward
// pass. Equivalent to relaxing from every in-line source (tested property).
// Updates only on strict improvement; ties keep the existing value.
// Node x of the line lives at canonical index line_base + x*node_stride;
// upd entries for the line must be zero on entry. Returns the number of
// distinct nodes improved.
int64_t relax_column(std::span<double> bed, std::span<const double> edge_costs,
                     int64_t* pred, uint8_t* upd,
                     int64_t line_base, int64_t node_stride);

// Relaxes every line of the current orientation (vcost for vertical lines,
// tvcost for horizontal ones), marks upd exactly for the nodes improved in
// this sweep, then flips orientation (transposing bed). Lines are disjoint
// work units; any thread count yields bitwise-identical results.
int64_t sweep(SolverState& state, const Lattice& lattice, const SolveOptions& opts = {});

// One vertical sweep then one horizontal sweep.
IterationReport iterate(SolverState& state, const Lattice& lattice,
                        const SolveOptions& opts = {});

// True iff the last full iteration produced zero updates (a fresh 1x1
// lattice is born converged).
bool converged(const SolverState& state);

SolveResult solve(const Lattice& lattice, NodeCoord source, const SolveOptions& opts = {});

} // namespace anyd
