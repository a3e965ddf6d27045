#include "anyd/solver.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "anyd/errors.hpp"
#include "anyd/parallel.hpp"

namespace anyd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SolverState init_state(const Lattice& lattice, NodeCoord source) {
    const GridDims dims = lattice.dims();
    const int64_t src = linear_index(source, dims); // throws IndexError

    SolverState s;
    s.dims = dims;
    s.source = source;
    s.bed = Matrix<double>(dims.height, dims.width, kInf);
    s.bed_scratch = Matrix<double>(dims.width, dims.height);
    s.pred = Matrix<int64_t>(dims.height, dims.width, -1);
    s.upd = Matrix<uint8_t>(dims.height, dims.width, 0);
    s.dirty_cols.assign(static_cast<size_t>(dims.width), 0);
    s.dirty_rows.assign(static_cast<size_t>(dims.height), 0);

    s.bed.at(source.row, source.col) = 0.0;
    s.pred.at(source.row, source.col) = src;
    s.upd.at(source.row, source.col) = 1;
    s.dirty_cols[static_cast<size_t>(source.col)] = 1;
    s.dirty_rows[static_cast<size_t>(source.row)] = 1;
    return s;
}

int64_t relax_column(std::span<double> bed, std::span<const double> edge_costs,
                     int64_t* pred, uint8_t* upd,
                     int64_t line_base, int64_t node_stride) {
    const int64_t len = static_cast<int64_t>(bed.size());
    assert(static_cast<int64_t>(edge_costs.size()) == len - 1);
    int64_t updates = 0;
    for (int64_t x = 1; x < len; ++x) {
        const double c = bed[x - 1] + edge_costs[x - 1];
        if (c < bed[x]) {
            bed[x] = c;
            const int64_t at = line_base + x * node_stride;
            pred[at] = at - node_stride;
            if (!upd[at]) {
                upd[at] = 1;
                ++updates;
            }
        }
    }
    for (int64_t x = len - 2; x >= 0; --x) {
        const double c = bed[x + 1] + edge_costs[x];
        if (c < bed[x]) {
            bed[x] = c;
            const int64_t at = line_base + x * node_stride;
            pred[at] = at + node_stride;
            if (!upd[at]) {
                upd[at] = 1;
                ++updates;
            }
        }
    }
    return updates;
}

int64_t sweep(SolverState& state, const Lattice& lattice, const SolveOptions& opts) {
    const bool vertical = state.orientation == Orientation::Vertical;
    const Matrix<double>& costs = vertical ? lattice.vcost() : lattice.tvcost();
    const int64_t n_lines = state.bed.cols();
    const int64_t line_len = state.bed.rows();
    const int64_t height = state.dims.height;
    std::vector<uint8_t>& my_dirty = vertical ? state.dirty_cols : state.dirty_rows;
    std::vector<uint8_t>& other_dirty = vertical ? state.dirty_rows : state.dirty_cols;

    // upd reflects this sweep only; clear it up front (canonical layout).
    parallel_chunks(state.dims.width, opts.threads,
                    [&](int64_t b, int64_t e, int64_t) {
                        std::fill(state.upd.col(b), state.upd.col(b) + (e - b) * height, uint8_t{0});
                    });

    const auto n_chunks = chunk_count(n_lines, opts.threads);
    std::vector<int64_t> chunk_updates(static_cast<size_t>(n_chunks), 0);
    int64_t* pred = state.pred.data();
    uint8_t* upd = state.upd.data();

    parallel_chunks(n_lines, opts.threads, [&](int64_t begin, int64_t end, int64_t chunk) {
        int64_t local = 0;
        for (int64_t c = begin; c < end; ++c) {
            if (opts.skip_clean_lines && !my_dirty[static_cast<size_t>(c)]) continue;
            const int64_t base = vertical ? c * height : c;
            const int64_t stride = vertical ? 1 : height;
            local += relax_column(std::span<double>(state.bed.col(c), static_cast<size_t>(line_len)),
                                  std::span<const double>(costs.col(c), static_cast<size_t>(line_len - 1)),
                                  pred, upd, base, stride);
        }
        chunk_updates[static_cast<size_t>(chunk)] = local;
    });

    int64_t total = 0;
    for (int64_t u : chunk_updates) total += u;

    if (opts.skip_clean_lines) {
        // Every dirty line of this orientation was just consumed; nodes
        // improved here make their cross line pending for the next sweep.
        std::fill(my_dirty.begin(), my_dirty.end(), uint8_t{0});
        for (int64_t j = 0; j < state.dims.width; ++j) {
            const uint8_t* col = state.upd.col(j);
            for (int64_t i = 0; i < height; ++i)
                if (col[i]) other_dirty[static_cast<size_t>(vertical ? i : j)] = 1;
        }
    }

    // Flip orientation: bed moves to the other layout.
    parallel_chunks(state.bed_scratch.cols(), opts.threads,
                    [&](int64_t b, int64_t e, int64_t) {
                        transpose_into(state.bed, state.bed_scratch, b, e);
                    });
    std::swap(state.bed, state.bed_scratch);
    state.orientation = vertical ? Orientation::Horizontal : Orientation::Vertical;
    return total;
}

IterationReport iterate(SolverState& state, const Lattice& lattice, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool started_vertical = state.orientation == Orientation::Vertical;
    const int64_t first = sweep(state, lattice, opts);
    const int64_t second = sweep(state, lattice, opts);
    ++state.iteration;
    state.last_iteration_updates = first + second;

    IterationReport report;
    report.iteration = state.iteration;
    report.updates_vertical = started_vertical ? first : second;
    report.updates_horizontal = started_vertical ? second : first;
    report.wall_time = std::chrono::steady_clock::now() - t0;
    return report;
}

bool converged(const SolverState& state) {
    return state.last_iteration_updates == 0 || state.dims.node_count() == 1;
}

SolveResult solve(const Lattice& lattice, NodeCoord source, const SolveOptions& opts) {
    if (opts.max_iterations && *opts.max_iterations < 1)
        throw std::invalid_argument("max_iterations must be >= 1");
    const int64_t cap = opts.max_iterations.value_or(lattice.node_count() + 1);

    SolverState state = init_state(lattice, source);
    SolveResult result;
    result.reports.reserve(16);

    for (int64_t k = 0; k < cap; ++k) {
        const IterationReport report = iterate(state, lattice, opts);
        result.reports.push_back(report);
        bool keep_going = true;
        if (opts.on_iteration) keep_going = opts.on_iteration(report, state.bed);
        if (report.updates_total() == 0) {
            result.converged = true;
            break;
        }
        if (!keep_going) break; // external cancellation: anytime result
    }

    result.k_iterations = state.iteration;
    result.bed = std::move(state.bed);
    result.pred = std::move(state.pred);
    return result;
}

} // namespace anyd
