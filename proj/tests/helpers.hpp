#pragma once

// Shared test fixtures and the independent reference implementations the
// property tests check the production code against. Everything here is
// deliberately naive: enumeration and per-source walks, no shared code with
// the solver paths under test.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "anyd/lattice.hpp"
#include "anyd/matrix.hpp"
#include "anyd/rng.hpp"
#include "anyd/solver.hpp"

namespace anyd::testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Row-major initializer helper: values.size() == rows*cols.
inline Matrix<double> mat(int64_t rows, int64_t cols, const std::vector<double>& values) {
    Matrix<double> m(rows, cols);
    for (int64_t i = 0; i < rows; ++i)
        for (int64_t j = 0; j < cols; ++j)
            m.at(i, j) = values[static_cast<size_t>(i * cols + j)];
    return m;
}

// The 4-node 2x2 lattice used across the suite:
//   A=(0,0)  B=(0,1)
//   C=(1,0)  D=(1,1)
// vertical edges A-C=1, B-D=1; horizontal edges A-B=1, C-D=2.
// Best A->D path is A,B,D with cost 2 (A,C,D costs 3).
inline Lattice proof_lattice() {
    return make_lattice(GridDims{2, 2}, mat(1, 2, {1, 1}), mat(2, 1, {1, 2}));
}

// --- reference 1: the paper's per-updated-source column relaxation -------
// For every source u flagged in `sources`, walks down and then up from u
// accumulating edge costs onto the pre-pass snapshot of bed[u], updating
// strictly better targets. Used to check the production two-pass form.
struct ColumnRef {
    std::vector<double> bed;
    std::vector<int64_t> pred; // canonical indices, same base/stride scheme
    int64_t updates = 0;
};

inline ColumnRef relax_column_reference(std::vector<double> bed,
                                        const std::vector<double>& edges,
                                        std::vector<int64_t> pred,
                                        int64_t base, int64_t stride,
                                        const std::vector<uint8_t>& sources) {
    const auto len = static_cast<int64_t>(bed.size());
    const std::vector<double> snapshot = bed;
    std::vector<uint8_t> improved(bed.size(), 0);
    for (int64_t u = 0; u < len; ++u) {
        if (!sources[static_cast<size_t>(u)]) continue;
        double c = snapshot[static_cast<size_t>(u)];
        for (int64_t x = u + 1; x < len; ++x) { // downward from u
            c = c + edges[static_cast<size_t>(x - 1)];
            if (c < bed[static_cast<size_t>(x)]) {
                bed[static_cast<size_t>(x)] = c;
                pred[static_cast<size_t>(x)] = base + (x - 1) * stride;
                improved[static_cast<size_t>(x)] = 1;
            }
        }
        c = snapshot[static_cast<size_t>(u)];
        for (int64_t x = u - 1; x >= 0; --x) { // upward from u
            c = c + edges[static_cast<size_t>(x)];
            if (c < bed[static_cast<size_t>(x)]) {
                bed[static_cast<size_t>(x)] = c;
                pred[static_cast<size_t>(x)] = base + (x + 1) * stride;
                improved[static_cast<size_t>(x)] = 1;
            }
        }
    }
    ColumnRef out{std::move(bed), std::move(pred), 0};
    for (uint8_t f : improved) out.updates += f;
    return out;
}

// --- reference 2: per-sweep distances by simple-path enumeration ---------
// After a prefix of sweeps, the solver's bed must equal the minimum cost
// over simple paths whose sequence of axis runs embeds (in order) into the
// sweep sequence. Tiny lattices only.
namespace detail {

inline void enumerate_paths(const Lattice& lat, NodeCoord at, uint32_t visited,
                            double cost, std::vector<int>& runs,
                            const std::vector<Orientation>& sweeps,
                            Matrix<double>& best) {
    // greedy embedding check: runs must map to sweeps in order
    size_t si = 0;
    bool ok = true;
    for (int r : runs) {
        while (si < sweeps.size() &&
               (sweeps[si] == Orientation::Vertical ? 1 : 2) != r)
            ++si;
        if (si == sweeps.size()) {
            ok = false;
            break;
        }
        ++si;
    }
    if (ok && cost < best.at(at.row, at.col)) best.at(at.row, at.col) = cost;

    const GridDims dims = lat.dims();
    const struct {
        int64_t di, dj;
        int axis;
    } steps[4] = {{1, 0, 1}, {-1, 0, 1}, {0, 1, 2}, {0, -1, 2}};
    for (const auto& s : steps) {
        const NodeCoord next{at.row + s.di, at.col + s.dj};
        if (!in_bounds(next, dims)) continue;
        const auto bit = 1u << linear_index(next, dims);
        if (visited & bit) continue;
        const bool new_run = runs.empty() || runs.back() != s.axis;
        if (new_run) runs.push_back(s.axis);
        enumerate_paths(lat, next, visited | bit, cost + lat.edge_cost(at, next),
                        runs, sweeps, best);
        if (new_run) runs.pop_back();
    }
}

} // namespace detail

inline Matrix<double> run_embedding_distances(const Lattice& lat, NodeCoord source,
                                              const std::vector<Orientation>& sweeps) {
    Matrix<double> best(lat.dims().height, lat.dims().width, kInf);
    std::vector<int> runs;
    detail::enumerate_paths(lat, source, 1u << linear_index(source, lat.dims()),
                            0.0, runs, sweeps, best);
    return best;
}

// Random field helpers for property tests.
inline std::vector<double> random_column(SplitMix64& gen, int64_t len,
                                         double inf_fraction) {
    std::vector<double> bed(static_cast<size_t>(len));
    for (auto& v : bed)
        v = gen.next_unit() < inf_fraction ? kInf : gen.next_unit() * 10.0;
    return bed;
}

inline std::vector<double> random_edges(SplitMix64& gen, int64_t len,
                                        double zero_fraction) {
    std::vector<double> e(static_cast<size_t>(len));
    for (auto& v : e) v = gen.next_unit() < zero_fraction ? 0.0 : gen.next_unit();
    return e;
}

} // namespace anyd::testing
