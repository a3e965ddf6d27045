#include "anyd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anyd/errors.hpp"

namespace anyd {

Path extract_path(const Matrix<double>& dist, const Matrix<int64_t>& pred,
                  NodeCoord source, NodeCoord target, const Lattice& lattice) {
    const GridDims dims = lattice.dims();
    const int64_t src = linear_index(source, dims);
    const int64_t dst = linear_index(target, dims);
    if (!std::isfinite(dist.at(target.row, target.col)))
        throw UnreachableError("target not reached");

    std::vector<NodeCoord> reversed;
    int64_t cur = dst;
    for (int64_t steps = 0;; ++steps) {
        if (steps > dims.node_count())
            throw CorruptionError("pred trace exceeds node count (cycle?)");
        reversed.push_back(to_coords(cur, dims));
        if (cur == src) break;
        const int64_t p = pred.data()[cur];
        if (p < 0 || p >= dims.node_count())
            throw CorruptionError("pred chain broken at node " + std::to_string(cur));
        cur = p;
    }
    std::reverse(reversed.begin(), reversed.end());

    Path path;
    path.nodes = std::move(reversed);
    for (size_t k = 1; k < path.nodes.size(); ++k) {
        try {
            path.cost += lattice.edge_cost(path.nodes[k - 1], path.nodes[k]);
        } catch (const ValidationError&) {
            throw CorruptionError("pred links non-adjacent nodes");
        }
    }
    path.turns = count_turns(path.nodes);
    return path;
}

Path extract_path(const SolveResult& result, NodeCoord source, NodeCoord target,
                  const Lattice& lattice) {
    return extract_path(result.bed, result.pred, source, target, lattice);
}

Path extract_path(const ExactResult& result, NodeCoord source, NodeCoord target,
                  const Lattice& lattice) {
    return extract_path(result.dist, result.pred, source, target, lattice);
}

int64_t count_turns(std::span<const NodeCoord> nodes) {
    int64_t turns = 0;
    int prev_axis = 0;
    for (size_t k = 1; k < nodes.size(); ++k) {
        const int axis = nodes[k].col == nodes[k - 1].col ? 1 : 2;
        if (prev_axis != 0 && axis != prev_axis) ++turns;
        prev_axis = axis;
    }
    return turns;
}

ErrorReport error_vs_oracle(const Matrix<double>& approx, const ExactResult& exact) {
    if (approx.rows() != exact.dist.rows() || approx.cols() != exact.dist.cols())
        throw DimensionError("field shapes differ");
    ErrorReport rep;
    const double* a = approx.data();
    const double* e = exact.dist.data();
    for (int64_t k = 0; k < approx.size(); ++k) {
        if (!std::isfinite(e[k])) continue;
        if (std::isfinite(a[k])) {
            const double err = std::abs(a[k] - e[k]);
            rep.l1 += err;
            rep.linf = std::max(rep.linf, err);
            if (err > 1e-9 * (1.0 + std::abs(e[k]))) ++rep.mismatched;
        } else {
            rep.l1 += e[k]; // unreached counts as maximal error
            rep.linf = std::max(rep.linf, e[k]);
            ++rep.mismatched;
        }
    }
    return rep;
}

std::vector<TraceEntry> convergence_trace(
    const Lattice& lattice, NodeCoord source, const SolveOptions& opts,
    const std::function<void(const IterationReport&, const Matrix<double>&)>& snapshot) {
    const ExactResult exact = dijkstra_reference(lattice, source);
    std::vector<TraceEntry> entries;

    SolveOptions run = opts;
    const auto user_observer = opts.on_iteration;
    run.on_iteration = [&](const IterationReport& report, const Matrix<double>& bed) {
        if (snapshot) snapshot(report, bed);
        entries.push_back({report, error_vs_oracle(bed, exact)});
        return user_observer ? user_observer(report, bed) : true;
    };
    solve(lattice, source, run);
    return entries;
}

} // namespace anyd
