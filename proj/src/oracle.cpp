#include "anyd/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "anyd/errors.hpp"

namespace anyd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Neighbors of a canonical linear index: (index, edge cost, axis) with
// axis 1 = vertical edge, 2 = horizontal edge.
struct Neighbor {
    int64_t idx;
    double cost;
    int axis;
};

struct NeighborList {
    std::array<Neighbor, 4> items;
    int count = 0;
    void add(int64_t idx, double w, int axis) {
        items[static_cast<size_t>(count++)] = {idx, w, axis};
    }
};

NeighborList neighbors_of(const Lattice& lat, int64_t idx) {
    const int64_t h = lat.dims().height;
    const int64_t i = idx % h;
    const int64_t j = idx / h;
    NeighborList out;
    if (i > 0) out.add(idx - 1, lat.vcost().at(i - 1, j), 1);
    if (i < h - 1) out.add(idx + 1, lat.vcost().at(i, j), 1);
    if (j > 0) out.add(idx - h, lat.hcost().at(i, j - 1), 2);
    if (j < lat.dims().width - 1) out.add(idx + h, lat.hcost().at(i, j), 2);
    return out;
}

} // namespace

ExactResult dijkstra_reference(const Lattice& lattice, NodeCoord source) {
    const GridDims dims = lattice.dims();
    const int64_t src = linear_index(source, dims);

    ExactResult res;
    res.dist = Matrix<double>(dims.height, dims.width, kInf);
    res.pred = Matrix<int64_t>(dims.height, dims.width, -1);
    double* dist = res.dist.data(); // flat index == canonical linear index
    int64_t* pred = res.pred.data();

    using Entry = std::pair<double, int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    dist[src] = 0.0;
    pred[src] = src;
    heap.push({0.0, src});

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue; // stale reinserted entry
        const NeighborList nb = neighbors_of(lattice, u);
        for (int k = 0; k < nb.count; ++k) {
            const auto [v, w, axis] = nb.items[static_cast<size_t>(k)];
            (void)axis;
            const double c = d + w;
            if (c < dist[v]) {
                dist[v] = c;
                pred[v] = u;
                heap.push({c, v});
            }
        }
    }
    return res;
}

namespace {

void brute_force_dfs(const Lattice& lat, int64_t node, uint32_t visited,
                     double cost, double* best) {
    if (cost < best[node]) best[node] = cost;
    const NeighborList nb = neighbors_of(lat, node);
    for (int k = 0; k < nb.count; ++k) {
        const auto [v, w, axis] = nb.items[static_cast<size_t>(k)];
        (void)axis;
        if (visited & (1u << v)) continue;
        brute_force_dfs(lat, v, visited | (1u << v), cost + w, best);
    }
}

} // namespace

Matrix<double> brute_force_distances(const Lattice& lattice, NodeCoord source) {
    const GridDims dims = lattice.dims();
    if (dims.node_count() > 16)
        throw SizeError("brute force limited to lattices with at most 16 nodes");
    const int64_t src = linear_index(source, dims);
    Matrix<double> best(dims.height, dims.width, kInf);
    brute_force_dfs(lattice, src, 1u << src, 0.0, best.data());
    return best;
}

double brute_force_distance(const Lattice& lattice, NodeCoord source, NodeCoord target) {
    const Matrix<double> best = brute_force_distances(lattice, source);
    return best.at(target.row, target.col);
}

TurnAnnotatedResult min_turn_oracle(const Lattice& lattice, NodeCoord source) {
    const GridDims dims = lattice.dims();
    const int64_t n = dims.node_count();
    const int64_t src = linear_index(source, dims);

    // States: (node, incoming axis). Axis 0 = none (source), 1 = vertical,
    // 2 = horizontal. State id = node*3 + axis.
    std::vector<double> cost(static_cast<size_t>(3 * n), kInf);
    std::vector<int64_t> turns(static_cast<size_t>(3 * n), 0);

    using Entry = std::tuple<double, int64_t, int64_t>; // (cost, turns, state)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    cost[static_cast<size_t>(src * 3)] = 0.0;
    heap.push({0.0, 0, src * 3});

    while (!heap.empty()) {
        const auto [c, t, s] = heap.top();
        heap.pop();
        const auto si = static_cast<size_t>(s);
        if (c > cost[si] || (c == cost[si] && t > turns[si])) continue;
        const int64_t node = s / 3;
        const int64_t axis = s % 3;
        const NeighborList nb = neighbors_of(lattice, node);
        for (int k = 0; k < nb.count; ++k) {
            const auto [v, w, edge_axis] = nb.items[static_cast<size_t>(k)];
            const double nc = c + w;
            const int64_t nt = t + ((axis != 0 && axis != edge_axis) ? 1 : 0);
            const auto vi = static_cast<size_t>(v * 3 + edge_axis);
            if (nc < cost[vi] || (nc == cost[vi] && nt < turns[vi])) {
                cost[vi] = nc;
                turns[vi] = nt;
                heap.push({nc, nt, v * 3 + edge_axis});
            }
        }
    }

    TurnAnnotatedResult res;
    res.dist = Matrix<double>(dims.height, dims.width, kInf);
    res.min_turns = Matrix<int64_t>(dims.height, dims.width, 0);
    for (int64_t node = 0; node < n; ++node) {
        double bc = kInf;
        int64_t bt = 0;
        for (int64_t axis = 0; axis < 3; ++axis) {
            const auto si = static_cast<size_t>(node * 3 + axis);
            if (cost[si] < bc || (cost[si] == bc && turns[si] < bt)) {
                bc = cost[si];
                bt = turns[si];
            }
        }
        res.dist.data()[node] = bc;
        res.min_turns.data()[node] = bt;
    }
    return res;
}

} // namespace anyd
