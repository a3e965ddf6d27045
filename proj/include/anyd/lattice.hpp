#pragma once

#include <cstdint>

#include "anyd/matrix.hpp"

namespace anyd {

struct GridDims {
    int64_t height = 0; // rows
    int64_t width = 0;  // cols

    int64_t node_count() const { return height * width; }
    bool operator==(const GridDims&) const = default;
};

struct NodeCoord {
    int64_t row = 0;
    int64_t col = 0;

    bool operator==(const NodeCoord&) const = default;
};

inline bool in_bounds(NodeCoord c, GridDims d) {
    return c.row >= 0 && c.row < d.height && c.col >= 0 && c.col < d.width;
}

// Column-major linearization: index = col*height + row. Throws IndexError
// when out of bounds.
int64_t linear_index(NodeCoord coord, GridDims dims);
NodeCoord to_coords(int64_t index, GridDims dims);

// 4-connected weighted lattice. vcost(i,j) is the cost of the edge between
// (i,j) and (i+1,j); hcost(i,j) between (i,j) and (i,j+1). The transposed
// copies tvcost/thcost are materialized once at construction so that both
// sweep orientations read edge costs along contiguous columns.
// Immutable after construction; safe for concurrent reads.
class Lattice {
public:
    Lattice(GridDims dims, Matrix<double> vcost, Matrix<double> hcost);

    const GridDims& dims() const { return dims_; }
    int64_t node_count() const { return dims_.node_count(); }
    const Matrix<double>& vcost() const { return vcost_; }
    const Matrix<double>& hcost() const { return hcost_; }
    const Matrix<double>& tvcost() const { return tvcost_; }
    const Matrix<double>& thcost() const { return thcost_; }

    // Cost of the edge between two 4-adjacent nodes; throws ValidationError
    // if the nodes are not adjacent, IndexError if out of bounds.
    double edge_cost(NodeCoord a, NodeCoord b) const;

private:
    Lattice(GridDims dims, Matrix<double> vcost, Matrix<double> hcost,
            Matrix<double> tvcost, Matrix<double> thcost);
    friend Lattice transposed(const Lattice&);

    GridDims dims_;
    Matrix<double> vcost_;  // (H-1) x W
    Matrix<double> hcost_;  // H x (W-1)
    Matrix<double> tvcost_; // (W-1) x H, tvcost(j,i) == hcost(i,j)
    Matrix<double> thcost_; // W x (H-1), thcost(j,i) == vcost(i,j)
};

// Validates shapes ((H-1)xW and Hx(W-1)) and costs (finite, >= 0), then
// materializes the transposed copies. DimensionError / ValidationError.
Lattice make_lattice(GridDims dims, Matrix<double> vcost, Matrix<double> hcost);

// The same lattice with rows and columns swapped; reuses the matrices
// already materialized in `lattice` (no recomputation).
Lattice transposed(const Lattice& lattice);

} // namespace anyd
