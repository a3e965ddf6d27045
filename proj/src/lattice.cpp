#include "anyd/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "anyd/errors.hpp"

namespace anyd {

int64_t linear_index(NodeCoord coord, GridDims dims) {
    if (!in_bounds(coord, dims))
        throw IndexError("node (" + std::to_string(coord.row) + "," +
                         std::to_string(coord.col) + ") outside " +
                         std::to_string(dims.height) + "x" + std::to_string(dims.width) +
                         " lattice");
    return coord.col * dims.height + coord.row;
}

NodeCoord to_coords(int64_t index, GridDims dims) {
    if (index < 0 || index >= dims.node_count())
        throw IndexError("linear index " + std::to_string(index) + " outside lattice");
    return NodeCoord{index % dims.height, index / dims.height};
}

Lattice::Lattice(GridDims dims, Matrix<double> vcost, Matrix<double> hcost)
    : dims_(dims),
      vcost_(std::move(vcost)),
      hcost_(std::move(hcost)),
      tvcost_(hcost_.transposed()),
      thcost_(vcost_.transposed()) {}

Lattice::Lattice(GridDims dims, Matrix<double> vcost, Matrix<double> hcost,
                 Matrix<double> tvcost, Matrix<double> thcost)
    : dims_(dims),
      vcost_(std::move(vcost)),
      hcost_(std::move(hcost)),
      tvcost_(std::move(tvcost)),
      thcost_(std::move(thcost)) {}

double Lattice::edge_cost(NodeCoord a, NodeCoord b) const {
    if (!in_bounds(a, dims_) || !in_bounds(b, dims_))
        throw IndexError("edge endpoint outside lattice");
    if (a.col == b.col && std::abs(a.row - b.row) == 1)
        return vcost_.at(std::min(a.row, b.row), a.col);
    if (a.row == b.row && std::abs(a.col - b.col) == 1)
        return hcost_.at(a.row, std::min(a.col, b.col));
    throw ValidationError("nodes are not 4-adjacent");
}

Lattice make_lattice(GridDims dims, Matrix<double> vcost, Matrix<double> hcost) {
    if (dims.height < 1 || dims.width < 1)
        throw DimensionError("lattice dimensions must be >= 1");
    if (vcost.rows() != dims.height - 1 || vcost.cols() != dims.width)
        throw DimensionError("vcost must have shape (H-1) x W");
    if (hcost.rows() != dims.height || hcost.cols() != dims.width - 1)
        throw DimensionError("hcost must have shape H x (W-1)");
    for (const Matrix<double>* m : {&vcost, &hcost}) {
        const double* p = m->data();
        for (int64_t k = 0; k < m->size(); ++k)
            if (!std::isfinite(p[k]) || p[k] < 0.0)
                throw ValidationError("edge costs must be finite and non-negative");
    }
    return Lattice(dims, std::move(vcost), std::move(hcost));
}

Lattice transposed(const Lattice& lattice) {
    // Swapped dims; the four matrices trade places, nothing is recomputed.
    return Lattice(GridDims{lattice.dims().width, lattice.dims().height},
                   lattice.tvcost(), lattice.thcost(),
                   lattice.vcost(), lattice.hcost());
}

} // namespace anyd
