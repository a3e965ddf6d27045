#include "anyd/costs.hpp"

#include <cmath>

namespace anyd {

Lattice image_to_costs(const GrayImage& img) {
    const int64_t h = img.dims.height, w = img.dims.width;
    Matrix<double> vcost(h - 1, w);
    Matrix<double> hcost(h, w - 1);
    for (int64_t i = 0; i + 1 < h; ++i)
        for (int64_t j = 0; j < w; ++j)
            vcost.at(i, j) = std::abs(static_cast<double>(img.pixels.at(i + 1, j)) -
                                      static_cast<double>(img.pixels.at(i, j)));
    for (int64_t i = 0; i < h; ++i)
        for (int64_t j = 0; j + 1 < w; ++j)
            hcost.at(i, j) = std::abs(static_cast<double>(img.pixels.at(i, j + 1)) -
                                      static_cast<double>(img.pixels.at(i, j)));
    return make_lattice(img.dims, std::move(vcost), std::move(hcost));
}

Lattice random_lattice(GridDims dims, RngSpec rng) {
    SplitMix64 gen(rng.seed);
    Matrix<double> vcost(dims.height - 1, dims.width);
    Matrix<double> hcost(dims.height, dims.width - 1);
    for (int64_t i = 0; i < vcost.rows(); ++i)
        for (int64_t j = 0; j < vcost.cols(); ++j)
            vcost.at(i, j) = gen.next_unit();
    for (int64_t i = 0; i < hcost.rows(); ++i)
        for (int64_t j = 0; j < hcost.cols(); ++j)
            hcost.at(i, j) = gen.next_unit();
    return make_lattice(dims, std::move(vcost), std::move(hcost));
}

} // namespace anyd
