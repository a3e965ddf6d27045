#pragma once

#include "anyd/image.hpp"
#include "anyd/lattice.hpp"
#include "anyd/rng.hpp"

namespace anyd {

// Edge cost = absolute brightness difference between the two pixels, as
// raw (unnormalized) 64-bit reals. Zero-cost plateaus are legitimate.
Lattice image_to_costs(const GrayImage& img);

// Lattice with edge costs drawn from the seeded stream: vcost first, then
// hcost, each filled in row-major order. Same spec => identical lattice.
Lattice random_lattice(GridDims dims, RngSpec rng);

} // namespace anyd
