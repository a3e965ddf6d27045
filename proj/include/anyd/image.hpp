#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anyd/lattice.hpp"
#include "anyd/matrix.hpp"

namespace anyd {

struct GrayImage {
    GridDims dims;
    Matrix<uint16_t> pixels; // H x W, values in [0, maxval]
    int maxval = 255;        // 255 or 65535-class (any positive <= 65535 accepted)
};

// PGM decoder: P2 (ASCII) and P5 (binary), '#' comments in the header,
// maxval <= 65535, P5 with maxval > 255 is big-endian 16-bit. Throws
// ParseError carrying the byte offset of the problem.
GrayImage load_pgm(const std::vector<uint8_t>& bytes);

// P5 writer: 8-bit when maxval <= 255, otherwise big-endian 16-bit.
// load_pgm(write_pgm(img)) reproduces pixels exactly.
std::vector<uint8_t> write_pgm(const GrayImage& img);

GrayImage load_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const GrayImage& img);

} // namespace anyd
