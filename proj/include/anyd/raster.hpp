#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anyd/matrix.hpp"

namespace anyd {

// On-disk rasters, both little-endian with a fixed 16-byte header:
//   bytes 0-7   magic ("ANYDIST1" / "ANYPRED1")
//   bytes 8-11  H (u32)
//   bytes 12-15 W (u32)
//   payload     H*W values, row-major
// Distance payload is IEEE-754 doubles (+inf = unreached); pred payload is
// signed 64-bit canonical linear indices (-1 = none). File size is exactly
// 16 + 8*H*W bytes.

std::vector<uint8_t> encode_distance_raster(const Matrix<double>& field);
Matrix<double> decode_distance_raster(const std::vector<uint8_t>& bytes);

std::vector<uint8_t> encode_pred_raster(const Matrix<int64_t>& field);
Matrix<int64_t> decode_pred_raster(const std::vector<uint8_t>& bytes);

void write_distance_raster_file(const std::string& path, const Matrix<double>& field);
Matrix<double> read_distance_raster_file(const std::string& path);
void write_pred_raster_file(const std::string& path, const Matrix<int64_t>& field);
Matrix<int64_t> read_pred_raster_file(const std::string& path);

} // namespace anyd
