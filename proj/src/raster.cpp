#include "anyd/raster.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

#include "anyd/errors.hpp"

namespace anyd {

namespace {

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<uint8_t>(v >> (8 * k)));
}

void put_u64le(std::vector<uint8_t>& out, uint64_t v) {
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<uint8_t>(v >> (8 * k)));
}

uint32_t get_u32le(const uint8_t* p) {
    uint32_t v = 0;
    for (int k = 3; k >= 0; --k) v = (v << 8) | p[k];
    return v;
}

uint64_t get_u64le(const uint8_t* p) {
    uint64_t v = 0;
    for (int k = 7; k >= 0; --k) v = (v << 8) | p[k];
    return v;
}

template <typename T, typename Enc>
std::vector<uint8_t> encode(const char* magic, const Matrix<T>& field, Enc enc) {
    if (field.rows() < 1 || field.cols() < 1)
        throw ValidationError("raster must be at least 1x1");
    if (field.rows() > std::numeric_limits<uint32_t>::max() ||
        field.cols() > std::numeric_limits<uint32_t>::max())
        throw ValidationError("raster dimensions exceed u32");
    std::vector<uint8_t> out;
    out.reserve(16 + static_cast<size_t>(field.size()) * 8);
    out.insert(out.end(), magic, magic + 8);
    put_u32le(out, static_cast<uint32_t>(field.rows()));
    put_u32le(out, static_cast<uint32_t>(field.cols()));
    for (int64_t i = 0; i < field.rows(); ++i)
        for (int64_t j = 0; j < field.cols(); ++j)
            put_u64le(out, enc(field.at(i, j)));
    return out;
}

template <typename T, typename Dec>
Matrix<T> decode(const char* magic, const std::vector<uint8_t>& bytes, Dec dec) {
    if (bytes.size() < 16) throw ParseError("raster header truncated", bytes.size());
    if (std::memcmp(bytes.data(), magic, 8) != 0)
        throw ParseError(std::string("bad magic, expected ") + magic, 0);
    const uint32_t h = get_u32le(bytes.data() + 8);
    const uint32_t w = get_u32le(bytes.data() + 12);
    if (h < 1 || w < 1) throw ParseError("raster dimensions must be >= 1", 8);
    const uint64_t count = static_cast<uint64_t>(h) * w;
    if (bytes.size() != 16 + count * 8)
        throw ParseError("raster size must be 16 + 8*H*W bytes", bytes.size());
    Matrix<T> field(h, w);
    const uint8_t* p = bytes.data() + 16;
    for (int64_t i = 0; i < field.rows(); ++i)
        for (int64_t j = 0; j < field.cols(); ++j, p += 8)
            field.at(i, j) = dec(get_u64le(p), static_cast<size_t>(p - bytes.data()));
    return field;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

} // namespace

std::vector<uint8_t> encode_distance_raster(const Matrix<double>& field) {
    return encode("ANYDIST1", field,
                  [](double v) { return std::bit_cast<uint64_t>(v); });
}

Matrix<double> decode_distance_raster(const std::vector<uint8_t>& bytes) {
    return decode<double>("ANYDIST1", bytes,
                          [](uint64_t v, size_t) { return std::bit_cast<double>(v); });
}

std::vector<uint8_t> encode_pred_raster(const Matrix<int64_t>& field) {
    const int64_t n = field.size();
    for (int64_t k = 0; k < n; ++k) {
        const int64_t v = field.data()[k];
        if (v < -1 || v >= n) throw ValidationError("pred entry outside [-1, H*W)");
    }
    return encode("ANYPRED1", field,
                  [](int64_t v) { return static_cast<uint64_t>(v); });
}

Matrix<int64_t> decode_pred_raster(const std::vector<uint8_t>& bytes) {
    auto m = decode<int64_t>("ANYPRED1", bytes,
                             [](uint64_t v, size_t) { return static_cast<int64_t>(v); });
    for (int64_t i = 0; i < m.rows(); ++i)
        for (int64_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) < -1 || m.at(i, j) >= m.size())
                throw ParseError("pred entry outside [-1, H*W)",
                                 16 + static_cast<size_t>(i * m.cols() + j) * 8);
    return m;
}

void write_distance_raster_file(const std::string& path, const Matrix<double>& field) {
    write_file(path, encode_distance_raster(field));
}

Matrix<double> read_distance_raster_file(const std::string& path) {
    return decode_distance_raster(read_file(path));
}

void write_pred_raster_file(const std::string& path, const Matrix<int64_t>& field) {
    write_file(path, encode_pred_raster(field));
}

Matrix<int64_t> read_pred_raster_file(const std::string& path) {
    return decode_pred_raster(read_file(path));
}

} // namespace anyd
