#include "anyd/image.hpp"

#include <fstream>

#include "anyd/errors.hpp"

namespace anyd {

namespace {

class HeaderScanner {
public:
    explicit HeaderScanner(const std::vector<uint8_t>& bytes) : bytes_(bytes) {}

    size_t pos() const { return pos_; }

    uint8_t next_byte() {
        if (pos_ >= bytes_.size()) throw ParseError("unexpected end of file", pos_);
        return bytes_[pos_++];
    }

    // Skips whitespace and '#' comments (to end of line).
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            uint8_t b = bytes_[pos_];
            if (b == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (is_space(b)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    // Unsigned decimal token.
    int64_t next_int(const char* what) {
        skip_separators();
        size_t start = pos_;
        int64_t value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > INT64_MAX / 16) throw ParseError("number overflow", start);
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError(std::string("expected ") + what, pos_);
        return value;
    }

    static bool is_space(uint8_t b) {
        return b == ' ' || b == '\t' || b == '\r' || b == '\n' || b == '\v' || b == '\f';
    }

private:
    const std::vector<uint8_t>& bytes_;
    size_t pos_ = 0;
};

} // namespace

GrayImage load_pgm(const std::vector<uint8_t>& bytes) {
    HeaderScanner s(bytes);
    if (bytes.size() < 2) throw ParseError("not a PGM file", 0);
    char m0 = static_cast<char>(s.next_byte());
    char m1 = static_cast<char>(s.next_byte());
    if (m0 != 'P' || (m1 != '2' && m1 != '5'))
        throw ParseError(std::string("unsupported magic \"") + m0 + m1 + "\"", 0);
    const bool binary = (m1 == '5');

    int64_t width = s.next_int("width");
    int64_t height = s.next_int("height");
    int64_t maxval = s.next_int("maxval");
    if (width < 1 || height < 1)
        throw ParseError("image dimensions must be >= 1", s.pos());
    if (maxval < 1 || maxval > 65535)
        throw ParseError("maxval out of range [1, 65535]", s.pos());

    GrayImage img;
    img.dims = GridDims{height, width};
    img.maxval = static_cast<int>(maxval);
    img.pixels = Matrix<uint16_t>(height, width);

    if (binary) {
        // exactly one whitespace byte separates the header from the raster
        uint8_t sep = s.next_byte();
        if (!HeaderScanner::is_space(sep))
            throw ParseError("missing whitespace after maxval", s.pos() - 1);
        const size_t bpp = maxval > 255 ? 2 : 1;
        const size_t need = static_cast<size_t>(width) * static_cast<size_t>(height) * bpp;
        if (bytes.size() - s.pos() < need)
            throw ParseError("truncated pixel data", bytes.size());
        if (bytes.size() - s.pos() > need)
            throw ParseError("trailing data after pixels", s.pos() + need);
        size_t at = s.pos();
        for (int64_t i = 0; i < height; ++i) {
            for (int64_t j = 0; j < width; ++j) {
                uint32_t v;
                if (bpp == 2) {
                    v = (static_cast<uint32_t>(bytes[at]) << 8) | bytes[at + 1]; // big-endian
                    at += 2;
                } else {
                    v = bytes[at++];
                }
                if (v > static_cast<uint32_t>(maxval))
                    throw ParseError("pixel exceeds maxval", at - bpp);
                img.pixels.at(i, j) = static_cast<uint16_t>(v);
            }
        }
    } else {
        for (int64_t i = 0; i < height; ++i) {
            for (int64_t j = 0; j < width; ++j) {
                size_t before = s.pos();
                int64_t v = s.next_int("pixel");
                if (v > maxval) throw ParseError("pixel exceeds maxval", before);
                img.pixels.at(i, j) = static_cast<uint16_t>(v);
            }
        }
        s.skip_separators();
        if (s.pos() != bytes.size())
            throw ParseError("trailing data after pixels", s.pos());
    }
    return img;
}

std::vector<uint8_t> write_pgm(const GrayImage& img) {
    const int64_t h = img.dims.height, w = img.dims.width;
    std::string header = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n" +
                         std::to_string(img.maxval) + "\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    const bool wide = img.maxval > 255;
    out.reserve(out.size() + static_cast<size_t>(h * w) * (wide ? 2 : 1));
    for (int64_t i = 0; i < h; ++i) {
        for (int64_t j = 0; j < w; ++j) {
            uint16_t v = img.pixels.at(i, j);
            if (wide) {
                out.push_back(static_cast<uint8_t>(v >> 8));
                out.push_back(static_cast<uint8_t>(v & 0xFF));
            } else {
                out.push_back(static_cast<uint8_t>(v));
            }
        }
    }
    return out;
}

GrayImage load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return load_pgm(bytes);
}

void write_pgm_file(const std::string& path, const GrayImage& img) {
    auto bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

} // namespace anyd
