#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace anyd {

// Dense column-major matrix: element (r, c) lives at data[c*rows + r], so a
// column is contiguous. Matches the lattice's linear-index convention
// (index = col*rows + row) and makes column sweeps cache-sequential.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int64_t rows, int64_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), fill) {
        assert(rows >= 0 && cols >= 0);
    }

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    int64_t size() const { return rows_ * cols_; }
    bool empty() const { return data_.empty(); }

    T& at(int64_t r, int64_t c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(c * rows_ + r)];
    }
    const T& at(int64_t r, int64_t c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[static_cast<size_t>(c * rows_ + r)];
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    T* col(int64_t c) { return data_.data() + c * rows_; }
    const T* col(int64_t c) const { return data_.data() + c * rows_; }

    bool operator==(const Matrix& other) const = default;

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        transpose_into(*this, out);
        return out;
    }

private:
    int64_t rows_ = 0;
    int64_t cols_ = 0;
    std::vector<T> data_;
};

// Blocked transpose of dst columns [dst_col_begin, dst_col_end).
// dst must be pre-sized to (src.cols, src.rows). A pure permutation, so the
// result is bitwise identical however the column range is chunked.
template <typename T>
void transpose_into(const Matrix<T>& src, Matrix<T>& dst,
                    int64_t dst_col_begin, int64_t dst_col_end) {
    assert(dst.rows() == src.cols() && dst.cols() == src.rows());
    constexpr int64_t kTile = 64;
    const int64_t src_rows = src.rows();
    const T* sdata = src.data();
    for (int64_t c0 = dst_col_begin; c0 < dst_col_end; c0 += kTile) {
        const int64_t c1 = std::min(c0 + kTile, dst_col_end);
        for (int64_t r0 = 0; r0 < dst.rows(); r0 += kTile) {
            const int64_t r1 = std::min(r0 + kTile, dst.rows());
            for (int64_t c = c0; c < c1; ++c) {
                T* out = dst.col(c);
                // dst(r, c) = src(c, r)
                for (int64_t r = r0; r < r1; ++r)
                    out[r] = sdata[r * src_rows + c];
            }
        }
    }
}

template <typename T>
void transpose_into(const Matrix<T>& src, Matrix<T>& dst) {
    transpose_into(src, dst, 0, dst.cols());
}

} // namespace anyd
