#ifndef PGEOM_MATRIX_HPP
#define PGEOM_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pgeom/rational.hpp"

namespace pgeom {

// Dense matrix of exact rationals.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<Rat>>& rows) {
        if (rows.empty()) return Mat();
        Mat m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw dimension_error("ragged row lengths");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        Mat out(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (v.size() != cols_) throw dimension_error("matrix-vector shape mismatch");
        std::vector<Rat> out(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Mat transpose() const {
        Mat out(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

private:
    size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Fraction-free (Bareiss) determinant. Pivots are the first nonzero entry
// in column order; divisions are exact, intermediates stay integral for
// integral input.
inline Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return Rat(1);
    Mat a = m;
    Rat prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            size_t p = k + 1;
            while (p < n && is_zero(a(p, k))) ++p;
            if (p == n) return Rat(0);
            for (size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// Row echelon form by fraction-free elimination; returns pivot columns.
// `m` is reduced in place.
inline std::vector<size_t> echelon(Mat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            Rat f = m(i, c) / m(r, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(const Mat& m) {
    Mat a = m;
    return echelon(a).size();
}

// Basis of the right kernel, each vector canonicalized so that its first
// nonzero entry is 1. Empty iff rank = cols.
inline std::vector<std::vector<Rat>> nullspace(const Mat& m) {
    Mat a = m;
    std::vector<size_t> pivots = echelon(a);
    // Back-substitute to reduced form.
    for (size_t r = pivots.size(); r-- > 0;) {
        size_t c = pivots[r];
        Rat inv = Rat(1) / a(r, c);
        for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (size_t i = 0; i < r; ++i) {
            if (is_zero(a(i, c))) continue;
            Rat f = a(i, c);
            for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(m.cols());
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free_c);
        // First nonzero entry -> 1.
        for (const Rat& x : v) {
            if (!is_zero(x)) {
                Rat inv = Rat(1) / x;
                for (Rat& y : v) y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact inverse via Gauss-Jordan. Throws on singular input.
inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse of non-square matrix");
    const size_t n = m.rows();
    Mat a(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) throw degeneracy_error("singular matrix has no inverse");
        if (p != c)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(a(c, j), a(p, j));
        Rat inv = Rat(1) / a(c, c);
        for (size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            Rat f = a(i, c);
            for (size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    Mat out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    return out;
}

}  // namespace pgeom

#endif  // PGEOM_MATRIX_HPP
