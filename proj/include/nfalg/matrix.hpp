#pragma once

#include "nfalg/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>

namespace nfalg {

inline bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vec vec_zero(std::size_t n) { return Vec(n, Scalar(0)); }

inline void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

inline Vec vec_scaled(Vec v, const Scalar& c) {
    for (auto& s : v) s *= c;
    return v;
}

inline Vec vec_add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Scalar vec_dot(const Vec& a, const Vec& b) {
    Scalar acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Mat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

    void set_row(std::size_t i, const Vec& v) {
        std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
    }

    // Entries read row by row; the flat view of a coefficient matrix.
    const Vec& flat() const { return a_; }

    static Mat from_flat(std::size_t rows, std::size_t cols, Vec flat) {
        Mat m(rows, cols);
        m.a_ = std::move(flat);
        return m;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const { return vec_is_zero(a_); }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }

    friend Mat operator*(const Scalar& c, const Mat& m) {
        Mat r = m;
        for (auto& s : r.a_) s *= c;
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Vec operator*(const Mat& m, const Vec& v) {
        Vec r(m.rows_, Scalar(0));
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
        return r;
    }

    // Kronecker product under the flat index (i,j) -> i*b.rows + j.
    static Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows() * b.rows(), a.cols() * b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (a(i, j).is_zero()) continue;
                for (std::size_t p = 0; p < b.rows(); ++p)
                    for (std::size_t q = 0; q < b.cols(); ++q)
                        if (!b(p, q).is_zero())
                            r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
            }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

// Incrementally maintained reduced row echelon form of a growing row set.
// Rows are kept sorted by pivot column, pivots normalized to 1 and cleared
// from every other row, so the row list is canonical for the row space.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduce v against the current rows.
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = v[pivots_[r]];
            if (!c.is_zero()) vec_axpy(v, -c, rows_[r]);
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    // Returns true when the row increased the rank.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == cols_) return false;
        Scalar inv = Scalar(1) / v[lead];
        for (auto& s : v) s *= inv;
        // clear the new pivot from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = rows_[r][lead];
            if (!c.is_zero()) vec_axpy(rows_[r], -c, v);
        }
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
        std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
        pivots_.insert(it, lead);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    Mat to_mat() const { return Mat::from_rows(rows_, cols_); }

private:
    std::size_t cols_;
    std::vector<Vec> rows_;            // RREF rows, pivot order
    std::vector<std::size_t> pivots_;  // ascending
};

struct Rref {
    Mat reduced;                      // same shape as the input, zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(const Mat& m) {
    RowSpan span(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) span.insert(m.row(i));
    Rref out;
    out.rank = span.rank();
    out.pivot_cols = span.pivots();
    out.reduced = Mat(m.rows(), m.cols());
    for (std::size_t r = 0; r < span.rank(); ++r) out.reduced.set_row(r, span.rows()[r]);
    return out;
}

// Basis of {v : m v = 0}; one vector per free column, carrying a 1 there.
inline std::vector<Vec> nullspace(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = vec_zero(m.cols());
        v[f] = 1;
        for (std::size_t row = 0; row < r.rank; ++row)
            v[r.pivot_cols[row]] = -r.reduced(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some particular solution of m x = b (free variables set to 0), or nothing.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Rref r = rref(aug);
    for (std::size_t c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    Vec x = vec_zero(m.cols());
    for (std::size_t row = 0; row < r.rank; ++row)
        x[r.pivot_cols[row]] = r.reduced(row, m.cols());
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(aug);
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

}  // namespace nfalg
