#pragma once

#include "arquiver/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace arq {

/// Dense rational matrix, row-major. Zero-dimensional shapes (0 x n, n x 0,
/// 0 x 0) are legal values and behave as linear maps between zero spaces.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            fail("ShapeMismatch", "entry count does not match matrix shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    /// Single column from a vector.
    static Matrix column(const std::vector<Rational>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) fail("ShapeMismatch", "matrix product shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = at(r, k);
                if (a.is_zero()) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    const Rational& b = o.at(k, c);
                    if (!b.is_zero()) p.at(r, c) += a * b;
                }
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail("ShapeMismatch", "matrix sum shape mismatch");
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + o.entries_[i];
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail("ShapeMismatch", "matrix difference shape mismatch");
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - o.entries_[i];
        return s;
    }

    Matrix scaled(const Rational& c) const {
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] * c;
        return s;
    }

    std::vector<Rational> column_vec(std::size_t c) const {
        std::vector<Rational> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    /// [this | other] side by side.
    Matrix hstack(const Matrix& o) const {
        if (rows_ != o.rows_) fail("ShapeMismatch", "hstack row mismatch");
        Matrix s(rows_, cols_ + o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
            for (std::size_t c = 0; c < o.cols_; ++c) s.at(r, cols_ + c) = o.at(r, c);
        }
        return s;
    }

    Matrix vstack(const Matrix& o) const {
        if (cols_ != o.cols_) fail("ShapeMismatch", "vstack column mismatch");
        Matrix s(rows_ + o.rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c);
        for (std::size_t r = 0; r < o.rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) s.at(rows_ + r, c) = o.at(r, c);
        return s;
    }

    Matrix take_columns(const std::vector<std::size_t>& idx) const {
        Matrix s(rows_, idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (std::size_t r = 0; r < rows_; ++r) s.at(r, c) = at(r, idx[c]);
        return s;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
    RrefResult res;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
        Rational inv = Rational::one() / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(row, c);
        }
        res.pivot_columns.push_back(col);
        ++row;
    }
    res.rank = row;
    res.reduced = std::move(m);
    return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Columns form a basis of the null space { x : m x = 0 }.
inline Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_columns) is_pivot[c] = true;
    std::size_t nullity = m.cols() - r.rank;
    Matrix basis(m.cols(), nullity);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(free_col, k) = 1;
        for (std::size_t p = 0; p < r.pivot_columns.size(); ++p)
            basis.at(r.pivot_columns[p], k) = -r.reduced.at(p, free_col);
        ++k;
    }
    return basis;
}

/// Particular solution of m x = b, or no value when the system is
/// inconsistent. Residual of a returned solution is exactly zero.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) fail("ShapeMismatch", "solve: rhs length does not match row count");
    Matrix aug = m.hstack(Matrix::column(b));
    RrefResult r = rref(std::move(aug));
    std::vector<Rational> x(m.cols());
    for (std::size_t p = 0; p < r.pivot_columns.size(); ++p) {
        if (r.pivot_columns[p] == m.cols()) return std::nullopt;  // pivot in rhs column
        x[r.pivot_columns[p]] = r.reduced.at(p, m.cols());
    }
    return x;
}

/// Solve m X = B column by column; no value if any column is inconsistent.
inline std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) fail("ShapeMismatch", "solve_matrix: shape mismatch");
    Matrix x(m.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        auto col = solve(m, b.column_vec(c));
        if (!col) return std::nullopt;
        for (std::size_t r = 0; r < m.cols(); ++r) x.at(r, c) = (*col)[r];
    }
    return x;
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    RrefResult r = rref(m.hstack(Matrix::identity(m.rows())));
    if (r.rank != m.rows()) return std::nullopt;
    for (std::size_t p = 0; p < r.pivot_columns.size(); ++p)
        if (r.pivot_columns[p] != p) return std::nullopt;
    Matrix inv(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = r.reduced.at(i, m.rows() + j);
    return inv;
}

/// Span utilities: rows of `mat` are vectors; returns an RREF basis of their
/// span (zero rows dropped). Used for deterministic subspace bookkeeping.
inline Matrix row_space_basis(const Matrix& mat) {
    RrefResult r = rref(mat);
    Matrix basis(r.rank, mat.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < mat.cols(); ++c) basis.at(i, c) = r.reduced.at(i, c);
    return basis;
}

/// Is `v` in the row space of the RREF basis `basis`?
inline bool in_row_space(const Matrix& basis, const std::vector<Rational>& v) {
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < basis.cols() && basis.at(i, lead).is_zero()) ++lead;
        if (lead == basis.cols()) continue;
        if (!w[lead].is_zero()) {
            Rational f = w[lead] / basis.at(i, lead);
            for (std::size_t c = lead; c < basis.cols(); ++c) w[c] -= f * basis.at(i, c);
        }
    }
    for (const auto& e : w)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace arq
