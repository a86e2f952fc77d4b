#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "spin4/error.hpp"

namespace spin4 {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw Error(ErrorCode::DimensionMismatch,
                            "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                " entries, expected " + std::to_string(m.cols_));
            }
            std::copy(rows[i].begin(), rows[i].end(), m.row_begin(i));
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> row_vector(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row_begin(a), row_begin(a) + static_cast<std::ptrdiff_t>(cols_), row_begin(b));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorCode::DimensionMismatch, "matrix product of incompatible shapes");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
        if (a.cols_ != x.size()) {
            throw Error(ErrorCode::DimensionMismatch, "matrix-vector product of incompatible shapes");
        }
        std::vector<T> y(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                y[i] += a(i, j) * x[j];
        return y;
    }

    friend Matrix operator-(const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw Error(ErrorCode::DimensionMismatch, "matrix difference of incompatible shapes");
        }
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    auto row_begin(std::size_t i) { return data_.begin() + static_cast<std::ptrdiff_t>(i * cols_); }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

/// Determinant by Bareiss fraction-free elimination. Every intermediate value
/// is a minor of the input, so the divisions are exact.
inline Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

struct HermiteForm {
    IntMatrix form;       // row echelon, positive pivots, entries above pivots reduced
    IntMatrix transform;  // unimodular, transform * input == form
    std::size_t rank = 0; // rows [rank, rows) of form are zero
};

namespace detail {

inline void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    auto t = m.row(target);
    auto s = m.row(source);
    for (std::size_t j = 0; j < t.size(); ++j) {
        t[j] -= q * s[j];
    }
}

inline void negate_row(IntMatrix& m, std::size_t r) {
    for (auto& x : m.row(r)) x = -x;
}

} // namespace detail

/// Row-style Hermite normal form with the unimodular transform that produces it.
inline HermiteForm hermite_form(const IntMatrix& input) {
    IntMatrix h = input;
    IntMatrix u = IntMatrix::identity(input.rows());
    const std::size_t m = h.rows();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < h.cols() && pivot_row < m; ++col) {
        while (true) {
            std::size_t best = m;
            for (std::size_t r = pivot_row; r < m; ++r) {
                if (h(r, col) != 0 && (best == m || abs(h(r, col)) < abs(h(best, col)))) best = r;
            }
            if (best == m) break;
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < m; ++r) {
                if (h(r, col) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
                detail::add_row_multiple(h, r, pivot_row, q);
                detail::add_row_multiple(u, r, pivot_row, q);
                if (h(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(pivot_row, col) == 0) continue;
        if (h(pivot_row, col) < 0) {
            detail::negate_row(h, pivot_row);
            detail::negate_row(u, pivot_row);
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
            detail::add_row_multiple(h, r, pivot_row, q);
            detail::add_row_multiple(u, r, pivot_row, q);
        }
        ++pivot_row;
    }
    return {std::move(h), std::move(u), pivot_row};
}

/// Nonzero rows of the Hermite normal form: the canonical basis of the row lattice.
inline IntMatrix hermite_basis(const IntMatrix& rows) {
    HermiteForm hf = hermite_form(rows);
    IntMatrix basis(hf.rank, rows.cols());
    for (std::size_t i = 0; i < hf.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j)
            basis(i, j) = hf.form(i, j);
    return basis;
}

/// Basis (as rows, in Hermite normal form) of {x in Z^n : a x = 0}. The result
/// is the full integer kernel, hence a primitive (saturated) sublattice.
inline IntMatrix integer_kernel(const IntMatrix& a) {
    HermiteForm hf = hermite_form(a.transpose());
    const std::size_t n = a.cols();
    IntMatrix kernel(n - hf.rank, n);
    for (std::size_t i = hf.rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            kernel(i - hf.rank, j) = hf.transform(i, j);
    return hermite_basis(kernel);
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

} // namespace spin4
