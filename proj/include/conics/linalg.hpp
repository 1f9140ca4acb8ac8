#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conics/errors.hpp"
#include "conics/field.hpp"

namespace conics {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw Error(ErrorCode::PreconditionViolated, "matrix shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

// Basis of {x : m x = 0}; each vector has a 1 at its free column and zeros at the other free columns.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some solution of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<F> x(m.cols(), F(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
    return x;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::PreconditionViolated, "determinant of non-square matrix");
    F det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return F(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

// Fraction-free determinant over an integral domain R given its unit. Requires
// ring operations, is_zero() and exact_div(a, b) returning a/b when exact.
template <class R, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& one, ExactDiv exact_div) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return one - one;
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace conics
