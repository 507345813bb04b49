#pragma once

#include "coprod/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace coprod {

/// Dense immutable matrix over a field F. F must provide +, -, *, /,
/// is_zero(), is_one(), zero_like() and one_like(); the latter two let
/// context-carrying fields (Z/p) produce constants of the right field.
template <class F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw ArithmeticError("matrix with an empty dimension");
        if (e_.size() != rows * cols) throw ArithmeticError("matrix entry count does not match shape");
    }

    /// n×n identity, with constants taken from `sample`'s field.
    static Matrix identity(std::size_t n, const F& sample = F()) {
        std::vector<F> v(n * n, sample.zero_like());
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = sample.one_like();
        return Matrix(n, n, std::move(v));
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] const F& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    [[nodiscard]] const std::vector<F>& entries() const { return e_; }

    [[nodiscard]] bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        return true;
    }

    /// Entrywise image under a field map (specialization, reduction).
    template <class Fn>
    [[nodiscard]] auto map(Fn&& fn) const -> Matrix<std::invoke_result_t<Fn, const F&>> {
        using G = std::invoke_result_t<Fn, const F&>;
        std::vector<G> v;
        v.reserve(e_.size());
        for (const auto& x : e_) v.push_back(fn(x));
        return Matrix<G>(rows_, cols_, std::move(v));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ArithmeticError("matrix product of non-conformable shapes");
        const F zero = a.e_.front().zero_like();
        std::vector<F> v(a.rows_ * b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    v[i * b.cols_ + j] += aik * bkj;
                }
            }
        }
        return Matrix(a.rows_, b.cols_, std::move(v));
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        std::vector<F> v = a.e_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.e_[i];
        return Matrix(a.rows_, a.cols_, std::move(v));
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        std::vector<F> v = a.e_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.e_[i];
        return Matrix(a.rows_, a.cols_, std::move(v));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Determinant by Gaussian elimination.
    [[nodiscard]] F det() const {
        require_square("determinant");
        std::vector<F> m = e_;
        const std::size_t n = rows_;
        F result = e_.front().one_like();
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv * n + col].is_zero()) ++piv;
            if (piv == n) return e_.front().zero_like();
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
                result = -result;
            }
            const F p = m[col * n + col];
            result = result * p;
            for (std::size_t r = col + 1; r < n; ++r) {
                if (m[r * n + col].is_zero()) continue;
                const F f = m[r * n + col] / p;
                for (std::size_t j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
            }
        }
        return result;
    }

    /// Gauss–Jordan inverse. `role` names the matrix in the error message
    /// when it is singular.
    [[nodiscard]] Matrix inverse(const std::string& role = "matrix") const {
        require_square("inverse");
        const std::size_t n = rows_;
        std::vector<F> m = e_;
        std::vector<F> inv = identity(n, e_.front()).e_;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv * n + col].is_zero()) ++piv;
            if (piv == n) throw ArithmeticError(role + " not invertible");
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(m[piv * n + j], m[col * n + j]);
                    std::swap(inv[piv * n + j], inv[col * n + j]);
                }
            }
            const F p = m[col * n + col];
            if (!p.is_one()) {
                for (std::size_t j = 0; j < n; ++j) {
                    m[col * n + j] = m[col * n + j] / p;
                    inv[col * n + j] = inv[col * n + j] / p;
                }
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || m[r * n + col].is_zero()) continue;
                const F f = m[r * n + col];
                for (std::size_t j = 0; j < n; ++j) {
                    if (!m[col * n + j].is_zero()) m[r * n + j] -= f * m[col * n + j];
                    if (!inv[col * n + j].is_zero()) inv[r * n + j] -= f * inv[col * n + j];
                }
            }
        }
        return Matrix(n, n, std::move(inv));
    }

    /// Square-and-multiply; pow(M, 0) = I.
    [[nodiscard]] Matrix pow(std::uint64_t k) const {
        require_square("power");
        Matrix result = identity(rows_, e_.front());
        Matrix base = *this;
        while (k) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

private:
    void require_square(const char* what) const {
        if (!is_square()) throw ArithmeticError(std::string(what) + " of a non-square matrix");
    }
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw ArithmeticError("matrix shapes differ");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> e_;
};

/// Block diagonal a ⊕ b.
template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
    const std::size_t r = a.rows() + b.rows(), c = a.cols() + b.cols();
    std::vector<F> v(r * c, a.at(0, 0).zero_like());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v[i * c + j] = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) v[(a.rows() + i) * c + a.cols() + j] = b.at(i, j);
    return Matrix<F>(r, c, std::move(v));
}

}  // namespace coprod
