#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool symmetric() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (!((*this)(r, c) == (*this)(c, r))) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    /// Copy with row and column `k` removed.
    Matrix without(std::size_t k) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == k) continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == k) continue;
                m(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return m;
    }

    /// Rows and columns reordered: result(i, j) = (*this)(perm[i], perm[j]).
    Matrix permuted(const std::vector<std::size_t>& perm) const {
        Matrix m(perm.size(), perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = 0; j < perm.size(); ++j) m(i, j) = (*this)(perm[i], perm[j]);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? "; " : "");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

template <class T>
RatMatrix to_rational(const Matrix<T>& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

/// Fraction-free Bareiss determinant; exact for integer input.
inline BigInt determinant(IntMatrix a) {
    if (!a.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(row, p);
        const Rational inv = a(row, col).reciprocal();
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of {x : A x = 0}.
inline std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
    RatMatrix r = a;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(const RatMatrix& a) {
    RatMatrix r = a;
    return rref(r).size();
}

/// Result of solving A x = b: a particular solution, or a witness y with
/// y^T A = 0 and y . b != 0 proving there is none.
struct SolveResult {
    std::optional<std::vector<Rational>> solution;
    std::vector<Rational> witness;
};

inline SolveResult solve(const RatMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    SolveResult out;
    if (!pivots.empty() && pivots.back() == a.cols()) {
        for (const auto& y : nullspace(a.transpose())) {
            Rational dot;
            for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * b[i];
            if (!dot.is_zero()) {
                out.witness = y;
                break;
            }
        }
        return out;
    }
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    out.solution = std::move(x);
    return out;
}

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long long signature() const {
        return static_cast<long long>(positive) - static_cast<long long>(negative);
    }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric rational matrix by congruence
/// diagonalization. Nonzero diagonal pivots are used directly; when the
/// whole remaining diagonal vanishes, a nonzero off-diagonal entry a_ij
/// gives a hyperbolic block [[0,a],[a,0]] with one eigenvalue of each sign.
inline Inertia inertia(RatMatrix a) {
    if (!a.symmetric()) throw DomainError("inertia needs a symmetric matrix");
    Inertia in;
    while (a.rows() > 0) {
        const std::size_t n = a.rows();
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!a(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv < n) {
            const Rational d = a(piv, piv);
            (d.sign() > 0 ? in.positive : in.negative) += 1;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == piv || a(r, piv).is_zero()) continue;
                const Rational f = a(r, piv) / d;
                for (std::size_t s = 0; s < n; ++s)
                    if (s != piv) a(r, s) -= f * a(piv, s);
            }
            a = a.without(piv);
            continue;
        }
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!a(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) {
            in.zero += n;
            break;
        }
        in.positive += 1;
        in.negative += 1;
        const Rational h = a(pi, pj);
        RatMatrix next(n - 2, n - 2);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (i != pi && i != pj) keep.push_back(i);
        for (std::size_t x = 0; x < keep.size(); ++x)
            for (std::size_t y = 0; y < keep.size(); ++y) {
                const std::size_t r = keep[x], s = keep[y];
                next(x, y) = a(r, s) - (a(r, pi) * a(pj, s) + a(r, pj) * a(pi, s)) / h;
            }
        a = std::move(next);
    }
    return in;
}

}  // namespace csurg
