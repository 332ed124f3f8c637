#pragma once

#include <cstddef>
#include <vector>

#include "csurg/matrix.hpp"

namespace csurg {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
    std::vector<BigInt> diagonal;
};

namespace detail {

inline void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}
inline void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), {}};
    IntMatrix& d = s.D;
    const std::size_t m = d.rows(), n = d.cols();
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pr == m || abs(d(i, j)) < abs(d(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) break;
            d.swap_rows(t, pr);
            s.U.swap_rows(t, pr);
            d.swap_cols(t, pc);
            s.V.swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                const BigInt q = d(i, t) / d(t, t);
                detail::row_axpy(d, i, t, q);
                detail::row_axpy(s.U, i, t, q);
                dirty = dirty || d(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                const BigInt q = d(t, j) / d(t, t);
                detail::col_axpy(d, j, t, q);
                detail::col_axpy(s.V, j, t, q);
                dirty = dirty || d(t, j) != 0;
            }
            if (dirty) continue;

            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            detail::row_axpy(d, t, bad, BigInt(-1));
            detail::row_axpy(s.U, t, bad, BigInt(-1));
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
            for (std::size_t c = 0; c < m; ++c) s.U(t, c) = -s.U(t, c);
        }
    }
    for (std::size_t t = 0; t < steps; ++t) s.diagonal.push_back(d(t, t));
    return s;
}

}  // namespace csurg
