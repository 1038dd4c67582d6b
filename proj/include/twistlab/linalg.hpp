#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twistlab/int_matrix.hpp"
#include "twistlab/numeric.hpp"

namespace twistlab {

// U * A * V = diag(d) with U, V unimodular, d[i] >= 0 and d[i] | d[i+1].
struct SmithForm {
    std::vector<Int> d;  // min(rows, cols) entries, trailing zeros kept
    IntMatrix u, v;
    std::size_t rank = 0;

    IntMatrix diagonal(std::size_t rows, std::size_t cols) const {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
};

namespace detail {

// Smallest nonzero |entry| in the submatrix at (t, t) and below/right.
inline std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& m, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace detail

// Classic gcd-driven row/column reduction. The pivot is always the entry of
// minimal nonzero absolute value, which empirically keeps intermediate
// entries small; the post-clearing divisibility sweep guarantees the chain
// d[0] | d[1] | ... on exit.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    SmithForm s;
    s.u = IntMatrix::identity(rows);
    s.v = IntMatrix::identity(cols);
    IntMatrix d = a;

    const std::size_t steps = rows < cols ? rows : cols;
    std::size_t t = 0;
    for (; t < steps; ++t) {
        auto piv = detail::min_pivot(d, t);
        if (!piv) break;
        if (piv->first != t) {
            d.swap_rows(t, piv->first);
            s.u.swap_rows(t, piv->first);
        }
        if (piv->second != t) {
            d.swap_cols(t, piv->second);
            s.v.swap_cols(t, piv->second);
        }
        for (;;) {
            // Reduce the pivot column, re-picking a smaller pivot whenever a
            // division leaves a nonzero remainder.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = ndiv(d(i, t), d(t, t));
                if (q != 0) {
                    d.add_row(i, t, -q);
                    s.u.add_row(i, t, -q);
                }
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = ndiv(d(t, j), d(t, t));
                if (q != 0) {
                    d.add_col(j, t, -q);
                    s.v.add_col(j, t, -q);
                }
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Row and column are clear. Pull in any entry the pivot does not
            // divide, then start over; |pivot| strictly decreases each pass.
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        s.u.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }

    s.d.assign(steps, Int(0));
    for (std::size_t i = 0; i < t; ++i) s.d[i] = d(i, i);
    s.rank = t;
    return s;
}

// Rank of A over F_p. Rejects composite moduli; a wrong "prime" would make
// every downstream Betti number silently meaningless.
inline std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("rank_mod_p: modulus must be prime");
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Int r = a(i, j) % Int(static_cast<unsigned long>(p));
            if (r < 0) r += static_cast<unsigned long>(p);
            m[i][j] = r.get_ui();
        }
    auto powmod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = (__uint128_t)r * b % p;
            b = (__uint128_t)b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        std::uint64_t inv = powmod(m[rank][c], p - 2);  // Fermat inverse
        for (std::size_t j = c; j < cols; ++j) m[rank][j] = (__uint128_t)m[rank][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            std::uint64_t f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + (__uint128_t)(p - f) * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

// Lattice basis of {x in Z^cols : A x = 0}. With U A V = D diagonal, the
// kernel is spanned by the columns of V past the rank; V unimodular makes the
// span saturated, so this is a basis of the full kernel lattice, not of a
// finite-index sublattice.
inline std::vector<std::vector<Int>> integral_kernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.v.col(j));
    return basis;
}

}  // namespace twistlab
