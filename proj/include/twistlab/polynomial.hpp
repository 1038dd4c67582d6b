#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistlab/int_matrix.hpp"
#include "twistlab/numeric.hpp"

namespace twistlab {

// Coefficients are stored low degree first: p[0] + p[1] x + ...
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Int eval(const ZPoly& p, const Int& x) {
    Int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Int(static_cast<long>(i)) * p[i]);
    return d;
}

inline Int pow_int(const Int& b, std::size_t e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline int sgn(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Sign of p(num/den) for den > 0, evaluated exactly over Z via the
// homogenized Horner scheme sum c_i num^i den^(n-i).
inline int sign_at(const ZPoly& p, const Int& num, const Int& den) {
    if (p.empty()) return 0;
    Int acc = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * num + p[i] * pow_int(den, p.size() - 1 - i);
    return sgn(acc);
}

namespace detail {

inline QPoly to_q(const ZPoly& p) {
    QPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    return q;
}

inline QPoly qrem(QPoly a, const QPoly& b) {
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Scale a rational polynomial by the positive constant clearing denominators,
// then divide out the content. Positive scalings preserve every Sturm sign.
inline ZPoly primitive(const QPoly& q) {
    Int lcm = 1;
    for (const Rat& c : q) {
        Int den = c.get_den();
        lcm = lcm / gcd(lcm, den) * den;
    }
    ZPoly z(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rat scaled = q[i] * Rat(lcm);
        z[i] = scaled.get_num();
    }
    Int g = 0;
    for (const Int& c : z) g = gcd(g, c);
    if (g > 1)
        for (Int& c : z) c = divexact(c, g);
    return z;
}

}  // namespace detail

// Monic characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
// recurrence; each division by k is exact in Z.
inline ZPoly char_poly(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = a.rows();
    ZPoly c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * m;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = divexact(-tr, Int(static_cast<long>(k)));
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
        }
    }
    return c;
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

// Unique integer polynomial of degree < #points through (xs[i], ys[i]).
// Lagrange over Q; a leftover denominator means the caller's points were not
// generated by an integer polynomial, which is a logic error here.
inline ZPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching points");
    const std::size_t n = xs.size();
    QPoly acc(1, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        QPoly term(1, Rat(ys[i]));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // term *= (x - xs[j]) / (xs[i] - xs[j])
            Rat inv = Rat(1) / Rat(xs[i] - xs[j]);
            QPoly next(term.size() + 1, Rat(0));
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k + 1] += term[k] * inv;
                next[k] -= term[k] * Rat(xs[j]) * inv;
            }
            term = std::move(next);
        }
        if (term.size() > acc.size()) acc.resize(term.size(), Rat(0));
        for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
    }
    trim(acc);
    ZPoly out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (acc[k].get_den() != 1) throw std::logic_error("interpolation produced non-integer coefficient");
        out[k] = acc[k].get_num();
    }
    return out;
}

// Sturm chain of the squarefree part, normalized to primitive integer
// polynomials so endpoint evaluations stay in Z.
struct SturmChain {
    std::vector<ZPoly> chain;

    int variations(const Int& num, const Int& den) const {
        int var = 0, last = 0;
        for (const ZPoly& p : chain) {
            int s = sign_at(p, num, den);
            if (s == 0) continue;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    }

    // Number of roots in the half-open interval (a, b], endpoints rational.
    int count_in(const Rat& a, const Rat& b) const {
        return variations(a.get_num(), a.get_den()) - variations(b.get_num(), b.get_den());
    }
};

inline SturmChain sturm_chain(const ZPoly& p) {
    QPoly f = detail::to_q(p);
    QPoly g = detail::to_q(derivative(p));
    // Squarefree part f / gcd(f, f') so every real root is simple.
    {
        QPoly a = f, b = g;
        trim(a);
        trim(b);
        while (!b.empty()) {
            QPoly r = detail::qrem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (degree(a) > 0) {
            // divide f by the gcd a (exact)
            QPoly quo(f.size() - a.size() + 1, Rat(0));
            QPoly rem = f;
            for (std::size_t i = quo.size(); i-- > 0;) {
                Rat c = rem[i + a.size() - 1] / a.back();
                quo[i] = c;
                for (std::size_t j = 0; j < a.size(); ++j) rem[i + j] -= c * a[j];
            }
            f = std::move(quo);
        }
    }

    SturmChain s;
    s.chain.push_back(detail::primitive(f));
    ZPoly d = derivative(s.chain[0]);
    trim(d);
    if (!d.empty()) s.chain.push_back(d);
    while (s.chain.size() >= 2) {
        const ZPoly& a = s.chain[s.chain.size() - 2];
        const ZPoly& b = s.chain.back();
        QPoly r = detail::qrem(detail::to_q(a), detail::to_q(b));
        trim(r);
        if (r.empty()) break;
        for (Rat& c : r) c = -c;
        s.chain.push_back(detail::primitive(r));
    }
    return s;
}

// Enclosure (lo, hi] of the largest real root, bisected down to hi - lo <=
// eps with exact rational arithmetic throughout. nullopt if no real root.
inline std::optional<std::pair<Rat, Rat>> max_real_root(const ZPoly& poly, const Rat& eps) {
    ZPoly p = poly;
    trim(p);
    if (degree(p) < 1) return std::nullopt;
    SturmChain chain = sturm_chain(p);

    // Cauchy bound: every root has |x| < 1 + max |c_i| / |c_n|.
    Int maxc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) maxc = std::max(maxc, Int(abs(p[i])));
    Int lc = abs(p.back());
    Rat bound = Rat(1) + Rat(maxc) / Rat(lc);

    Rat lo = -bound - 1, hi = bound;
    if (chain.count_in(lo, hi) == 0) return std::nullopt;
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        if (chain.count_in(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return std::make_pair(lo, hi);
}

}  // namespace twistlab
