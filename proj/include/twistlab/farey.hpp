#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/numeric.hpp"
#include "twistlab/window.hpp"

namespace twistlab {
namespace farey {

namespace detail {

inline std::int64_t checked_i64(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error(std::string("farey: 64-bit overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

// Nearest-integer quotient; a tie rounds up, leaving the negative remainder.
// Either tie choice gives a least-absolute-remainder chain (hence a shortest
// path); this one is frozen so geodesics are reproducible.
inline std::int64_t nearest_div(std::int64_t a, std::int64_t b) {
    std::int64_t bb = b < 0 ? -b : b;
    std::int64_t q = floor_div(a, bb);
    std::int64_t r = a - q * bb;  // 0 <= r < bb
    if (2 * r >= bb) ++q;
    return b < 0 ? -q : q;
}

}  // namespace detail

// Isotopy class of an essential simple closed curve on the torus: a primitive
// pair (p, q) up to sign, normalized to q > 0, with the vertical curve (1, 0).
struct Slope {
    std::int64_t p = 1, q = 0;

    Slope() = default;
    Slope(std::int64_t pp, std::int64_t qq) : p(pp), q(qq) {
        if (p == 0 && q == 0) throw std::invalid_argument("slope (0, 0) rejected");
        std::int64_t g = gcd_i64(p, q);
        p /= g;
        q /= g;
        if (q < 0 || (q == 0 && p < 0)) {
            p = -p;
            q = -q;
        }
    }

    bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Slope& o) const { return !(*this == o); }
    bool operator<(const Slope& o) const { return p != o.p ? p < o.p : q < o.q; }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

inline Slope slope_from_string(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return Slope(std::stoll(s), 1);  // bare integers are n/1
    return Slope(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
}

// det of the pair as signed integers; geometric intersection number is |det|.
inline std::int64_t det2(const Slope& u, const Slope& v) {
    return detail::checked_i64(static_cast<__int128>(u.p) * v.q - static_cast<__int128>(u.q) * v.p,
                               "intersection");
}

inline std::int64_t intersection_number(const Slope& u, const Slope& v) {
    std::int64_t d = det2(u, v);
    return d < 0 ? -d : d;
}

inline bool adjacent(const Slope& u, const Slope& v) { return intersection_number(u, v) == 1; }

// Exact graph distance. Move u to the vertex at infinity by a unimodular
// change of coordinates, then run least-absolute-remainder division on the
// image of v; each division step is one edge of a path from infinity, and the
// least-remainder chain is a shortest such chain (Kronecker's theorem on
// division chains; cross-validated exhaustively against a BFS oracle in the
// test suite, which is the authority if the two ever disagree).
inline std::int64_t distance(const Slope& u, const Slope& v) {
    if (u == v) return 0;
    Bezout bz = ext_gcd(Int(u.p), Int(u.q));  // x p + y q = 1
    const std::int64_t x = static_cast<std::int64_t>(bz.x.get_si());
    const std::int64_t y = static_cast<std::int64_t>(bz.y.get_si());
    __int128 a128 = static_cast<__int128>(x) * v.p + static_cast<__int128>(y) * v.q;
    __int128 b128 = -static_cast<__int128>(u.q) * v.p + static_cast<__int128>(u.p) * v.q;
    std::int64_t a = detail::checked_i64(a128, "distance");
    std::int64_t b = detail::checked_i64(b128, "distance");
    if (b < 0) {
        a = -a;
        b = -b;
    }
    std::int64_t steps = 1;  // the final edge onto an integer vertex
    while (b > 1 || b < -1) {
        std::int64_t n = detail::nearest_div(a, b);
        std::int64_t r = a - n * b;
        a = b;
        b = r;
        ++steps;
    }
    return steps;
}

// One concrete geodesic realizing distance(u, v): the convergents of the
// division chain above, mapped back through the inverse coordinate change.
inline std::vector<Slope> geodesic(const Slope& u, const Slope& v) {
    if (u == v) return {u};
    Bezout bz = ext_gcd(Int(u.p), Int(u.q));
    const std::int64_t x = static_cast<std::int64_t>(bz.x.get_si());
    const std::int64_t y = static_cast<std::int64_t>(bz.y.get_si());
    std::int64_t a = detail::checked_i64(static_cast<__int128>(x) * v.p + static_cast<__int128>(y) * v.q,
                                         "geodesic");
    std::int64_t b = detail::checked_i64(-static_cast<__int128>(u.q) * v.p + static_cast<__int128>(u.p) * v.q,
                                         "geodesic");
    if (b < 0) {
        a = -a;
        b = -b;
    }
    std::vector<std::int64_t> quotients;
    while (b > 1 || b < -1) {
        std::int64_t n = detail::nearest_div(a, b);
        std::int64_t r = a - n * b;
        quotients.push_back(n);
        a = b;
        b = r;
    }
    quotients.push_back(a * b);  // last vertex is the integer a/b with b = +-1

    std::vector<Slope> path;
    path.push_back(u);
    // Continued-fraction convergents in the transformed coordinates,
    // h_i / k_i, pushed back through Gamma^-1 = [[p, -y],[q, x]].
    std::int64_t h0 = 1, k0 = 0;  // infinity
    std::int64_t h1 = quotients[0], k1 = 1;
    auto emit = [&](std::int64_t h, std::int64_t k) {
        __int128 pp = static_cast<__int128>(u.p) * h - static_cast<__int128>(y) * k;
        __int128 qq = static_cast<__int128>(u.q) * h + static_cast<__int128>(x) * k;
        path.push_back(Slope(detail::checked_i64(pp, "geodesic"), detail::checked_i64(qq, "geodesic")));
    };
    emit(h1, k1);
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        std::int64_t h2 = detail::checked_i64(static_cast<__int128>(quotients[i]) * h1 + h0, "geodesic");
        std::int64_t k2 = detail::checked_i64(static_cast<__int128>(quotients[i]) * k1 + k0, "geodesic");
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        emit(h1, k1);
    }
    return path;
}

// Homological shadow of the n-th twist power about c. The orientation is the
// one that makes the twisting coefficient below increase by exactly n.
inline Slope twist(const Slope& c, std::int64_t n, const Slope& v) {
    __int128 beta = static_cast<__int128>(c.p) * v.q - static_cast<__int128>(c.q) * v.p;  // det(c, v)
    __int128 np = v.p + static_cast<__int128>(n) * beta * c.p;
    __int128 nq = v.q + static_cast<__int128>(n) * beta * c.q;
    return Slope(detail::checked_i64(np, "twist"), detail::checked_i64(nq, "twist"));
}

// Dual slope completing c to a det +1 basis, normalized deterministically:
// the unique companion with second coordinate in [0, q), or (0, 1) for the
// vertical slope.
inline Slope companion(const Slope& c) {
    if (c.q == 0) return Slope(0, 1);
    Bezout bz = ext_gcd(Int(c.p), Int(c.q));  // x p + y q = 1
    std::int64_t r = -static_cast<std::int64_t>(bz.y.get_si());
    std::int64_t s = static_cast<std::int64_t>(bz.x.get_si());
    std::int64_t k = floor_div(s, c.q);
    r -= k * c.p;
    s -= k * c.q;
    Slope d;
    d.p = r;  // keep the signed pair; Slope() would re-normalize the sign
    d.q = s;
    return d;
}

// Position of v in the annular coordinates around c: express v = alpha c +
// beta d in the (c, companion) basis and take floor(alpha / beta). Twisting
// about c shifts this by exactly n; two disjoint curves crossing c differ by
// at most 1.
inline std::int64_t twisting_coefficient(const Slope& c, const Slope& v) {
    if (v == c) throw std::invalid_argument("twisting coefficient undefined for v = c");
    Slope d = companion(c);
    std::int64_t beta = det2(c, v);
    std::int64_t alpha = detail::checked_i64(
        static_cast<__int128>(v.p) * d.q - static_cast<__int128>(v.q) * d.p, "twisting coefficient");
    return floor_div(alpha, beta);
}

// Distance in the annular cover around c, through the coarse coordinate
// formula 1 + |t(u) - t(v)|.
inline std::int64_t annular_distance(const Slope& c, const Slope& u, const Slope& v) {
    std::int64_t tu = twisting_coefficient(c, u);
    std::int64_t tv = twisting_coefficient(c, v);
    std::int64_t diff = tu - tv;
    return 1 + (diff < 0 ? -diff : diff);
}

struct FareyScanRow {
    std::int64_t n = 0;
    Slope slope;
    std::int64_t dist = 0;
    std::int64_t twisting = 0;
};

struct FareyScanReport {
    Slope a, b, c;
    std::int64_t base_distance = 0;
    std::int64_t bound = 0;  // d(a,c) + d(c,b)
    std::vector<FareyScanRow> rows;
    std::vector<std::int64_t> exceptional;  // n with d(a, twisted b) < d(a, b)
    bool exceptional_within_inner = true;
    bool upper_bound_holds = true;
};

// Distance from a to the twist coset of b about c across the window.
inline FareyScanReport twist_coset_distance_scan(const Slope& a, const Slope& b, const Slope& c,
                                                 const Window& w) {
    if (intersection_number(a, c) < 1 || intersection_number(b, c) < 1)
        throw std::invalid_argument("scan needs curves crossing c");
    FareyScanReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.base_distance = distance(a, b);
    rep.bound = distance(a, c) + distance(c, b);
    rep.rows.reserve(w.size());
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        const std::int64_t n = w.at(idx);
        Slope v = twist(c, n, b);
        FareyScanRow row{n, v, distance(a, v), twisting_coefficient(c, v)};
        if (row.dist > rep.bound) rep.upper_bound_holds = false;
        if (row.dist < rep.base_distance) {
            rep.exceptional.push_back(n);
            if (!w.inner_contains(n)) rep.exceptional_within_inner = false;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace farey
}  // namespace twistlab
