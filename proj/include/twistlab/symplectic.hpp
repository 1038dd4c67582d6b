#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/int_matrix.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/polynomial.hpp"
#include "twistlab/window.hpp"

namespace twistlab {

// First homology of a closed genus-g surface in the standard basis
// e_1..e_g, e_{g+1}..e_{2g} with <e_i, e_{g+i}> = +1 and all other pairings 0.
using HomologyClass = std::vector<Int>;

inline Int pairing(const HomologyClass& x, const HomologyClass& y) {
    if (x.size() != y.size() || x.size() % 2 != 0) throw std::invalid_argument("pairing needs two 2g-vectors");
    const std::size_t g = x.size() / 2;
    Int acc = 0;
    for (std::size_t i = 0; i < g; ++i) acc += x[i] * y[g + i] - x[g + i] * y[i];
    return acc;
}

inline IntMatrix symplectic_j(std::size_t g) {
    IntMatrix j(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

inline bool is_primitive(const HomologyClass& c) { return vector_content(c) == 1; }

inline HomologyClass basis_vector(std::size_t g, std::size_t i) {
    HomologyClass e(2 * g, Int(0));
    e[i] = 1;
    return e;
}

// Integral symplectic matrix; the constructor refuses anything that fails the
// exact pairing-preservation check, so a SymplecticMap is trustworthy by type.
class SymplecticMap {
public:
    explicit SymplecticMap(IntMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
            throw std::invalid_argument("symplectic matrix must be square of even size");
        genus_ = m_.rows() / 2;
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = i + 1; j < m_.cols(); ++j) {
                Int expect = 0;
                if (j == genus_ + i) expect = 1;
                if (pairing(m_.col(i), m_.col(j)) != expect)
                    throw std::invalid_argument("matrix does not preserve the intersection pairing");
            }
    }

    static SymplecticMap identity(std::size_t g) { return SymplecticMap(IntMatrix::identity(2 * g)); }

    std::size_t genus() const { return genus_; }
    const IntMatrix& matrix() const { return m_; }

    // M^-1 = J^T M^T J, exact and division-free.
    SymplecticMap inverse() const {
        IntMatrix j = symplectic_j(genus_);
        return SymplecticMap(j.transpose() * m_.transpose() * j);
    }

    SymplecticMap operator*(const SymplecticMap& o) const { return SymplecticMap(m_ * o.m_); }
    bool operator==(const SymplecticMap& o) const { return m_ == o.m_; }

    HomologyClass apply(const HomologyClass& v) const { return m_.apply(v); }

private:
    IntMatrix m_;
    std::size_t genus_ = 0;
};

// T_c^n as a matrix: x -> x + n <x, c> c, i.e. I + n * c * (Jc)^T. The class
// must be primitive or zero (a simple closed curve's class is nothing else);
// a non-primitive nonzero class would silently change what the scan means.
inline SymplecticMap transvection_power(std::size_t g, const HomologyClass& c, std::int64_t n) {
    if (c.size() != 2 * g) throw std::invalid_argument("transvection class has wrong length");
    if (vector_content(c) == 0) return SymplecticMap::identity(g);  // null class twists trivially
    if (!is_primitive(c)) throw std::invalid_argument("transvection class must be primitive");
    IntMatrix m = IntMatrix::identity(2 * g);
    std::vector<Int> jc(2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        jc[i] = c[g + i];       // (Jc)_i for the row form <e_i, c>
        jc[g + i] = -c[i];
    }
    for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t j = 0; j < 2 * g; ++j) m(i, j) += Int(static_cast<long>(n)) * c[i] * jc[j];
    return SymplecticMap(std::move(m));
}

inline SymplecticMap transvection(std::size_t g, const HomologyClass& c) { return transvection_power(g, c, 1); }

struct TwistLetter {
    HomologyClass cls;
    std::int64_t power = 1;

    bool operator==(const TwistLetter& o) const { return cls == o.cls && power == o.power; }
    bool operator<(const TwistLetter& o) const { return cls != o.cls ? cls < o.cls : power < o.power; }
};

using TwistWord = std::vector<TwistLetter>;

// Matrices multiply in word order; the rightmost letter acts first on column
// vectors, matching ordinary function composition notation.
inline SymplecticMap word_to_matrix(std::size_t g, const TwistWord& w) {
    IntMatrix acc = IntMatrix::identity(2 * g);
    for (const TwistLetter& l : w) acc = acc * transvection_power(g, l.cls, l.power).matrix();
    return SymplecticMap(std::move(acc));
}

// Homology classes of a chain of 2g+1 curves: consecutive classes pair to
// +-1, non-consecutive ones to 0. Genus 1 degenerates to (e1, e2, e1).
inline std::vector<HomologyClass> chain_curve_classes(std::size_t g) {
    if (g == 0) throw std::invalid_argument("chain needs genus >= 1");
    std::vector<HomologyClass> chain(2 * g + 1);
    chain[0] = basis_vector(g, 0);
    for (std::size_t i = 1; i <= g; ++i) chain[2 * i - 1] = basis_vector(g, g + i - 1);
    for (std::size_t i = 1; i < g; ++i) {
        HomologyClass c = basis_vector(g, i - 1);
        c[i] = 1;
        chain[2 * i] = c;
    }
    chain[2 * g] = basis_vector(g, g - 1);
    return chain;
}

// Basis of the lattice of classes fixed by the map: ker(M - I).
inline std::vector<HomologyClass> fixed_classes(const SymplecticMap& f) {
    return integral_kernel(f.matrix() - IntMatrix::identity(2 * f.genus()));
}

struct StretchEnclosure {
    double value = 1.0;   // midpoint of the certified interval
    double radius = 0.0;  // half-width, <= 5e-10 by construction
};

// Spectral radius of the homology action. The Kronecker square M (x) M has
// eigenvalues lambda_i * lambda_j; since eigenvalues of a real matrix close
// under conjugation, rho(M)^2 = lambda_max * conj(lambda_max) is always among
// its real roots, and no real root can exceed it. That reduces the problem to
// the topmost real root of one integer polynomial, isolated exactly by Sturm
// bisection; no complex arithmetic, no floating-point eigensolver.
inline StretchEnclosure stretch_lower_bound(const SymplecticMap& f) {
    ZPoly p = char_poly(kronecker(f.matrix(), f.matrix()));
    Rat eps(1, 1000000000);  // enclosure of rho^2; sqrt halves the width again
    auto enc = max_real_root(p, eps);
    if (!enc) throw std::logic_error("symplectic map lost its real spectral radius");
    double lo = std::sqrt(enc->first.get_d());
    double hi = std::sqrt(enc->second.get_d());
    StretchEnclosure out;
    out.value = 0.5 * (lo + hi);
    out.radius = 0.5 * (hi - lo) + 1e-12;  // cover double rounding
    return out;
}

struct FixedClassScanRow {
    std::int64_t n = 0;
    std::size_t fixed_rank = 0;
};

struct FixedClassScanReport {
    std::vector<FixedClassScanRow> rows;
    std::vector<std::int64_t> exceptional;  // n with a nonzero fixed lattice
    bool exceptional_within_inner = true;
};

// Rank of the fixed lattice of f * T_c^n across the window. T_c^n is formed
// in closed form per n (the power is linear in n), so each step costs one
// rank-one update plus a Smith reduction.
inline FixedClassScanReport fixed_class_coset_scan(const SymplecticMap& f, const HomologyClass& c,
                                                   const Window& w) {
    const std::size_t g = f.genus();
    FixedClassScanReport rep;
    rep.rows.resize(w.size());
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        const std::int64_t n = w.at(idx);
        IntMatrix m = f.matrix() * transvection_power(g, c, n).matrix();
        std::size_t k = integral_kernel(m - IntMatrix::identity(2 * g)).size();
        rep.rows[idx] = {n, k};
    }
    for (const auto& row : rep.rows)
        if (row.fixed_rank > 0) {
            rep.exceptional.push_back(row.n);
            if (!w.inner_contains(row.n)) rep.exceptional_within_inner = false;
        }
    return rep;
}

// Euclidean factorization of an SL(2, Z) matrix into the two transvections
// T_{e1} = [[1,-1],[0,1]] and T_{e2} = [[1,0],[1,1]]. Serves both as the
// witness that those two transvections generate SL(2, Z) and as the word form
// of arbitrary genus-1 gluings.
inline TwistWord sl2_word(const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("sl2_word needs a 2x2 matrix");
    if (determinant(m) != 1) throw std::invalid_argument("sl2_word needs determinant 1");
    const HomologyClass e1 = {Int(1), Int(0)}, e2 = {Int(0), Int(1)};
    IntMatrix r = m;
    TwistWord ops;  // i-th entry records the i-th left-multiplied reduction op
    auto as_i64 = [](const Int& k) {
        if (!k.fits_slong_p()) throw std::invalid_argument("sl2_word: entries too large for word form");
        return static_cast<std::int64_t>(k.get_si());
    };
    // k is taken by value: callers pass entries of r, which add_row mutates.
    auto apply_upper = [&](Int k) {  // left-multiply by [[1,k],[0,1]] = T_{e1}^{-k}
        r.add_row(0, 1, k);
        ops.push_back({e1, -as_i64(k)});
    };
    auto apply_lower = [&](Int k) {  // left-multiply by [[1,0],[k,1]] = T_{e2}^{k}
        r.add_row(1, 0, k);
        ops.push_back({e2, as_i64(k)});
    };
    // Euclid on the first column; nearest-integer quotients at least halve
    // one of the two entries per pass, and det 1 makes the column primitive.
    while (r(1, 0) != 0) {
        if (r(0, 0) == 0) apply_upper(r(1, 0) > 0 ? Int(1) : Int(-1));
        Int q = ndiv(r(1, 0), r(0, 0));
        if (q != 0) apply_lower(-q);
        if (r(1, 0) != 0) {
            Int q2 = ndiv(r(0, 0), r(1, 0));
            if (q2 != 0) apply_upper(-q2);
        }
    }
    // r is now [[s, b],[0, s]] with s = +-1.
    if (r(0, 0) == 1) {
        if (r(0, 1) != 0) apply_upper(-r(0, 1));
    } else {
        if (r(0, 1) != 0) apply_upper(r(0, 1));
        // burn -I as (T_{e1} T_{e2})^3: their product has trace 1, order 6
        for (int rep = 0; rep < 3; ++rep) {
            apply_lower(Int(1));
            apply_upper(Int(-1));
        }
    }
    // Op_k ... Op_1 m = I, so m = Op_1^-1 ... Op_k^-1: emit in recorded
    // order with powers negated.
    TwistWord word;
    word.reserve(ops.size());
    for (const TwistLetter& l : ops) word.push_back({l.cls, -l.power});
    return word;
}

inline nlohmann::json to_json(const TwistWord& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TwistLetter& l : w) arr.push_back({{"class", vector_to_json(l.cls)}, {"power", l.power}});
    return arr;
}

inline TwistWord twist_word_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("twist word must be an array");
    TwistWord w;
    for (const auto& e : j) w.push_back({vector_from_json(e.at("class")), e.at("power").get<std::int64_t>()});
    return w;
}

}  // namespace twistlab
