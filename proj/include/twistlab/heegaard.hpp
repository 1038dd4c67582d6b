#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/int_matrix.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/parallel.hpp"
#include "twistlab/polynomial.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/window.hpp"

namespace twistlab {

// g disjoint, jointly primitive disk boundaries of one handlebody side:
// pairwise pairing 0 (disjoint curves), each class primitive, full rank g.
struct DiskSystem {
    std::vector<HomologyClass> classes;

    void validate(std::size_t g) const {
        if (classes.size() != g) throw std::invalid_argument("disk system needs exactly g classes");
        IntMatrix rows(g, 2 * g);
        for (std::size_t i = 0; i < g; ++i) {
            if (classes[i].size() != 2 * g) throw std::invalid_argument("disk class has wrong length");
            if (!is_primitive(classes[i])) throw std::invalid_argument("disk class must be primitive");
            rows.set_row(i, classes[i]);
            for (std::size_t j = 0; j < i; ++j)
                if (pairing(classes[i], classes[j]) != 0)
                    throw std::invalid_argument("disk classes must pairwise pair to zero");
        }
        if (rank_over_q(rows) != g) throw std::invalid_argument("disk system must have rank g");
    }
};

inline DiskSystem standard_a_system(std::size_t g) {
    DiskSystem s;
    for (std::size_t i = 0; i < g; ++i) s.classes.push_back(basis_vector(g, i));
    return s;
}

inline DiskSystem standard_b_system(std::size_t g) {
    DiskSystem s;
    for (std::size_t i = 0; i < g; ++i) s.classes.push_back(basis_vector(g, g + i));
    return s;
}

struct HeegaardData {
    std::size_t genus = 1;
    DiskSystem a_system, b_system;
    TwistWord gluing_word;
    SymplecticMap gluing;

    HeegaardData(std::size_t g, DiskSystem a, DiskSystem b, TwistWord word)
        : genus(g),
          a_system(std::move(a)),
          b_system(std::move(b)),
          gluing_word(std::move(word)),
          gluing(word_to_matrix(g, gluing_word)) {
        a_system.validate(g);
        b_system.validate(g);
    }

    HeegaardData(std::size_t g, DiskSystem a, DiskSystem b, SymplecticMap map)
        : genus(g), a_system(std::move(a)), b_system(std::move(b)), gluing(std::move(map)) {
        a_system.validate(g);
        b_system.validate(g);
        if (gluing.genus() != g) throw std::invalid_argument("gluing genus mismatch");
    }
};

// Relation matrix of the glued manifold's first homology: Z^{2g} modulo the
// row span. Rows 0..g-1 hold the A-disk classes pulled back through the
// gluing, rows g..2g-1 the B-disk classes as-is. With this layout,
// right-composing the gluing with T_c^n is exactly a row operation on the
// A-block (see twist_update below).
struct PresentationMatrix {
    std::size_t genus = 1;
    IntMatrix m;
};

inline PresentationMatrix presentation_matrix(const HeegaardData& h) {
    const std::size_t g = h.genus;
    PresentationMatrix p{g, IntMatrix(2 * g, 2 * g)};
    SymplecticMap inv = h.gluing.inverse();
    for (std::size_t i = 0; i < g; ++i) p.m.set_row(i, inv.apply(h.a_system.classes[i]));
    for (std::size_t i = 0; i < g; ++i) p.m.set_row(g + i, h.b_system.classes[i]);
    return p;
}

enum class TwistSide { right, left };

inline TwistSide side_from_string(const std::string& s) {
    if (s == "right") return TwistSide::right;
    if (s == "left") return TwistSide::left;
    throw std::invalid_argument("side must be \"right\" or \"left\"");
}

// Row-local update for composing the gluing with the n-th twist power.
//
// side=right (gluing * T_c^n): each pulled-back A-row r becomes T_c^{-n} r =
// r - n <r, c> c; the B-rows are untouched. This is an exact rebuild of
// presentation_matrix for the composed gluing.
//
// side=left: the mirror operation on the B-rows, r + n <r, c> c. Because the
// A-rows store pullbacks, a left gluing factor is not a row operation on the
// stored matrix; the update instead equals the exact rebuild with the B disk
// system twisted by T_c^n, which presents the same composition up to a
// unimodular column change and so has identical determinant and Smith data.
inline PresentationMatrix twist_update(const PresentationMatrix& p, const HomologyClass& c, std::int64_t n,
                                       TwistSide side) {
    const std::size_t g = p.genus;
    if (c.size() != 2 * g) throw std::invalid_argument("twist class has wrong length");
    if (!is_primitive(c)) throw std::invalid_argument("twist class must be primitive");
    PresentationMatrix out = p;
    const std::size_t lo = side == TwistSide::right ? 0 : g;
    const Int sign = side == TwistSide::right ? -1 : 1;
    for (std::size_t i = lo; i < lo + g; ++i) {
        std::vector<Int> row = out.m.row(i);
        Int coeff = sign * Int(static_cast<long>(n)) * pairing(row, c);
        if (coeff == 0) continue;
        for (std::size_t j = 0; j < 2 * g; ++j) row[j] += coeff * c[j];
        out.m.set_row(i, row);
    }
    return out;
}

struct HomologyInvariants {
    std::size_t b1 = 0;
    std::vector<Int> torsion;  // invariant factors > 1
    Int det = 0;
    bool finite = false;
    Int order = 0;  // |H1| when finite
};

inline HomologyInvariants homology_invariants(const PresentationMatrix& p) {
    HomologyInvariants inv;
    SmithForm s = smith_normal_form(p.m);
    inv.b1 = 2 * p.genus - s.rank;
    for (const Int& d : s.d)
        if (d > 1) inv.torsion.push_back(d);
    inv.det = determinant(p.m);
    inv.finite = inv.det != 0;
    if (inv.finite) inv.order = abs(inv.det);
    return inv;
}

inline std::size_t b1_mod_p(const PresentationMatrix& p, std::uint64_t prime) {
    return 2 * p.genus - rank_mod_p(p.m, prime);
}

// det of the twisted presentation as a polynomial in the twist power n. The
// A-block update is linear in n and only g rows move, so the degree is at
// most g; g+1 evaluations pin the polynomial exactly.
inline ZPoly det_polynomial(const PresentationMatrix& p, const HomologyClass& c, TwistSide side) {
    const std::size_t g = p.genus;
    std::vector<Int> xs, ys;
    for (std::size_t k = 0; k <= g; ++k) {
        xs.emplace_back(static_cast<long>(k));
        ys.push_back(determinant(twist_update(p, c, static_cast<std::int64_t>(k), side).m));
    }
    ZPoly poly = interpolate_integer(xs, ys);
    if (degree(poly) > static_cast<int>(g)) throw std::logic_error("det polynomial exceeded degree g");
    return poly;
}

struct ScanRow {
    std::int64_t n = 0;
    Int det;
    std::size_t b1 = 0;
    std::vector<Int> torsion;
    std::vector<std::size_t> b1_fp;  // aligned with ScanReport::primes
};

struct ScanReport {
    std::size_t genus = 1;
    TwistSide side = TwistSide::right;
    std::vector<std::uint64_t> primes;
    std::vector<ScanRow> rows;
    ZPoly det_poly;
    std::vector<std::int64_t> zero_set;
    bool det_identically_zero = false;  // reducible-style degenerate scan, reported not raised
    bool zero_set_within_inner = true;
    std::int64_t growth_threshold = 0;  // least k: |n| > k implies |det_n| >= |det_0|
    bool growth_nontrivial = false;     // threshold strictly inside the window
    std::map<std::string, bool> verdicts;

    bool all_pass() const {
        for (const auto& [name, ok] : verdicts)
            if (!ok) return false;
        return true;
    }
};

inline ScanReport coset_scan(const HeegaardData& h, const HomologyClass& c, const Window& w,
                             const std::vector<std::uint64_t>& primes, TwistSide side = TwistSide::right) {
    const std::size_t g = h.genus;
    PresentationMatrix p0 = presentation_matrix(h);
    ScanReport rep;
    rep.genus = g;
    rep.side = side;
    rep.primes = primes;
    rep.det_poly = det_polynomial(p0, c, side);
    rep.rows.resize(w.size());

    parallel_for(w.size(), [&](std::size_t idx) {
        const std::int64_t n = w.at(idx);
        PresentationMatrix pn = twist_update(p0, c, n, side);
        ScanRow row;
        row.n = n;
        row.det = determinant(pn.m);
        SmithForm s = smith_normal_form(pn.m);
        row.b1 = 2 * g - s.rank;
        for (const Int& d : s.d)
            if (d > 1) row.torsion.push_back(d);
        for (std::uint64_t p : primes) row.b1_fp.push_back(2 * g - rank_mod_p(pn.m, p));
        rep.rows[idx] = std::move(row);
    });

    // Pointwise determinants against the interpolated polynomial, and the
    // zero set read off from them.
    bool poly_matches = true;
    for (const ScanRow& row : rep.rows) {
        if (eval(rep.det_poly, Int(static_cast<long>(row.n))) != row.det) poly_matches = false;
        if (row.det == 0) {
            rep.zero_set.push_back(row.n);
            if (!w.inner_contains(row.n)) rep.zero_set_within_inner = false;
        }
    }
    rep.verdicts["det_matches_polynomial"] = poly_matches;
    rep.det_identically_zero = degree(rep.det_poly) < 0;
    rep.verdicts["zero_set_bounded_by_genus"] =
        rep.det_identically_zero || rep.zero_set.size() <= g || degree(rep.det_poly) == 0;

    // Entrywise mod-p return to the base presentation at every multiple of p,
    // and p-periodicity of the mod-p Betti number across the whole window.
    const PresentationMatrix base = twist_update(p0, c, 0, side);
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const std::uint64_t p = primes[pi];
        bool congruent = true;
        for (std::int64_t k = -(w.n / static_cast<std::int64_t>(p)); k * static_cast<std::int64_t>(p) <= w.n;
             ++k) {
            PresentationMatrix pk = twist_update(p0, c, k * static_cast<std::int64_t>(p), side);
            for (std::size_t i = 0; i < 2 * g && congruent; ++i)
                for (std::size_t j = 0; j < 2 * g && congruent; ++j)
                    if ((pk.m(i, j) - base.m(i, j)) % Int(static_cast<unsigned long>(p)) != 0) congruent = false;
        }
        rep.verdicts["mod_" + std::to_string(p) + "_returns_to_base"] = congruent;

        bool periodic = true;
        for (const ScanRow& row : rep.rows) {
            std::int64_t r = ((row.n % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                             static_cast<std::int64_t>(p);
            if (!w.contains(r)) continue;
            const ScanRow& ref = rep.rows[static_cast<std::size_t>(r + w.n)];
            if (row.b1_fp[pi] != ref.b1_fp[pi]) periodic = false;
        }
        rep.verdicts["b1_mod_" + std::to_string(p) + "_periodic"] = periodic;
    }

    // Torsion, Betti number and determinant must tell one consistent story.
    bool consistent = true;
    for (const ScanRow& row : rep.rows) {
        if (row.b1 == 0) {
            Int prod = 1;
            for (const Int& d : row.torsion) prod *= d;
            if (prod != abs(row.det)) consistent = false;
        } else if (row.det != 0) {
            consistent = false;
        }
    }
    rep.verdicts["order_torsion_consistent"] = consistent;

    // Least k such that every |n| > k in the window has |det_n| >= |det_0|.
    const Int base_abs = abs(rep.rows[static_cast<std::size_t>(w.n)].det);
    std::int64_t k = w.n;
    while (k > 0) {
        const Int& neg = rep.rows[static_cast<std::size_t>(w.n - k)].det;
        const Int& pos = rep.rows[static_cast<std::size_t>(w.n + k)].det;
        if (abs(neg) < base_abs || abs(pos) < base_abs) break;
        --k;
    }
    rep.growth_threshold = k;
    rep.growth_nontrivial = k < w.n;
    return rep;
}

// Genus-1 splitting of the lens space L(p, q). The B-disk class seen through
// the gluing is the (p, q) curve on the splitting torus, so the presentation
// is [[p, q],[0, 1]] and |H1| = p. Built from an extended-gcd completion of
// (p, q) to an SL(2, Z) column pair; the gluing is stored in word form, which
// doubles as a generation witness for the two genus-1 transvections.
inline HeegaardData lens_space(std::int64_t p, std::int64_t q) {
    if (p < 1) throw std::invalid_argument("lens space needs p >= 1");
    if (gcd_i64(p, q) != 1) throw std::invalid_argument("lens space needs gcd(p, q) = 1");
    Bezout bz = ext_gcd(Int(p), Int(q));  // p*x + q*y = 1
    IntMatrix minv(2, 2);
    minv(0, 0) = p;
    minv(0, 1) = -bz.y;
    minv(1, 0) = q;
    minv(1, 1) = bz.x;
    IntMatrix m(2, 2);  // adjugate; det(minv) = 1
    m(0, 0) = minv(1, 1);
    m(0, 1) = -minv(0, 1);
    m(1, 0) = -minv(1, 0);
    m(1, 1) = minv(0, 0);
    return HeegaardData(1, standard_a_system(1), standard_b_system(1), sl2_word(m));
}

inline nlohmann::json to_json(const HeegaardData& h) {
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& c : h.a_system.classes) a.push_back(vector_to_json(c));
    for (const auto& c : h.b_system.classes) b.push_back(vector_to_json(c));
    nlohmann::json out = {{"genus", h.genus}, {"a_system", a}, {"b_system", b}};
    // A gluing may be defined by a twist word or directly by its matrix;
    // words are preferred because they compose with scan twists textually.
    if (!h.gluing_word.empty() || h.gluing == SymplecticMap::identity(h.genus))
        out["gluing_word"] = to_json(h.gluing_word);
    else
        out["gluing_matrix"] = to_json(h.gluing.matrix());
    return out;
}

inline HeegaardData heegaard_from_json(const nlohmann::json& j) {
    const std::size_t g = j.at("genus").get<std::size_t>();
    DiskSystem a, b;
    for (const auto& c : j.at("a_system")) a.classes.push_back(vector_from_json(c));
    for (const auto& c : j.at("b_system")) b.classes.push_back(vector_from_json(c));
    if (j.contains("gluing_word"))
        return HeegaardData(g, std::move(a), std::move(b), twist_word_from_json(j.at("gluing_word")));
    if (j.contains("gluing_matrix"))
        return HeegaardData(g, std::move(a), std::move(b), SymplecticMap(matrix_from_json(j.at("gluing_matrix"))));
    throw std::invalid_argument("heegaard data needs gluing_word or gluing_matrix");
}

}  // namespace twistlab
