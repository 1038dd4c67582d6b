// Acceptance gate: ten end-to-end checks, one line of output each. Any
// failure prints its location and aborts the run with exit code 1.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twistlab/farey.hpp"
#include "twistlab/group.hpp"
#include "twistlab/heegaard.hpp"
#include "twistlab/prng.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/topology.hpp"
#include "twistlab/window.hpp"

#define REQUIRE(cond, msg)                                                                        \
    do {                                                                                          \
        if (!(cond)) {                                                                            \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg << "\n";          \
            std::exit(1);                                                                         \
        }                                                                                         \
    } while (0)

using namespace twistlab;
using farey::Slope;

namespace {

SymplecticMap random_word_map(Prng& rng, std::size_t g, std::size_t len, TwistWord* out = nullptr) {
    auto chain = chain_curve_classes(g);
    TwistWord w;
    for (std::size_t i = 0; i < len; ++i) w.push_back({rng.pick(chain), rng.range(-3, 3)});
    if (out) *out = w;
    return word_to_matrix(g, w);
}

HomologyClass random_chain_class(Prng& rng, std::size_t g) {
    auto chain = chain_curve_classes(g);
    return rng.pick(chain);
}

void pass(int k, const std::string& what) { std::cout << "[PASS] criterion " << k << ": " << what << "\n"; }

// ---- 1: lens space orders ---------------------------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    for (std::int64_t p = 1; p <= 15; ++p)
        for (std::int64_t q = 1; q <= p; ++q) {
            if (gcd_i64(p, q) != 1) continue;
            auto inv = homology_invariants(presentation_matrix(lens_space(p, q)));
            REQUIRE(inv.finite, "L(" << p << "," << q << ") must have finite H1");
            REQUIRE(inv.order == p, "L(" << p << "," << q << ") order " << to_string(inv.order));
            ++cases;
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    REQUIRE(secs < 1.0, "lens sweep took " << secs << "s");
    pass(1, "|H1(L(p,q))| = p for p in 1..15, all coprime q (" + std::to_string(cases) + " cases, " +
                std::to_string(secs) + "s)");
}

// ---- 2: standard splittings -------------------------------------------------

void criterion_2() {
    for (std::size_t g = 1; g <= 4; ++g) {
        HeegaardData dual(g, standard_a_system(g), standard_b_system(g), SymplecticMap::identity(g));
        auto sphere = homology_invariants(presentation_matrix(dual));
        REQUIRE(sphere.finite && sphere.order == 1, "dual systems at g = " << g << " give |H1| = 1");

        HeegaardData same(g, standard_a_system(g), standard_a_system(g), SymplecticMap::identity(g));
        auto doubled = homology_invariants(presentation_matrix(same));
        REQUIRE(!doubled.finite && doubled.b1 == g, "identical systems at g = " << g << " give b1 = g");
    }
    pass(2, "identity gluings: dual systems |H1| = 1, identical systems b1 = g, g <= 4");
}

// ---- 3: determinant polynomial coherence ------------------------------------

void criterion_3() {
    Prng rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t g = rng.chance(0.5) ? 2 : 3;
        HeegaardData h(g, standard_a_system(g), standard_b_system(g), random_word_map(rng, g, 4));
        HomologyClass c = random_chain_class(rng, g);
        TwistSide side = rng.chance(0.5) ? TwistSide::right : TwistSide::left;
        auto p0 = presentation_matrix(h);
        auto poly = det_polynomial(p0, c, side);
        REQUIRE(degree(poly) <= static_cast<int>(g), "degree " << degree(poly) << " exceeds g = " << g);

        for (int k = 0; k < 10; ++k) {
            std::int64_t n = rng.range(-100, 100);
            Int direct = determinant(twist_update(p0, c, n, side).m);
            REQUIRE(eval(poly, Int(static_cast<long>(n))) == direct,
                    "polynomial disagrees with determinant at n = " << n);
        }

        std::vector<std::int64_t> det_zeros, poly_zeros;
        for (std::int64_t n = -100; n <= 100; ++n) {
            if (determinant(twist_update(p0, c, n, side).m) == 0) det_zeros.push_back(n);
            if (eval(poly, Int(static_cast<long>(n))) == 0) poly_zeros.push_back(n);
        }
        REQUIRE(det_zeros == poly_zeros, "window zero set differs from polynomial roots");
        if (degree(poly) >= 1)
            REQUIRE(det_zeros.size() <= g, "nonconstant polynomial with " << det_zeros.size() << " zeros");
    }
    pass(3, "det polynomial: degree <= g, pointwise exact, window zeros = integer roots (200 cases)");
}

// ---- 4: mod-p periodicity ----------------------------------------------------

void criterion_4() {
    Prng rng(104);
    const std::vector<std::int64_t> primes{2, 3, 5};
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t g = rng.chance(0.5) ? 2 : 3;
        HeegaardData h(g, standard_a_system(g), standard_b_system(g), random_word_map(rng, g, 4));
        HomologyClass c = random_chain_class(rng, g);
        auto p0 = presentation_matrix(h);
        for (std::int64_t p : primes) {
            for (TwistSide side : {TwistSide::right, TwistSide::left}) {
                for (std::int64_t k = -(100 / p); k * p <= 100; ++k) {
                    auto pk = twist_update(p0, c, k * p, side);
                    for (std::size_t i = 0; i < 2 * g; ++i)
                        for (std::size_t j = 0; j < 2 * g; ++j)
                            REQUIRE((pk.m(i, j) - p0.m(i, j)) % Int(static_cast<long>(p)) == 0,
                                    "entry (" << i << "," << j << ") escapes mod " << p
                                              << " at n = " << k * p);
                }
            }
        }
    }
    pass(4, "twisted presentation returns to base entrywise mod p at all multiples, p in {2,3,5}");
}

// ---- 5: finite-order collapse -------------------------------------------------

template <grp::FiniteGroupOracle G>
void collapse_whole(const G& g, const grp::GeneratingSet<G>& s) {
    s.validate(g);
    auto all = g.enumerate();
    for (const auto& seed : all) {
        auto closure = topo::finite_order_collapse(g, s, seed);
        REQUIRE(closure.size() == all.size(),
                g.name() << ": closure from " << g.str(seed) << " has size " << closure.size());
    }
}

void criterion_5() {
    collapse_whole(grp::DihedralGroup(4), grp::reflection_generators(grp::DihedralGroup(4)));
    collapse_whole(grp::DihedralGroup(6), grp::reflection_generators(grp::DihedralGroup(6)));
    collapse_whole(grp::SymmetricGroup(3), grp::coxeter_generators(grp::SymmetricGroup(3)));
    collapse_whole(grp::SymmetricGroup(4), grp::coxeter_generators(grp::SymmetricGroup(4)));
    pass(5, "order-2 generating sets collapse D_4, D_6, S_3, S_4 from every seed");
}

// ---- 6: symplectic suite -------------------------------------------------------

void criterion_6() {
    Prng rng(106);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
        auto f = random_word_map(rng, g, static_cast<std::size_t>(rng.range(0, 6)));
        IntMatrix j = symplectic_j(g);
        REQUIRE(f.matrix().transpose() * j * f.matrix() == j, "M^T J M != J at g = " << g);

        HomologyClass c = random_chain_class(rng, g);
        REQUIRE(fixed_classes(transvection(g, c)).size() == 2 * g - 1,
                "twist fixed lattice rank != 2g-1 at g = " << g);

        auto lhs = f * transvection(g, c) * f.inverse();
        auto rhs = transvection(g, f.apply(c));
        REQUIRE(lhs == rhs, "conjugation covariance fails at g = " << g);
    }
    pass(6, "1000 random words: M^T J M = J, rank fix(T_c) = 2g-1, M T_c M^-1 = T_{Mc}");
}

// ---- 7: Farey exhaustive suite --------------------------------------------------

void criterion_7() {
    oracles::FareyGraphOracle oracle(60);
    auto verts = oracle.vertices_up_to(20);
    const std::size_t n = verts.size();
    REQUIRE(n > 400, "vertex census too small: " << n);

    // library distance vs breadth-first search, all pairs
    std::vector<std::int16_t> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto bfs = oracle.distances_from(verts[i]);
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t lib = farey::distance(verts[i], verts[j]);
            REQUIRE(lib == bfs[oracle.index_of(verts[j])],
                    "distance mismatch " << verts[i].str() << " -> " << verts[j].str());
            d[i * n + j] = static_cast<std::int16_t>(lib);
        }
    }

    // metric axioms
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(d[i * n + i] == 0, "d(u,u) != 0");
        for (std::size_t j = 0; j < n; ++j) {
            REQUIRE(d[i * n + j] == d[j * n + i], "asymmetric distance");
            if (i != j) REQUIRE(d[i * n + j] > 0, "distinct slopes at distance 0");
            bool adj = farey::intersection_number(verts[i], verts[j]) == 1;
            REQUIRE(adj == (d[i * n + j] == 1), "d = 1 fails to match intersection 1");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int16_t dij = d[i * n + j];
            for (std::size_t k = 0; k < n; ++k)
                REQUIRE(dij <= d[i * n + k] + d[k * n + j], "triangle inequality violated");
        }

    // twists act by isometries
    Prng rng(107);
    for (int s = 0; s < 3; ++s) {
        Slope c(rng.range(-4, 4), rng.range(1, 4));
        std::int64_t m = rng.range(-6, 6);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                REQUIRE(farey::distance(farey::twist(c, m, verts[i]), farey::twist(c, m, verts[j])) ==
                            d[i * n + j],
                        "twist about " << c.str() << "^" << m << " distorts a distance");
    }

    // annular coordinates see the twist power up to one unit
    for (const Slope& c : {Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(2, 1), Slope(3, 2)}) {
        for (const Slope& a : verts) {
            if (farey::intersection_number(a, c) < 2) continue;
            for (std::int64_t m = 1; m <= 50; ++m) {
                std::int64_t ad = farey::annular_distance(c, a, farey::twist(c, m, a));
                REQUIRE(ad == m || ad == m + 1,
                        "annular distance " << ad << " outside {n, n+1} at n = " << m);
            }
        }
    }
    pass(7, "heights <= 20 exhaustive: metric axioms, d=1 iff i=1, twist isometry, annular band");
}

// ---- 8: two-curve coset scan ------------------------------------------------------

void criterion_8() {
    Prng rng(108);
    Window w(100, 0.5);
    auto random_slope = [&]() {
        for (;;) {
            std::int64_t p = rng.range(-10, 10), q = rng.range(0, 10);
            if (p == 0 && q == 0) continue;
            if (q == 0 && (p > 1 || p < -1)) continue;
            return Slope(p, q);
        }
    };
    int done = 0;
    while (done < 50) {
        Slope a = random_slope(), b = random_slope(), c = random_slope();
        if (farey::intersection_number(a, c) < 1 || farey::intersection_number(b, c) < 1) continue;
        auto rep = farey::twist_coset_distance_scan(a, b, c, w);
        REQUIRE(rep.exceptional_within_inner,
                "exceptional n outside the inner half-window for a=" << a.str() << " b=" << b.str()
                                                                     << " c=" << c.str());
        REQUIRE(rep.upper_bound_holds, "upper bound d(a,c) + d(c,b) violated for a="
                                           << a.str() << " b=" << b.str() << " c=" << c.str());
        ++done;
    }
    pass(8, "50 random triples, window 100: exceptional set confined, twist-coset bound holds");
}

// ---- 9: incremental vs fresh presentation ------------------------------------------

void criterion_9() {
    Prng rng(109);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
        HeegaardData h(g, standard_a_system(g), standard_b_system(g), random_word_map(rng, g, 4));
        HomologyClass c = random_chain_class(rng, g);
        std::int64_t m = rng.range(-50, 50);
        auto p0 = presentation_matrix(h);
        if (rng.chance(0.5)) {
            REQUIRE(twist_update(p0, c, m, TwistSide::right).m == oracles::fresh_right(h, c, m).m,
                    "right update differs from recomposed gluing at n = " << m);
        } else {
            REQUIRE(twist_update(p0, c, m, TwistSide::left).m == oracles::fresh_left(h, c, m).m,
                    "left update differs from twisted-system rebuild at n = " << m);
        }
    }
    pass(9, "500 random (h, c, n, side): row update equals the from-scratch presentation");
}

// ---- 10: morphism continuity harness --------------------------------------------------

// Words in chain-curve twists under concatenation; canonical form merges
// adjacent letters on the same class and drops zero powers.
class WordGroup {
public:
    using Elem = TwistWord;

    explicit WordGroup(std::size_t g) : g_(g) {}

    Elem mul(const Elem& a, const Elem& b) const {
        Elem r = a;
        r.insert(r.end(), b.begin(), b.end());
        return canon(r);
    }
    Elem inv(const Elem& a) const {
        Elem r;
        for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back({it->cls, -it->power});
        return canon(r);
    }
    Elem id() const { return {}; }
    Elem canon(const Elem& a) const {
        Elem r;
        for (const TwistLetter& l : a) {
            if (!r.empty() && r.back().cls == l.cls) {
                r.back().power += l.power;
                if (r.back().power == 0) r.pop_back();
            } else if (l.power != 0) {
                r.push_back(l);
            }
        }
        return r;
    }
    std::string name() const { return "TwistWords(g=" + std::to_string(g_) + ")"; }
    std::string str(const Elem& a) const {
        if (a.empty()) return "1";
        std::string s;
        for (const TwistLetter& l : a) s += "T^" + std::to_string(l.power) + " ";
        return s;
    }

private:
    std::size_t g_;
};

class SpGroup {
public:
    using Elem = IntMatrix;

    explicit SpGroup(std::size_t g) : g_(g) {}

    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return SymplecticMap(a).inverse().matrix(); }
    Elem id() const { return IntMatrix::identity(2 * g_); }
    Elem canon(const Elem& a) const { return a; }
    std::string name() const { return "Sp(" + std::to_string(2 * g_) + ",Z)"; }
    std::string str(const Elem& a) const {
        std::string s = "[";
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) s += to_string(a(i, j)) + (j + 1 < a.cols() ? "," : ";");
        return s + "]";
    }

private:
    std::size_t g_;
};

void criterion_10() {
    Window w(50, 0.5);
    for (std::size_t g : {std::size_t{1}, std::size_t{2}}) {
        WordGroup wg(g);
        SpGroup sp(g);
        auto phi = [g](const TwistWord& word) { return word_to_matrix(g, word).matrix(); };

        // distinct chain classes as single-letter generators
        std::vector<HomologyClass> classes;
        for (const auto& c : chain_curve_classes(g))
            if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
        if (classes.size() > 3) classes.resize(3);
        std::vector<TwistWord> gens;
        for (const auto& c : classes) gens.push_back(wg.canon({{c, 1}}));

        Prng rng(110 + static_cast<std::uint64_t>(g));
        std::vector<TwistWord> bases{wg.id()};
        for (int i = 0; i < 2; ++i) {
            TwistWord b;
            for (int k = 0; k < 3; ++k) b.push_back({classes[rng.below(classes.size())], rng.range(-2, 2)});
            bases.push_back(wg.canon(b));
        }

        const IntMatrix eye = IntMatrix::identity(2 * g);
        grp::Subset<SpGroup> regular{"det(M - I) != 0", [eye](const IntMatrix& m) {
                                         return determinant(m - eye) != 0;
                                     }};
        grp::Subset<SpGroup> nontrivial{"M != I", [eye](const IntMatrix& m) { return m != eye; }};

        for (const auto& uh : {regular, nontrivial}) {
            auto rep = topo::morphism_pullback_check(wg, sp, phi, uh, bases, gens, w);
            REQUIRE(rep.hom_ok, "word-to-matrix map failed the homomorphism check at g = " << g);
            REQUIRE(rep.sets_match,
                    "exception sets disagree for U = " << uh.label << " at g = " << g << ": " << rep.detail);
            REQUIRE(rep.checked == bases.size() * gens.size() * 2, "unexpected probe count");
        }
    }
    pass(10, "word-level map pulls back exception sets exactly on all sampled cosets, g in {1,2}");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << "[PASS] all 10 criteria\n";
    return 0;
}
