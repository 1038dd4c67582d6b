#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twistlab/heegaard.hpp"
#include "twistlab/prng.hpp"

using twistlab::DiskSystem;
using twistlab::HeegaardData;
using twistlab::HomologyClass;
using twistlab::Int;
using twistlab::IntMatrix;
using twistlab::SymplecticMap;
using twistlab::TwistSide;
using twistlab::TwistWord;

namespace {

HomologyClass hc(std::initializer_list<long> v) {
    HomologyClass c;
    for (long x : v) c.emplace_back(x);
    return c;
}

SymplecticMap random_gluing(twistlab::Prng& rng, std::size_t g, std::size_t len) {
    auto chain = twistlab::chain_curve_classes(g);
    TwistWord w;
    for (std::size_t i = 0; i < len; ++i) w.push_back({rng.pick(chain), rng.range(-3, 3)});
    return twistlab::word_to_matrix(g, w);
}

}  // namespace

TEST_CASE("disk system validation") {
    CHECK_NOTHROW(twistlab::standard_a_system(3).validate(3));
    CHECK_NOTHROW(twistlab::standard_b_system(3).validate(3));

    DiskSystem bad;
    bad.classes = {hc({1, 0}), hc({1, 0})};  // wrong count for g = 1
    CHECK_THROWS_AS(bad.validate(1), std::invalid_argument);

    DiskSystem crossing;
    crossing.classes = {hc({1, 0, 0, 0}), hc({0, 0, 1, 0})};  // pair to 1
    CHECK_THROWS_AS(crossing.validate(2), std::invalid_argument);

    DiskSystem dependent;
    dependent.classes = {hc({1, 0, 0, 0}), hc({-1, 0, 0, 0})};  // rank 1
    CHECK_THROWS_AS(dependent.validate(2), std::invalid_argument);

    DiskSystem imprimitive;
    imprimitive.classes = {hc({2, 0}), };
    CHECK_THROWS_AS(imprimitive.validate(1), std::invalid_argument);
}

TEST_CASE("standard splittings") {
    // identity gluing of dual systems: S^3-like, trivial first homology
    for (std::size_t g = 1; g <= 4; ++g) {
        HeegaardData h(g, twistlab::standard_a_system(g), twistlab::standard_b_system(g),
                       SymplecticMap::identity(g));
        auto inv = twistlab::homology_invariants(twistlab::presentation_matrix(h));
        CHECK(inv.finite);
        CHECK(inv.order == 1);
        CHECK(inv.b1 == 0);
        CHECK(inv.torsion.empty());
    }
    // identical systems: double of a handlebody, b1 = g
    for (std::size_t g = 1; g <= 4; ++g) {
        HeegaardData h(g, twistlab::standard_a_system(g), twistlab::standard_a_system(g),
                       SymplecticMap::identity(g));
        auto inv = twistlab::homology_invariants(twistlab::presentation_matrix(h));
        CHECK_FALSE(inv.finite);
        CHECK(inv.b1 == g);
    }
}

TEST_CASE("lens spaces") {
    auto p1 = twistlab::presentation_matrix(twistlab::lens_space(5, 1));
    CHECK(p1.m == IntMatrix{{5, 1}, {0, 1}});
    auto inv5 = twistlab::homology_invariants(p1);
    CHECK(inv5.order == 5);
    CHECK(inv5.torsion == std::vector<Int>{5});

    auto inv7 = twistlab::homology_invariants(twistlab::presentation_matrix(twistlab::lens_space(7, 2)));
    CHECK(inv7.order == 7);
    CHECK(inv7.b1 == 0);

    // p = 1 is the trivial quotient
    auto inv1 = twistlab::homology_invariants(twistlab::presentation_matrix(twistlab::lens_space(1, 0)));
    CHECK(inv1.order == 1);

    CHECK_THROWS_AS(twistlab::lens_space(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(twistlab::lens_space(0, 1), std::invalid_argument);

    // mod p the single relation degenerates
    CHECK(twistlab::b1_mod_p(twistlab::presentation_matrix(twistlab::lens_space(5, 1)), 5) == 1);
    CHECK(twistlab::b1_mod_p(twistlab::presentation_matrix(twistlab::lens_space(5, 1)), 3) == 0);
}

TEST_CASE("twist update equals the from-scratch rebuild") {
    twistlab::Prng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
        HeegaardData h(g, twistlab::standard_a_system(g), twistlab::standard_b_system(g),
                       random_gluing(rng, g, 4));
        auto chain = twistlab::chain_curve_classes(g);
        const auto& c = rng.pick(chain);
        std::int64_t n = rng.range(-25, 25);
        auto p0 = twistlab::presentation_matrix(h);
        if (rng.chance(0.5)) {
            CHECK(twistlab::twist_update(p0, c, n, TwistSide::right).m == oracles::fresh_right(h, c, n).m);
        } else {
            CHECK(twistlab::twist_update(p0, c, n, TwistSide::left).m == oracles::fresh_left(h, c, n).m);
        }
    }
}

TEST_CASE("twist update edge cases") {
    HeegaardData h(1, twistlab::standard_a_system(1), twistlab::standard_b_system(1),
                   SymplecticMap::identity(1));
    auto p0 = twistlab::presentation_matrix(h);

    // n = 0 never moves anything
    CHECK(twistlab::twist_update(p0, hc({1, 0}), 0, TwistSide::right).m == p0.m);
    CHECK(twistlab::twist_update(p0, hc({1, 0}), 0, TwistSide::left).m == p0.m);

    // rows pairing to zero with c stay fixed: A-row is e1, twist about e1
    auto moved = twistlab::twist_update(p0, hc({1, 0}), 7, TwistSide::right);
    CHECK(moved.m.row(0) == p0.m.row(0));

    CHECK_THROWS_AS(twistlab::twist_update(p0, hc({2, 0}), 1, TwistSide::right), std::invalid_argument);
    CHECK_THROWS_AS(twistlab::twist_update(p0, hc({1, 0, 0, 0}), 1, TwistSide::right), std::invalid_argument);

    CHECK(twistlab::side_from_string("right") == TwistSide::right);
    CHECK(twistlab::side_from_string("left") == TwistSide::left);
    CHECK_THROWS_AS(twistlab::side_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("determinant polynomial in the twist power") {
    twistlab::Prng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
        HeegaardData h(g, twistlab::standard_a_system(g), twistlab::standard_b_system(g),
                       random_gluing(rng, g, 4));
        auto chain = twistlab::chain_curve_classes(g);
        const auto& c = rng.pick(chain);
        TwistSide side = rng.chance(0.5) ? TwistSide::right : TwistSide::left;
        auto p0 = twistlab::presentation_matrix(h);
        auto poly = twistlab::det_polynomial(p0, c, side);
        CHECK(twistlab::degree(poly) <= static_cast<int>(g));
        for (int k = 0; k < 10; ++k) {
            std::int64_t n = rng.range(-100, 100);
            Int direct = twistlab::determinant(twistlab::twist_update(p0, c, n, side).m);
            CHECK(twistlab::eval(poly, Int(static_cast<long>(n))) == direct);
        }
    }
}

TEST_CASE("coset scan on a lens space") {
    auto h = twistlab::lens_space(5, 1);
    twistlab::Window w(30, 0.5);
    auto rep = twistlab::coset_scan(h, hc({0, 1}), w, {2, 3, 5});
    CHECK(rep.all_pass());
    CHECK(rep.verdicts.at("det_matches_polynomial"));
    CHECK(rep.verdicts.at("zero_set_bounded_by_genus"));
    CHECK(rep.verdicts.at("mod_2_returns_to_base"));
    CHECK(rep.verdicts.at("mod_3_returns_to_base"));
    CHECK(rep.verdicts.at("mod_5_returns_to_base"));
    CHECK(rep.verdicts.at("b1_mod_2_periodic"));
    CHECK(rep.verdicts.at("order_torsion_consistent"));
    REQUIRE(rep.rows.size() == w.size());

    // L(5, 1 + 5n) family: |H1| = 5 at every n
    for (const auto& row : rep.rows) {
        CHECK(abs(row.det) == 5);
        CHECK(row.b1 == 0);
    }
    CHECK(rep.zero_set.empty());
    CHECK(rep.growth_threshold == 0);
}

TEST_CASE("coset scan on random genus-2 splittings") {
    twistlab::Prng rng(43);
    twistlab::Window w(15, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        HeegaardData h(2, twistlab::standard_a_system(2), twistlab::standard_b_system(2),
                       random_gluing(rng, 2, 3));
        auto chain = twistlab::chain_curve_classes(2);
        const auto& c = rng.pick(chain);
        TwistSide side = rng.chance(0.5) ? TwistSide::right : TwistSide::left;
        auto rep = twistlab::coset_scan(h, c, w, {2, 3}, side);
        INFO("trial " << trial);
        CHECK(rep.all_pass());
        CHECK(rep.rows.size() == w.size());
    }
}

TEST_CASE("heegaard JSON round trips") {
    auto h = twistlab::lens_space(7, 2);
    auto j = twistlab::to_json(h);
    REQUIRE(j.contains("gluing_word"));
    auto back = twistlab::heegaard_from_json(j);
    CHECK(back.genus == h.genus);
    CHECK(back.gluing == h.gluing);

    // matrix-backed gluing has no word to serialize
    HeegaardData m(1, twistlab::standard_a_system(1), twistlab::standard_b_system(1),
                   SymplecticMap(IntMatrix{{2, 1}, {1, 1}}));
    auto jm = twistlab::to_json(m);
    REQUIRE(jm.contains("gluing_matrix"));
    auto mback = twistlab::heegaard_from_json(jm);
    CHECK(mback.gluing == m.gluing);

    CHECK_THROWS_AS(twistlab::heegaard_from_json(nlohmann::json{{"genus", 1},
                                                                {"a_system", {{1, 0}}},
                                                                {"b_system", {{0, 1}}}}),
                    std::invalid_argument);
}
