#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "twistlab/int_matrix.hpp"
#include "twistlab/polynomial.hpp"
#include "twistlab/prng.hpp"

using twistlab::Int;
using twistlab::IntMatrix;
using twistlab::Rat;
using twistlab::ZPoly;

TEST_CASE("characteristic polynomial on pinned inputs") {
    // low degree first: det(xI - A)
    CHECK(twistlab::char_poly(IntMatrix{{2, 1}, {1, 1}}) == ZPoly{1, -3, 1});
    CHECK(twistlab::char_poly(IntMatrix::identity(2)) == ZPoly{1, -2, 1});
    CHECK(twistlab::char_poly(IntMatrix{{0, -1}, {1, 0}}) == ZPoly{1, 0, 1});
    CHECK_THROWS_AS(twistlab::char_poly(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("characteristic polynomial matches det(tI - A) pointwise") {
    twistlab::Prng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.range(-8, 8);
        ZPoly p = twistlab::char_poly(a);
        for (std::int64_t t = -4; t <= 4; ++t) {
            IntMatrix ti = IntMatrix::identity(n);
            for (std::size_t i = 0; i < n; ++i) ti(i, i) = t;
            CHECK(twistlab::eval(p, Int(static_cast<long>(t))) == twistlab::determinant(ti - a));
        }
    }
}

TEST_CASE("integer interpolation") {
    // x^2 through three points
    std::vector<Int> xs{Int(0), Int(1), Int(2)};
    std::vector<Int> ys{Int(0), Int(1), Int(4)};
    CHECK(twistlab::interpolate_integer(xs, ys) == ZPoly{0, 0, 1});

    // constant
    CHECK(twistlab::interpolate_integer({Int(3)}, {Int(7)}) == ZPoly{7});

    // points off any integer polynomial of degree < 2
    CHECK_THROWS_AS(twistlab::interpolate_integer({Int(0), Int(2)}, {Int(0), Int(1)}), std::logic_error);
    CHECK_THROWS_AS(twistlab::interpolate_integer({}, {}), std::invalid_argument);
}

TEST_CASE("kronecker product respects the tensor action") {
    twistlab::Prng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(2, 2), b(3, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = rng.range(-5, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) b(i, j) = rng.range(-5, 5);
        std::vector<Int> u{Int(rng.range(-5, 5)), Int(rng.range(-5, 5))};
        std::vector<Int> v{Int(rng.range(-5, 5)), Int(rng.range(-5, 5)), Int(rng.range(-5, 5))};
        std::vector<Int> uv(6);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) uv[i * 3 + j] = u[i] * v[j];
        auto lhs = twistlab::kronecker(a, b).apply(uv);
        auto au = a.apply(u);
        auto bv = b.apply(v);
        std::vector<Int> rhs(6);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) rhs[i * 3 + j] = au[i] * bv[j];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sturm chain root counting") {
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    auto chain = twistlab::sturm_chain(ZPoly{-6, 11, -6, 1});
    CHECK(chain.count_in(Rat(1), Rat(3)) == 2);      // half-open: 2 and 3
    CHECK(chain.count_in(Rat(0), Rat(4)) == 3);
    CHECK(chain.count_in(Rat(3, 2), Rat(5, 2)) == 1);  // just 2
    CHECK(chain.count_in(Rat(4), Rat(9)) == 0);
}

TEST_CASE("largest real root enclosure") {
    Rat eps(1, 1000000000);

    // x^2 - 3x + 1: largest root (3 + sqrt 5)/2
    auto enc = twistlab::max_real_root(ZPoly{1, -3, 1}, eps);
    REQUIRE(enc);
    double root = 0.5 * (3.0 + std::sqrt(5.0));
    CHECK(enc->second - enc->first <= eps);
    CHECK(enc->first.get_d() <= root + 1e-12);
    CHECK(enc->second.get_d() >= root - 1e-12);

    // no real root
    CHECK_FALSE(twistlab::max_real_root(ZPoly{1, 0, 1}, eps));

    // linear: 2x - 3
    auto lin = twistlab::max_real_root(ZPoly{-3, 2}, eps);
    REQUIRE(lin);
    CHECK(lin->first <= Rat(3, 2));
    CHECK(Rat(3, 2) <= lin->second);

    // repeated root below a simple one: (x-1)^2 (x-2)
    auto rep = twistlab::max_real_root(ZPoly{-2, 5, -4, 1}, eps);
    REQUIRE(rep);
    CHECK(rep->first <= Rat(2));
    CHECK(Rat(2) <= rep->second);

    // x^2 - 4
    auto even = twistlab::max_real_root(ZPoly{-4, 0, 1}, eps);
    REQUIRE(even);
    CHECK(even->first <= Rat(2));
    CHECK(Rat(2) <= even->second);

    // constants have no roots
    CHECK_FALSE(twistlab::max_real_root(ZPoly{5}, eps));
}
