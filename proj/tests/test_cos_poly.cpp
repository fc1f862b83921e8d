#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dct3mg/cos_poly.hpp"

#include <cmath>
#include <random>

using namespace dct3mg;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("normalize trims trailing zeros and keeps the zero polynomial canonical") {
    CosPoly a{1.0, 0.0, 0.0};
    CHECK(a.degree() == 0);
    CHECK(a.c.size() == 1);

    CosPoly z{0.0};
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);

    CosPoly tiny{1.0, 1e-20};
    CHECK(tiny.degree() == 0);

    CosPoly def;
    CHECK(def.is_zero());
}

TEST_CASE("eval sums cosine harmonics") {
    CosPoly f{2.0, -2.0};
    CHECK(eval(f, 0.0) == doctest::Approx(0.0));
    CHECK(eval(f, kPi) == doctest::Approx(4.0));
    CHECK(eval(f, kPi / 2) == doctest::Approx(2.0));
    CHECK(eval(f, kPi / 3) == doctest::Approx(1.0));
}

TEST_CASE("multiply uses the product-to-sum rule") {
    CosPoly c1{0.0, 1.0};
    CosPoly sq = multiply(c1, c1);
    REQUIRE(sq.degree() == 2);
    CHECK(sq[0] == doctest::Approx(0.5));
    CHECK(sq[1] == doctest::Approx(0.0));
    CHECK(sq[2] == doctest::Approx(0.5));

    CosPoly u{2.0, -2.0};
    CosPoly v{2.0, 2.0};
    CosPoly w = multiply(u, v);
    REQUIRE(w.degree() == 2);
    CHECK(w[0] == doctest::Approx(2.0));
    CHECK(w[1] == doctest::Approx(0.0));
    CHECK(w[2] == doctest::Approx(-2.0));
}

TEST_CASE("multiply agrees with pointwise products on random inputs") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> ca(1 + gen() % 5), cb(1 + gen() % 5);
        for (auto& x : ca) x = dist(gen);
        for (auto& x : cb) x = dist(gen);
        CosPoly a(ca), b(cb);
        CosPoly ab = multiply(a, b);
        for (int s = 0; s <= 16; ++s) {
            const double x = s * kPi / 16;
            CHECK(eval(ab, x) == doctest::Approx(eval(a, x) * eval(b, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("pow_poly repeats multiplication") {
    CosPoly p{2.0, 2.0};
    CosPoly p2 = pow_poly(p, 2);
    REQUIRE(p2.degree() == 2);
    CHECK(p2[0] == doctest::Approx(6.0));
    CHECK(p2[1] == doctest::Approx(8.0));
    CHECK(p2[2] == doctest::Approx(2.0));

    CosPoly p0 = pow_poly(p, 0);
    CHECK(p0.degree() == 0);
    CHECK(p0[0] == doctest::Approx(1.0));
}

TEST_CASE("reflect flips the sign of odd harmonics") {
    CosPoly f{2.0, -2.0};
    CosPoly g = reflect(f);
    REQUIRE(g.degree() == 1);
    CHECK(g[0] == doctest::Approx(2.0));
    CHECK(g[1] == doctest::Approx(2.0));
    for (int s = 0; s <= 8; ++s) {
        const double x = s * kPi / 8;
        CHECK(eval(g, x) == doctest::Approx(eval(f, kPi - x)).epsilon(1e-13));
    }
}

TEST_CASE("add and scale are coefficient-wise") {
    CosPoly a{1.0, 2.0};
    CosPoly b{0.5, -2.0, 3.0};
    CosPoly s = add(a, b);
    REQUIRE(s.degree() == 2);
    CHECK(s[0] == doctest::Approx(1.5));
    CHECK(s[1] == doctest::Approx(0.0));
    CHECK(s[2] == doctest::Approx(3.0));

    CosPoly t = scale(b, -2.0);
    CHECK(t[0] == doctest::Approx(-1.0));
    CHECK(t[2] == doctest::Approx(-6.0));

    CosPoly cancel = add(a, scale(a, -1.0));
    CHECK(cancel.is_zero());
}

TEST_CASE("bivariate grids evaluate and multiply consistently") {
    CosPoly g{2.0, -2.0};
    CosPoly h{1.0, 1.0};
    CosPoly2 gh = outer(g, h);
    REQUIRE(gh.nx == 2);
    REQUIRE(gh.ny == 2);
    for (int sx = 0; sx <= 6; ++sx)
        for (int sy = 0; sy <= 6; ++sy) {
            const double x = sx * kPi / 6, y = sy * kPi / 6;
            CHECK(eval(gh, x, y) == doctest::Approx(eval(g, x) * eval(h, y)).epsilon(1e-13));
        }

    CosPoly2 sum = add(outer(g, CosPoly{1.0}), outer(CosPoly{1.0}, g));
    CosPoly2 prod = multiply(sum, sum);
    for (int sx = 0; sx <= 5; ++sx)
        for (int sy = 0; sy <= 5; ++sy) {
            const double x = sx * kPi / 5, y = sy * kPi / 5;
            const double s = eval(g, x) + eval(g, y);
            CHECK(eval(prod, x, y) == doctest::Approx(s * s).epsilon(1e-12));
        }
}
