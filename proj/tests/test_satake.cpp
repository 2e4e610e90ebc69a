#include "doctest.h"

#include <cmath>

#include "gsp/satake.hpp"

using namespace gsp;

TEST_CASE("satake data validates its shape") {
    CHECK_THROWS_AS(SatakeData(0, 2, {}), gsp_error);
    CHECK_THROWS_AS(SatakeData(1, 1, {Rational(1)}), gsp_error);
    CHECK_THROWS_AS(SatakeData(2, 2, {Rational(1)}), gsp_error);
    CHECK_THROWS_AS(SatakeData(1, 2, {Rational(0)}), gsp_error);
}

TEST_CASE("closed form matches a hand-computed value") {
    // n=1, alpha=1, chi=1, q=2, s=3/2: exponents e2=6, e1=5, e3=10, so
    // zeta = (1-2^{-6})(1-2^{-10})/(1-2^{-5})^3 = 64449/59582.
    SatakeData sd(1, 2, {Rational(1)}, Rational(1));
    ZetaValue z = unramified_zeta_closed(sd, {Rational(3, 2)});
    REQUIRE(z.exact);
    CHECK(z.exact_value == Rational(64449, 59582));
}

TEST_CASE("series converges to the closed form with a certified tail") {
    SatakeData sd(2, 3, {Rational(2), Rational(1, 2)}, Rational(-1));
    EvaluationPoint s{Rational(3, 2)};
    ZetaValue closed = unramified_zeta_closed(sd, s);
    ZetaValue lo = unramified_zeta_series(sd, s, 6);
    ZetaValue hi = unramified_zeta_series(sd, s, 20);
    REQUIRE(closed.exact);
    REQUIRE(lo.exact);
    Rational dlo = lo.exact_value - closed.exact_value;
    if (dlo < 0) dlo = -dlo;
    Rational dhi = hi.exact_value - closed.exact_value;
    if (dhi < 0) dhi = -dhi;
    CHECK(dlo <= Rational(lo.tail_bound));
    CHECK(dhi <= Rational(hi.tail_bound));
    CHECK(dhi < dlo);  // deeper truncation is strictly better here
    CHECK(hi.tail_bound < lo.tail_bound);
}

TEST_CASE("depth zero keeps only the unit cell") {
    SatakeData sd(1, 2, {Rational(3)}, Rational(1));
    ZetaValue z = unramified_zeta_series(sd, {Rational(2)}, 0);
    CHECK(z.value == 1.0);
    CHECK(z.tail_bound > 0.0);
}

TEST_CASE("series refuses divergent parameters") {
    // huge chi pushes |c| * rho_max past 1
    SatakeData sd(1, 2, {Rational(1)}, Rational(1000000));
    CHECK_THROWS_WITH_AS(
        unramified_zeta_series(sd, {Rational(1, 2)}, 8),
        "zeta series divergent: tail bound infinite at this s", gsp_error);
}

TEST_CASE("closed form reports a pole in the standard factor") {
    // alpha = q^{e1} makes 1 - chi alpha q^{-e1} vanish: n=1, s=1/2 -> e1=2.
    SatakeData sd(1, 2, {Rational(4)}, Rational(1));
    CHECK_THROWS_AS(unramified_zeta_closed(sd, {Rational(1, 2)}), gsp_error);
}

TEST_CASE("non-integral exponents fall back to certified doubles") {
    SatakeData sd(1, 3, {Rational(3, 2)}, Rational(1));
    EvaluationPoint s{Rational(2)};  // e2 = 15/2
    ZetaValue zs = unramified_zeta_series(sd, s, 24);
    ZetaValue zc = unramified_zeta_closed(sd, s);
    CHECK_FALSE(zs.exact);
    CHECK_FALSE(zc.exact);
    CHECK(std::fabs(zs.value - zc.value) <=
          zs.tail_bound + 1e-12 * std::fabs(zc.value));
}

TEST_CASE("exact and double views of the same series agree") {
    SatakeData sd(1, 2, {Rational(5, 3)}, Rational(1, 2));
    ZetaValue z = unramified_zeta_series(sd, {Rational(3, 2)}, 12);
    REQUIRE(z.exact);
    CHECK(std::fabs(to_double(z.exact_value) - z.value) <=
          1e-12 * std::fabs(z.value));
}
