#include "doctest.h"

#include <vector>

#include "gsp/satake.hpp"

using namespace gsp;

TEST_CASE("rationality series coefficients are Weyl invariant") {
    // Invariance under X_i <-> X_j and X_i -> X_i^{-1}; variable 0 is q.
    for (int n = 1; n <= 3; ++n) {
        auto series = rationality_series(n, 8);
        for (int d = 0; d <= 8; ++d) {
            const LaurentPolynomial& c = series.coeff(d);
            for (int i = 1; i <= n; ++i) CHECK(c.invert_var(i) == c);
            if (n >= 2) {
                std::vector<int> swap01(n + 1);
                for (int v = 0; v <= n; ++v) swap01[v] = v;
                std::swap(swap01[1], swap01[2]);
                CHECK(c.permute_vars(swap01) == c);
            }
            if (n == 3) {
                std::vector<int> cyc = {0, 2, 3, 1};  // X1->X2->X3->X1
                CHECK(c.permute_vars(cyc) == c);
            }
        }
    }
}

TEST_CASE("numeric specialization matches symbolic substitution") {
    const int D = 6;
    auto sym = rationality_series(1, D);
    std::vector<Rational> x = {Rational(3, 2)};
    auto numer = rationality_series_numeric(1, Rational(2), x, D);
    for (int d = 0; d <= D; ++d)
        CHECK(sym.coeff(d).eval({Rational(2), Rational(3, 2)}) == numer.coeff(d));
    CHECK_THROWS_AS(rationality_series_numeric(1, Rational(2), {Rational(0)}, D),
                    gsp_error);
}

TEST_CASE("cartan volume route equals the telescoped closed form") {
    for (int n = 1; n <= 3; ++n)
        for (long q : {2L, 3L}) {
            auto a = cartan_volume_series(n, q, 10);
            auto b = telescoped_volume_series(n, q, 10);
            for (int d = 0; d <= 10; ++d) CHECK(a.coeff(d) == b.coeff(d));
        }
}

TEST_CASE("volumes are positive integers in the normalization vol(K)=1 scale") {
    for (int n = 2; n <= 3; ++n) {
        auto vol = cartan_volume_series(n, 2, 8);
        for (int d = 0; d <= 8; ++d) {
            CHECK(vol.coeff(d) > 0);
            CHECK(den(vol.coeff(d)) == 1);
        }
    }
}

TEST_CASE("n=1 volumes follow q^{2e-1}(q+1)") {
    auto vol = cartan_volume_series(1, 5, 4);
    CHECK(vol.coeff(0) == Rational(1));
    for (int e = 1; e <= 4; ++e)
        CHECK(vol.coeff(e) == rat_pow(Rational(5), 2 * e - 1) * Rational(6));
}

TEST_CASE("lattice enumeration agrees with the generating function") {
    for (long q : {2L, 3L}) {
        auto vol = cartan_volume_series(1, q, 2);
        for (int e = 1; e <= 2; ++e)
            CHECK(Rational(sl2_cell_count_bruteforce(q, e)) == vol.coeff(e));
    }
}

TEST_CASE("truncated series arithmetic truncates to the shorter operand") {
    TruncatedSeries<Rational> a({Rational(1), Rational(2), Rational(3)});
    TruncatedSeries<Rational> b({Rational(1), Rational(-1)});
    auto p = a * b;
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(1));
}

TEST_CASE("series inversion rejects factors singular at the origin") {
    std::vector<SeriesFactor<Rational>> bad = {
        {{Rational(1)}, {Rational(0), Rational(1)}}};
    CHECK_THROWS_AS(series_from_rational_factors(bad, 4), gsp_error);
}

TEST_CASE("geometric factor expands to the expected coefficients") {
    // 1/(1 - 3Y) through the generic inverter
    std::vector<SeriesFactor<Rational>> f = {
        {{Rational(1)}, {Rational(1), Rational(-3)}}};
    auto s = series_from_rational_factors(f, 5);
    Rational p(1);
    for (int d = 0; d <= 5; ++d) {
        CHECK(s.coeff(d) == p);
        p *= 3;
    }
}
