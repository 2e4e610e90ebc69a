#include "doctest.h"

#include <cmath>

#include "gsp/arch.hpp"
#include "gsp/oracles.hpp"

using namespace gsp;

namespace {
QuadratureConfig adaptive() {
    QuadratureConfig cfg;
    cfg.method = QuadratureConfig::Method::adaptive;
    cfg.tolerance = 1e-11;
    return cfg;
}
}  // namespace

TEST_CASE("unit-interval rule handles endpoint singularities") {
    QuadResult r = integrate_unit(
        [](double u, double) { return 1.0 / std::sqrt(u); }, 1e-12);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
    QuadResult s = integrate_unit(
        [](double, double um1) { return std::log(um1); }, 1e-12);
    CHECK(s.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("nested 2d rule") {
    QuadResult r = integrate_unit2(
        [](double u, double, double v, double) { return u * v; }, 1e-12);
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-10));
    // singular at both lower endpoints: integral of (uv)^{-1/4} = (4/3)^2;
    // factors kept separate so extreme nodes do not underflow the product
    QuadResult s = integrate_unit2(
        [](double u, double, double v, double) {
            return std::pow(u, -0.25) * std::pow(v, -0.25);
        },
        1e-12);
    CHECK(s.value == doctest::Approx(16.0 / 9.0).epsilon(1e-8));
}

TEST_CASE("configuration guards") {
    QuadratureConfig cfg;
    cfg.budget = 0;
    CHECK_THROWS_WITH_AS(validate(cfg), "quadrature budget must be positive",
                         gsp_error);
    cfg = QuadratureConfig{};
    cfg.cutoff = 1.0;
    CHECK_THROWS_WITH_AS(validate(cfg), "cutoff R must exceed 1", gsp_error);
    cfg = QuadratureConfig{};
    cfg.tolerance = 0.0;
    CHECK_THROWS_WITH_AS(validate(cfg), "tolerance must be positive", gsp_error);
    cfg = QuadratureConfig{};
    cfg.shards = 0;
    CHECK_THROWS_WITH_AS(validate(cfg), "shard count must be positive", gsp_error);
}

TEST_CASE("stratified Monte Carlo is reproducible and seed-sensitive") {
    auto f = [](double x, double y) { return std::exp(-x * y); };
    QuadratureConfig cfg;
    cfg.method = QuadratureConfig::Method::monte_carlo;
    cfg.budget = 200000;
    cfg.seed = 42;
    QuadResult a = mc_stratified_square(f, cfg);
    QuadResult b = mc_stratified_square(f, cfg);
    CHECK(a.value == b.value);  // bitwise: fixed grid, seeds, reduction order
    CHECK(a.error == b.error);
    cfg.seed = 43;
    QuadResult c = mc_stratified_square(f, cfg);
    CHECK(a.value != c.value);
    // both estimates bracket the true value 0.7965995992...
    const double truth = 0.79659959924961065;
    CHECK(std::fabs(a.value - truth) <= a.error);
    CHECK(std::fabs(c.value - truth) <= c.error);
}

TEST_CASE("selberg n=1 equals 1/z") {
    QuadResult r = quad_selberg(1, 3.0, adaptive());
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    QuadResult r4 = quad_selberg(1, 4.0, adaptive());
    CHECK(r4.value == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("selberg n=2 tensor and Monte Carlo agree with gamma_2") {
    const double z = 4.0;
    const double closed = to_double(gamma_n(2).eval(Rational(4)));  // 1/60
    QuadratureConfig tensor;
    tensor.method = QuadratureConfig::Method::tensor;
    tensor.tolerance = 1e-10;
    QuadResult t = quad_selberg(2, z, tensor);
    CHECK(t.value == doctest::Approx(closed).epsilon(1e-7));
    QuadratureConfig mc;
    mc.method = QuadratureConfig::Method::monte_carlo;
    mc.budget = 2000000;
    mc.seed = 7;
    QuadResult m = quad_selberg(2, z, mc);
    CHECK(std::fabs(m.value - closed) <= m.error);
    CHECK(m.error <= 0.05 * closed);
}

TEST_CASE("selberg guards") {
    CHECK_THROWS_WITH_AS(quad_selberg(3, 5.0, adaptive()),
                         "quad_selberg: n must be 1 or 2", gsp_error);
    CHECK_THROWS_WITH_AS(quad_selberg(1, 1.0, adaptive()),
                         "quad_selberg: divergent parameter, need z > n",
                         gsp_error);
    CHECK_THROWS_WITH_AS(quad_selberg(2, 2.0, adaptive()),
                         "quad_selberg: divergent parameter, need z > n",
                         gsp_error);
}

TEST_CASE("truncated selberg increases to the substituted value") {
    const double z = 3.0;
    double prev = 0.0;
    for (double R : {2.0, 4.0, 16.0, 256.0}) {
        double v = quad_selberg_truncated_n1(z, R);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK_THROWS_AS(quad_selberg_truncated_n1(3.0, 1.0), gsp_error);
}

TEST_CASE("beta quadrature matches lgamma") {
    QuadResult r = quad_beta(2.5, 3.5, adaptive());
    CHECK(r.value == doctest::Approx(lgamma_beta(2.5, 3.5)).epsilon(1e-9));
    CHECK_THROWS_WITH_AS(quad_beta(0.0, 1.0, adaptive()),
                         "quad_beta: nonpositive arguments", gsp_error);
}

TEST_CASE("kak zeta integral matches the scalar closed form") {
    // |b_lambda> for n=1 carries i^k; the integral computes its magnitude
    QuadResult r = kak_zeta_n1(6, 0.5, adaptive());
    double closed = b_lambda_scalar(1, 6, Rational(1, 2)).abs_double();
    CHECK(r.value == doctest::Approx(closed).epsilon(1e-8));
    QuadResult r2 = kak_zeta_n1(4, 1.5, adaptive());
    double closed2 = b_lambda_scalar(1, 4, Rational(3, 2)).abs_double();
    CHECK(r2.value == doctest::Approx(closed2).epsilon(1e-8));
    CHECK_THROWS_WITH_AS(kak_zeta_n1(1, 0.5, adaptive()),
                         "kak_zeta_n1: k >= 2 required", gsp_error);
    CHECK_THROWS_WITH_AS(kak_zeta_n1(2, -0.5, adaptive()),
                         "kak_zeta_n1: divergent, need 3s - 1/2 + k > 2",
                         gsp_error);
}

TEST_CASE("truncated kak integral increases to the full value") {
    double full = kak_zeta_n1(4, 0.5, adaptive()).value;
    double prev = 0.0;
    for (double R : {2.0, 8.0, 64.0, 4096.0}) {
        double v = kak_zeta_truncated_n1(4, 0.5, R);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev == doctest::Approx(full).epsilon(1e-5));
}

TEST_CASE("three measure routes give 8 pi / (2k - 2)") {
    const double pi = 3.14159265358979323846;
    MeasureRoutes mr = measure_consistency_n1(2, adaptive());
    const double expect = 8.0 * pi / 2.0;
    CHECK(mr.classical == doctest::Approx(expect).epsilon(1e-6));
    CHECK(mr.kak == doctest::Approx(expect).epsilon(1e-9));
    CHECK(mr.iwasawa == doctest::Approx(expect).epsilon(1e-6));
    CHECK_THROWS_AS(measure_consistency_n1(1, adaptive()), gsp_error);
}

TEST_CASE("neretin integral against its closed form") {
    QuadResult r = neretin_n1(3.0, 3.0, 3.0, adaptive());
    CHECK(r.value == doctest::Approx(neretin_closed_n1(3.0, 3.0, 3.0)).epsilon(1e-6));
    // sigma != tau exercises the oscillatory factor
    QuadResult s = neretin_n1(2.5, 4.0, 2.0, adaptive());
    CHECK(s.value == doctest::Approx(neretin_closed_n1(2.5, 4.0, 2.0)).epsilon(1e-6));
    // closed form at lambda = sigma = tau = 2: 2^{-2} pi Gamma(1)Gamma(2)/Gamma(2)^2 = pi/4
    const double pi = 3.14159265358979323846;
    CHECK(neretin_closed_n1(2.0, 2.0, 2.0) == doctest::Approx(pi / 4.0).epsilon(1e-14));
    CHECK_THROWS_WITH_AS(neretin_n1(1.0, 3.0, 3.0, adaptive()),
                         "neretin_n1: divergent, need lambda > 1", gsp_error);
    CHECK_THROWS_WITH_AS(neretin_n1(3.0, 1.5, 1.5, adaptive()),
                         "neretin_n1: divergent, need sigma + tau > lambda",
                         gsp_error);
}
