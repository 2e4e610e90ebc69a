#include "gsp/verify.hpp"

#include <cmath>

#include "gsp/arch.hpp"
#include "gsp/ktype.hpp"
#include "gsp/lfactors.hpp"
#include "gsp/oracles.hpp"
#include "gsp/satake.hpp"

namespace gsp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

struct Collector {
    VerifyReport& report;
    double scale;

    void close(const std::string& name, double got, double want, double tol) {
        report.checks.push_back(
            {name, std::fabs(got - want) <= tol * scale, got, want,
             tol * scale});
    }
    void relative(const std::string& name, double got, double want,
                  double rel) {
        close(name, got, want, rel * std::fabs(want));
    }
    void exact(const std::string& name, bool equal) {
        report.checks.push_back({name, equal, equal ? 0.0 : 1.0, 0.0, 0.0});
    }
};

void suite_selberg(Collector& c, unsigned long long seed) {
    QuadratureConfig adaptive;
    adaptive.tolerance = 1e-10;
    c.relative("selberg.n1.adaptive", quad_selberg(1, 4.0, adaptive).value,
               0.25, 1e-6);
    c.relative("selberg.n2.tensor", quad_selberg(2, 5.0, adaptive).value,
               1.0 / 120.0, 1e-6);
    QuadratureConfig mc;
    mc.method = QuadratureConfig::Method::monte_carlo;
    mc.budget = 10000000;
    mc.seed = seed;
    c.relative("selberg.n2.montecarlo", quad_selberg(2, 5.0, mc).value,
               1.0 / 120.0, 1e-4);
    int violations = 0;
    double prev = 1e300;
    for (double r : {2.0, 5.0, 10.0, 20.0, 40.0}) {
        const double err = std::fabs(quad_selberg_truncated_n1(4.0, r) - 0.25);
        if (err > prev) ++violations;
        prev = err;
    }
    c.close("selberg.truncation.monotone", violations, 0.0, 0.5);
}

void suite_beta(Collector& c) {
    QuadratureConfig cfg;
    cfg.tolerance = 1e-10;
    c.relative("beta.1.1", quad_beta(1.0, 1.0, cfg).value, 1.0, 1e-6);
    c.relative("beta.2.3", quad_beta(2.0, 3.0, cfg).value, 1.0 / 12.0, 1e-6);
    c.relative("beta.half.half", quad_beta(0.5, 0.5, cfg).value, kPi, 1e-6);
    c.relative("beta.vs.lgamma", quad_beta(1.5, 2.75, cfg).value,
               lgamma_beta(1.5, 2.75), 1e-6);
}

void suite_kak(Collector& c) {
    QuadratureConfig cfg;
    cfg.tolerance = 1e-10;
    c.relative("kak.k4.shalf", kak_zeta_n1(4, 0.5, cfg).value,
               b_lambda_scalar(1, 4, Rational(1, 2)).abs_double(), 1e-6);
    c.relative("kak.k2.s3half", kak_zeta_n1(2, 1.5, cfg).value,
               b_lambda_scalar(1, 2, Rational(3, 2)).abs_double(), 1e-6);
}

void suite_measure(Collector& c) {
    QuadratureConfig cfg;
    cfg.tolerance = 1e-9;
    for (long k : {2L, 3L}) {
        const double want = 8.0 * kPi / (2.0 * static_cast<double>(k) - 2.0);
        MeasureRoutes routes = measure_consistency_n1(k, cfg);
        const std::string base = "measure.k" + std::to_string(k);
        c.relative(base + ".classical", routes.classical, want, 1e-4);
        c.relative(base + ".kak", routes.kak, want, 1e-4);
        c.relative(base + ".iwasawa", routes.iwasawa, want, 1e-4);
    }
}

void suite_neretin(Collector& c) {
    QuadratureConfig cfg;
    cfg.tolerance = 1e-9;
    c.relative("neretin.2.2.2", neretin_n1(2.0, 2.0, 2.0, cfg).value,
               kPi / 4.0, 1e-6);
    c.relative("neretin.closed.2.2.2", neretin_closed_n1(2.0, 2.0, 2.0),
               kPi / 4.0, 1e-12);
    // lambda = sigma = tau = k ties into the measure constant chain.
    const double k = 3.0;
    c.relative("neretin.measure.chain",
               std::pow(2.0, 2.0 * k) * neretin_n1(k, k, k, cfg).value,
               8.0 * kPi / (2.0 * k - 2.0), 1e-6);
}

void suite_exact(Collector& c) {
    c.exact("exact.gamma2.at5",
            ratfun_eval(gamma_n(2), Rational(5)) == Rational(1, 120));
    c.exact("exact.blattner.41.77",
            blattner_multiplicity(HCParameter({4, 1}), KTypeVector({7, 7})) ==
                Integer(1));
    c.exact("exact.sl2cell.q2e1",
            sl2_cell_count_bruteforce(2, 1) == Integer(6));
    c.exact("exact.sp.orders",
            sp_order_mod(1, 2, 1) == Integer(6) &&
                sp_order_mod(1, 3, 1) == Integer(24) &&
                sp_order_mod(2, 2, 1) == Integer(720) &&
                sp_order_mod(1, 2, 2) == Integer(48));
    c.exact("exact.siegel.volume",
            siegel_volume(1) == PiPower(Rational(1, 3), 1) &&
                siegel_volume(2) == PiPower(Rational(1, 270), 3));
    c.exact("exact.ckrn.example",
            c_krnN(ArchContext({10, 10}), 8, {}) ==
                Rational(270, 20054016));
    c.exact("exact.dualroute.53",
            b_lambda_general(ArchContext({5, 3})) ==
                b_lambda_route_a(ArchContext({5, 3})));
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& ch : checks)
        if (!ch.pass) return false;
    return true;
}

VerifyReport run_verify(const std::string& suite, unsigned long long seed,
                        double tol_scale) {
    VerifyReport report;
    Collector c{report, tol_scale};
    const bool all = suite == "all";
    if (all || suite == "selberg") suite_selberg(c, seed);
    if (all || suite == "beta") suite_beta(c);
    if (all || suite == "kak") suite_kak(c);
    if (all || suite == "measure") suite_measure(c);
    if (all || suite == "neretin") suite_neretin(c);
    if (all || suite == "exact") suite_exact(c);
    if (report.checks.empty())
        throw gsp_error("unknown verify suite: " + suite);
    return report;
}

}  // namespace gsp
