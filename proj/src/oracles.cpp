#include "gsp/oracles.hpp"

#include <cmath>

namespace gsp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

}  // namespace

QuadResult quad_selberg(int n, double z, const QuadratureConfig& cfg) {
    validate(cfg);
    if (n != 1 && n != 2) throw gsp_error("quad_selberg: n must be 1 or 2");
    if (z <= n) throw gsp_error("quad_selberg: divergent parameter, need z > n");
    if (n == 1) {
        // t = 1/u turns int_1^inf t^{-z-1} dt into int_0^1 u^{z-1} du
        return integrate_unit(
            [z](double u, double) { return std::pow(u, z - 1.0); },
            cfg.tolerance);
    }
    // In u_i = 1/t_i the region is 0 < u_1 < u_2 < 1 and the integrand
    // becomes (u_2^2 - u_1^2) (u_1 u_2)^{z-2}.
    if (cfg.method == QuadratureConfig::Method::monte_carlo) {
        auto folded = [z](double a, double b) {
            const double lo = std::min(a, b);
            const double hi = std::max(a, b);
            return 0.5 * (hi * hi - lo * lo) * std::pow(lo * hi, z - 2.0);
        };
        return mc_stratified_square(folded, cfg);
    }
    // u_1 = w u_2 separates the region into the unit square.
    return integrate_unit2(
        [z](double u2, double, double w, double) {
            return std::pow(u2, 2.0 * z - 1.0) * (1.0 - w * w) *
                   std::pow(w, z - 2.0);
        },
        cfg.tolerance);
}

double quad_selberg_truncated_n1(double z, double R) {
    if (z <= 1.0) throw gsp_error("quad_selberg: divergent parameter, need z > n");
    if (R <= 1.0) throw gsp_error("cutoff R must exceed 1");
    // t = 1 + (R-1) u on [1, R]
    return integrate_unit(
               [z, R](double u, double) {
                   const double t = 1.0 + (R - 1.0) * u;
                   return std::pow(t, -z - 1.0);
               },
               1e-12)
               .value *
           (R - 1.0);
}

QuadResult quad_beta(double x, double y, const QuadratureConfig& cfg) {
    validate(cfg);
    if (x <= 0.0 || y <= 0.0) throw gsp_error("quad_beta: nonpositive arguments");
    return integrate_unit(
        [x, y](double u, double um1) {
            return std::pow(u, x - 1.0) * std::pow(um1, y - 1.0);
        },
        cfg.tolerance);
}

double lgamma_beta(double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

namespace {

// sinh(2a) (2 cosh a)^{-w} da under u = e^{-a}:
//   (u^{-2} - u^2)/2 * (u + 1/u)^{-w} * du/u
//   = (1 - u^4)/2 * u^{w-3} (1 + u^2)^{-w} du on (0, 1].
double kak_core(double u, double w) {
    return 0.5 * (1.0 - std::pow(u, 4.0)) * std::pow(u, w - 3.0) *
           std::pow(1.0 + u * u, -w);
}

}  // namespace

QuadResult kak_zeta_n1(long k, double s, const QuadratureConfig& cfg) {
    validate(cfg);
    if (k < 2) throw gsp_error("kak_zeta_n1: k >= 2 required");
    const double w = 3.0 * (s + 0.5) + static_cast<double>(k);
    if (w <= 2.0) throw gsp_error("kak_zeta_n1: divergent, need 3s - 1/2 + k > 2");
    const double scale = 4.0 * kPi * std::pow(2.0, static_cast<double>(k));
    QuadResult r = integrate_unit(
        [w](double u, double) { return kak_core(u, w); }, cfg.tolerance);
    return {scale * r.value, scale * r.error};
}

double kak_zeta_truncated_n1(long k, double s, double R) {
    if (k < 2) throw gsp_error("kak_zeta_n1: k >= 2 required");
    const double w = 3.0 * (s + 0.5) + static_cast<double>(k);
    if (w <= 2.0) throw gsp_error("kak_zeta_n1: divergent, need 3s - 1/2 + k > 2");
    if (R <= 1.0) throw gsp_error("cutoff R must exceed 1");
    // a in [0, log R] is u = e^{-a} in [1/R, 1]
    const double u0 = 1.0 / R;
    const double scale = 4.0 * kPi * std::pow(2.0, static_cast<double>(k));
    return scale * (1.0 - u0) *
           integrate_unit(
               [w, u0](double x, double) {
                   return kak_core(u0 + (1.0 - u0) * x, w);
               },
               1e-12)
               .value;
}

MeasureRoutes measure_consistency_n1(long k, const QuadratureConfig& cfg) {
    validate(cfg);
    if (k < 2) throw gsp_error("measure_consistency_n1: k >= 2 required");
    const double kk = static_cast<double>(k);
    const double f22k = std::pow(2.0, 2.0 * kk);

    // x = v/(1-v), y = u/(1-u); the x-integral is symmetric, folded to x > 0.
    // With 1 + y = 1/um1 everything is a product of powers of positive
    // quantities; evaluated in logs (hypot never under- or overflows) the
    // square's corners underflow to 0 instead of hitting inf * 0.
    QuadResult classical = integrate_unit2(
        [kk, f22k](double u, double um1, double v, double vm1) {
            const double logd = 2.0 * std::log(std::hypot(vm1, v * um1));
            return 2.0 * f22k *
                   std::exp((kk - 2.0) * std::log(u) + kk * std::log(um1) +
                            (2.0 * kk - 2.0) * std::log(vm1) - kk * logd);
        },
        cfg.tolerance);

    // alpha_1 * int_0^inf sinh(2a) 2^{2k} (2 cosh a)^{-2k} da, u = e^{-a}.
    QuadResult kak = integrate_unit(
        [kk, f22k](double u, double) { return f22k * kak_core(u, 2.0 * kk); },
        cfg.tolerance);

    // 2 int_0^inf int_R 2^{2k} ((t + 1/t)^2 + t^2 x^2)^{-k} dx dt/t,
    // t = u/(1-u), x folded to x > 0.  Clearing denominators:
    //   base = [(u^2 + um1^2)^2 vm1^2 + u^4 v^2] / (u um1 vm1)^2.
    QuadResult iwasawa = integrate_unit2(
        [kk, f22k](double u, double um1, double v, double vm1) {
            const double c = u * u + um1 * um1;
            const double logd = 2.0 * std::log(std::hypot(c * vm1, u * u * v));
            return 4.0 * f22k *
                   std::exp((2.0 * kk - 1.0) * std::log(u * um1) +
                            (2.0 * kk - 2.0) * std::log(vm1) - kk * logd);
        },
        cfg.tolerance);

    return {classical.value, 4.0 * kPi * kak.value, iwasawa.value};
}

QuadResult neretin_n1(double lambda, double sigma, double tau,
                      const QuadratureConfig& cfg) {
    validate(cfg);
    if (lambda <= 1.0) throw gsp_error("neretin_n1: divergent, need lambda > 1");
    if (sigma + tau - lambda <= 0.0)
        throw gsp_error("neretin_n1: divergent, need sigma + tau > lambda");
    const double st = sigma + tau;
    const double dt = sigma - tau;
    // y = u/(1-u), x = v/(1-v); cos((sigma-tau) theta) is even in x.  With
    // 1 + y = 1/um1, rho^2 = (vm1^2 + v^2 um1^2)/(um1 vm1)^2 and
    // theta = atan2(x, 1+y) = atan2(v um1, vm1), everything stays finite.
    return integrate_unit2(
        [lambda, st, dt](double u, double um1, double v, double vm1) {
            const double logr = std::log(std::hypot(vm1, v * um1));
            const double theta = std::atan2(v * um1, vm1);
            return 2.0 *
                   std::exp((lambda - 2.0) * std::log(u) +
                            (st - lambda) * std::log(um1) +
                            (st - 2.0) * std::log(vm1) - st * logr) *
                   std::cos(dt * theta);
        },
        cfg.tolerance);
}

double neretin_closed_n1(double lambda, double sigma, double tau) {
    return std::pow(2.0, -(sigma + tau) + 2.0) * kPi *
           std::exp(std::lgamma(lambda - 1.0) + std::lgamma(sigma + tau - lambda) -
                    std::lgamma(sigma) - std::lgamma(tau));
}

}  // namespace gsp
