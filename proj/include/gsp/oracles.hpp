#pragma once

#include "gsp/quadrature.hpp"

namespace gsp {

// Selberg-type integral over t_1 > ... > t_n > 1 of
// prod_{i<j}(t_i^2 - t_j^2) (prod t_j)^{-z-n}, mapped to the unit box by
// t = 1/u. Closed form gamma_n(z). n in {1, 2}; requires z > n.
QuadResult quad_selberg(int n, double z, const QuadratureConfig& cfg);

// n=1 integrand truncated to [1, R] instead of substituted; used to check
// that the truncation error shrinks as R grows.
double quad_selberg_truncated_n1(double z, double R);

// B(x, y) = int_0^inf a^{x-1} (1+a)^{-x-y} da via a = u/(1-u).
QuadResult quad_beta(double x, double y, const QuadratureConfig& cfg);

// Gamma(x) Gamma(y) / Gamma(x+y) through lgamma; reference for quad_beta.
double lgamma_beta(double x, double y);

// alpha_1 int_0^inf sinh(2a) (2 cosh a)^{-3(s+1/2)} (2/(2 cosh a))^k da,
// the n=1 archimedean zeta integral in KAK coordinates. Requires k >= 2
// and 3s - 1/2 + k > 2.
QuadResult kak_zeta_n1(long k, double s, const QuadratureConfig& cfg);

// Same integrand truncated to a in [0, log R]; monotonicity probe.
double kak_zeta_truncated_n1(long k, double s, double R);

struct MeasureRoutes {
    double classical;
    double kak;
    double iwasawa;
};

// The integral of F(g) = 2^{2k} |det(A + D + i(C - B))|^{-2k} over
// Sp(2, R)/{1,-1} in three coordinate systems; all equal 8 pi / (2k - 2).
MeasureRoutes measure_consistency_n1(long k, const QuadratureConfig& cfg);

// int_{y>0} int_x y^{lambda-2} rho^{-(sigma+tau)} cos((sigma-tau) theta),
// rho e^{i theta} = (1+y) + ix. Requires lambda > 1, sigma+tau-lambda > 0.
QuadResult neretin_n1(double lambda, double sigma, double tau,
                      const QuadratureConfig& cfg);

// 2^{-(sigma+tau)+2} pi Gamma(lambda-1) Gamma(sigma+tau-lambda)
//   / (Gamma(sigma) Gamma(tau)).
double neretin_closed_n1(double lambda, double sigma, double tau);

}  // namespace gsp
