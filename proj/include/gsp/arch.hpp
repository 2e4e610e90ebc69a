#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsp/ktype.hpp"
#include "gsp/pi_power.hpp"
#include "gsp/polynomial.hpp"

namespace gsp {

// Weight data for the archimedean factors: k_1 >= ... >= k_n > n with one
// common parity, and the Harish-Chandra parameter ell_j = k_j - j recovered
// through the dictionary.
struct ArchContext {
    int n;
    KTypeVector k;
    HCParameter lambda;

    explicit ArchContext(std::vector<long> kvec);
    long scalar_weight() const { return k.k[0]; }
};

// i^{i_phase} * value * 2^{two_exponent}. The 2-power exponent stays exact:
// it is rational, not integral, for general rational s.
struct ExactConstant {
    int i_phase = 0;  // mod 4
    PiPower value;
    Rational two_exponent{0};

    double abs_double() const;
    std::string to_string() const;
};

// gamma_n(z) = prod_{m=1}^n (m-1)! prod_{j=1}^m 1/(z - m - 1 + 2j);
// poles exactly at z = m + 1 - 2j.
RationalFunction1 gamma_n(int n);

// beta(ell_j, s)/beta(k - j, s) as a rational function of t = (n+1/2)s + 1/4:
//   prod_{i=0}^{m-1} (t - ell_j/2 - m + i)/(t + ell_j/2 + m - 1 - i)
// with m = (k - ell_j - j)/2. Throws when k - k_j is odd or negative.
RationalFunction1 beta_ratio(long ell_j, long k, int j);

// A_k(z) split into the exact tag 2^{two_a z + two_b} and the rational part.
struct AkFunction {
    RationalFunction1 rational;  // in z
    long two_a;
    long two_b;

    Rational eval_exact(long z) const;
};
AkFunction a_k(const ArchContext& ctx);

// i^{i_phase} * coeff * 2^{two_a z + two_b} * rat(z) with z = (2n+1)s - 1/2.
struct ArchExpression {
    int i_phase;
    PiPower coeff;
    long two_a;
    long two_b;
    RationalFunction1 rat;

    bool operator==(const ArchExpression& o) const {
        return i_phase == o.i_phase && coeff == o.coeff && two_a == o.two_a &&
               two_b == o.two_b && rat == o.rat;
    }
};

// Gamma-free content of C_k(s) relative to the reference denominator
// prod_j beta(k-j, s), which cancels against the beta ratios in every use.
struct CkFunction {
    int n;
    long k;
    PiPower coeff;                 // pi^{n(n+1)/2} / prod (m-1)!
    RationalFunction1 gamma_part;  // gamma_n(z + k) as a function of z
    long two_a;
    long two_b;
};
CkFunction c_k_function(int n, long k);

// Scalar-type value at a rational s: i^{nk} pi^{n(n+1)/2}/prod(m-1)!
// times 2^{-n(2n+1)s + 3n/2} gamma_n((2n+1)s - 1/2 + k). Throws at poles.
ExactConstant b_lambda_scalar(int n, long k, const Rational& s);

// The composed route: beta ratios times C_k, assembled in z.
ArchExpression b_lambda_general(const ArchContext& ctx);
// The direct route through A_k.
ArchExpression b_lambda_route_a(const ArchContext& ctx);

// (4 pi)^{n(n+1)/2} / prod_{m=1}^n (m-1)!.
PiPower alpha_n(int n);

// 2 prod_{k=1}^n pi^{-k} (k-1)! zeta(2k), with zeta(2k) expanded through
// Bernoulli numbers; carries pi-exponent n(n+1)/2.
PiPower siegel_volume(int n);

// prod_{p^m || N} vol(Gamma(p^m)) * pi^{n(n+1)/2}/vol(Sp_{2n}(Z)\Sp_{2n}(R))
// * A_k(r-1). The pi-powers must cancel exactly. Requires r in the critical
// range 1 <= r <= k_n - n with r = k_n - n mod 2.
Rational c_krnN(const ArchContext& ctx, long r,
                const std::vector<std::pair<long, int>>& n_factorization,
                const std::optional<PiPower>& siegel_override = std::nullopt);

}  // namespace gsp
