#include "gsp/arch.hpp"

#include <cmath>

#include "gsp/lfactors.hpp"

namespace gsp {

namespace {

Rational factorial_product(int n) {
    Integer p(1);
    for (int m = 1; m <= n; ++m) p *= factorial(static_cast<unsigned>(m - 1));
    return Rational(p);
}

RationalFunction1 linear_rf(const Rational& a, const Rational& b) {
    return RationalFunction1::from_poly(Polynomial1::linear(a, b));
}

}  // namespace

ArchContext::ArchContext(std::vector<long> kvec)
    : n(static_cast<int>(kvec.size())), k(KTypeVector(kvec)),
      lambda(minimal_ktype_to_hc(KTypeVector(kvec))) {
    if (n < 1) throw gsp_error("ArchContext: empty weight vector");
    if (kvec.back() <= n) throw gsp_error("ArchContext: k_n > n required");
    if (!parity_condition(lambda))
        throw gsp_error("ArchContext: weights must share one parity");
}

double ExactConstant::abs_double() const {
    return std::fabs(value.to_double()) *
           std::pow(2.0, to_double(two_exponent));
}

std::string ExactConstant::to_string() const {
    return "i^" + std::to_string(i_phase) + " * " + value.to_string() +
           " * 2^(" + rat_to_string(two_exponent) + ")";
}

RationalFunction1 gamma_n(int n) {
    if (n < 1) throw gsp_error("gamma_n: n >= 1 required");
    Polynomial1 den = Polynomial1::constant(Rational(1));
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= m; ++j)
            den = den * Polynomial1::linear(Rational(1), Rational(-m - 1 + 2 * j));
    Polynomial1 num = Polynomial1::constant(factorial_product(n));
    return RationalFunction1(num, den);
}

RationalFunction1 beta_ratio(long ell_j, long k, int j) {
    long diff = k - ell_j - j;
    if (diff < 0) throw gsp_error("beta_ratio: k_j exceeds k");
    if (diff % 2 != 0) throw gsp_error("beta_ratio: parity violation, k - k_j odd");
    long m = diff / 2;
    RationalFunction1 out = RationalFunction1::one();
    for (long i = 0; i < m; ++i) {
        // (t - ell_j/2 - m + i) / (t + ell_j/2 + m - 1 - i)
        out = out * RationalFunction1(
                        Polynomial1::linear(Rational(1), Rational(-ell_j, 2) +
                                                             Rational(-m + i)),
                        Polynomial1::linear(Rational(1), Rational(ell_j, 2) +
                                                             Rational(m - 1 - i)));
    }
    return out;
}

AkFunction a_k(const ArchContext& ctx) {
    const long k = ctx.scalar_weight();
    RationalFunction1 rat = RationalFunction1::one();
    for (int j = 1; j <= ctx.n; ++j) {
        for (int i = 1; i <= j; ++i)
            rat = rat / linear_rf(Rational(1), Rational(k - 1 - j + 2 * i));
        const long mj = (k - ctx.k.k[static_cast<std::size_t>(j - 1)]) / 2;
        for (long i = 0; i < mj; ++i) {
            const Rational c(k - 1 - j - 2 * i);
            rat = rat * RationalFunction1(Polynomial1::linear(Rational(1), -c),
                                          Polynomial1::linear(Rational(1), c));
        }
    }
    return {rat, -static_cast<long>(ctx.n), static_cast<long>(ctx.n)};
}

Rational AkFunction::eval_exact(long z) const {
    return rational.eval(Rational(z)) * rat_pow(Rational(2), two_a * z + two_b);
}

CkFunction c_k_function(int n, long k) {
    if (k <= n) throw gsp_error("c_k_function: k > n required");
    PiPower coeff = pi_pow(static_cast<long>(n) * (n + 1) / 2) *
                    (Rational(1) / factorial_product(n));
    RationalFunction1 gamma_part =
        gamma_n(n).compose_affine(Rational(1), Rational(k));
    return {n, k, coeff, gamma_part, -static_cast<long>(n), static_cast<long>(n)};
}

ExactConstant b_lambda_scalar(int n, long k, const Rational& s) {
    if (k <= n) throw gsp_error("b_lambda_scalar: k > n required");
    const Rational z = Rational(2 * n + 1) * s - Rational(1, 2);
    const Rational gval = ratfun_eval(gamma_n(n), z + k);
    ExactConstant out;
    out.i_phase = static_cast<int>((static_cast<long>(n) * k) % 4);
    out.value = pi_pow(static_cast<long>(n) * (n + 1) / 2) *
                (gval / factorial_product(n));
    out.two_exponent = Rational(-n) * Rational(2 * n + 1) * s + Rational(3 * n, 2);
    return out;
}

ArchExpression b_lambda_route_a(const ArchContext& ctx) {
    AkFunction ak = a_k(ctx);
    return {static_cast<int>((static_cast<long>(ctx.n) * ctx.scalar_weight()) % 4),
            pi_pow(static_cast<long>(ctx.n) * (ctx.n + 1) / 2), ak.two_a,
            ak.two_b, ak.rational};
}

ArchExpression b_lambda_general(const ArchContext& ctx) {
    const long k = ctx.scalar_weight();
    CkFunction ck = c_k_function(ctx.n, k);
    // The reference denominator prod_j beta(k-j, s) of C_k cancels against
    // the numerators of the ratios, leaving rational-function arithmetic.
    RationalFunction1 ratios = RationalFunction1::one();
    for (int j = 1; j <= ctx.n; ++j) {
        RationalFunction1 r =
            beta_ratio(ctx.lambda.ell[static_cast<std::size_t>(j - 1)], k, j);
        ratios = ratios * r.compose_affine(Rational(1, 2), Rational(1, 2));
    }
    RationalFunction1 rat =
        ck.gamma_part * ratios *
        RationalFunction1::from_poly(
            Polynomial1::constant(Rational(1) / factorial_product(ctx.n)));
    return {static_cast<int>((static_cast<long>(ctx.n) * k) % 4),
            pi_pow(static_cast<long>(ctx.n) * (ctx.n + 1) / 2), ck.two_a,
            ck.two_b, rat};
}

PiPower alpha_n(int n) {
    if (n < 1) throw gsp_error("alpha_n: n >= 1 required");
    const long e = static_cast<long>(n) * (n + 1) / 2;
    Rational c = Rational(int_pow(Integer(4), static_cast<unsigned long>(e))) /
                 factorial_product(n);
    return PiPower(c, e);
}

PiPower siegel_volume(int n) {
    if (n < 1) throw gsp_error("siegel_volume: n >= 1 required");
    PiPower acc(Rational(2), 0);
    for (int j = 1; j <= n; ++j) {
        // zeta(2j) = (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!)
        Rational zr = bernoulli(2 * static_cast<unsigned>(j)) *
                      rat_pow(Rational(2), 2 * j) /
                      Rational(2 * factorial(2 * static_cast<unsigned>(j)));
        if (j % 2 == 0) zr = -zr;
        acc = acc * PiPower(zr, 2 * j) * pi_pow(-j) *
              Rational(factorial(static_cast<unsigned>(j - 1)));
    }
    return acc;
}

Rational c_krnN(const ArchContext& ctx, long r,
                const std::vector<std::pair<long, int>>& n_factorization,
                const std::optional<PiPower>& siegel_override) {
    const long kn = ctx.k.k[static_cast<std::size_t>(ctx.n - 1)];
    const long bound = kn - ctx.n;
    if (r < 1 || r > bound)
        throw gsp_error("c_krnN: r outside critical range [1, k_n - n]");
    if (((r - bound) % 2 + 2) % 2 != 0)
        throw gsp_error("c_krnN: r must have the parity of k_n - n");
    Rational vol(1);
    for (auto [p, m] : n_factorization)
        vol *= principal_congruence_volume(ctx.n, p, m);
    const PiPower siegel = siegel_override ? *siegel_override
                                           : siegel_volume(ctx.n);
    PiPower ratio = pi_pow(static_cast<long>(ctx.n) * (ctx.n + 1) / 2) / siegel;
    if (ratio.pi_exp != 0)
        throw gsp_error("c_krnN: pi powers failed to cancel");
    Rational c = vol * ratio.coeff * a_k(ctx).eval_exact(r - 1);
    if (c == 0) throw gsp_error("c_krnN: constant vanished");
    return c;
}

}  // namespace gsp
