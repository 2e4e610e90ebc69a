#include "gsp/satake.hpp"

#include <cmath>

#include "gsp/lfactors.hpp"

namespace gsp {

SatakeData::SatakeData(int n_, long q_, std::vector<Rational> alpha_, Rational chi_)
    : n(n_), q(q_), alpha(std::move(alpha_)), chi(std::move(chi_)) {
    if (n < 1) throw gsp_error("SatakeData: n >= 1 required");
    if (q < 2) throw gsp_error("SatakeData: q >= 2 required");
    if (static_cast<int>(alpha.size()) != n)
        throw gsp_error("SatakeData: need n Satake parameters");
    for (const auto& a : alpha)
        if (a == 0) throw gsp_error("SatakeData: Satake parameters must be nonzero");
}

TruncatedSeries<LaurentPolynomial> rationality_series(int n, int D) {
    if (n < 1 || D < 0) throw gsp_error("rationality_series: bad arguments");
    const int nv = n + 1;  // variable 0 is q, variables 1..n are X_i
    auto mono = [&](int qexp, int xi, int xexp, long coeff) {
        LaurentPolynomial::Exponents e(nv, 0);
        e[0] = qexp;
        if (xi > 0) e[xi] = xexp;
        return LaurentPolynomial::monomial(nv, e, Rational(coeff));
    };
    const LaurentPolynomial one = mono(0, 0, 0, 1);
    std::vector<SeriesFactor<LaurentPolynomial>> factors;
    // (1 - Y) / (1 - q^n Y)
    factors.push_back({{one, mono(0, 0, 0, -1)}, {one, mono(n, 0, 0, -1)}});
    for (int i = 1; i <= n; ++i) {
        // (1 - q^{2i} Y^2) / (1 - X_i q^n Y)
        factors.push_back({{one, LaurentPolynomial(nv), mono(2 * i, 0, 0, -1)},
                           {one, mono(n, i, 1, -1)}});
        // 1 / (1 - X_i^{-1} q^n Y)
        factors.push_back({{one}, {one, mono(n, i, -1, -1)}});
    }
    return series_from_rational_factors(factors, D);
}

TruncatedSeries<Rational> rationality_series_numeric(int n, const Rational& q,
                                                     const std::vector<Rational>& x,
                                                     int D) {
    if (static_cast<int>(x.size()) != n)
        throw gsp_error("rationality_series_numeric: need n substitution values");
    const Rational qn = rat_pow(q, n);
    const Rational one(1);
    std::vector<SeriesFactor<Rational>> factors;
    factors.push_back({{one, Rational(-1)}, {one, -qn}});
    for (int i = 1; i <= n; ++i) {
        if (x[static_cast<std::size_t>(i - 1)] == 0)
            throw gsp_error("rationality_series_numeric: zero substitution value");
        factors.push_back({{one, Rational(0), -rat_pow(q, 2 * i)},
                           {one, -(x[static_cast<std::size_t>(i - 1)] * qn)}});
        factors.push_back({{one}, {one, -(qn / x[static_cast<std::size_t>(i - 1)])}});
    }
    return series_from_rational_factors(factors, D);
}

TruncatedSeries<Rational> cartan_volume_series(int n, long q, int D) {
    if (q < 2) throw gsp_error("cartan_volume_series: q >= 2 required");
    std::vector<Rational> x;
    for (int i = 1; i <= n; ++i) x.push_back(rat_pow(Rational(q), i));
    return rationality_series_numeric(n, Rational(q), x, D);
}

TruncatedSeries<Rational> telescoped_volume_series(int n, long q, int D) {
    const Rational one(1);
    std::vector<SeriesFactor<Rational>> factors;
    for (int i = 1; i <= n; ++i) {
        factors.push_back({{one, rat_pow(Rational(q), i)},
                           {one, -rat_pow(Rational(q), n + i)}});
    }
    return series_from_rational_factors(factors, D);
}

Integer sl2_cell_count_bruteforce(long q, int e) {
    if (q < 2 || e < 1) throw gsp_error("bad cell parameters");
    Integer det = int_pow(Integer(q), static_cast<unsigned long>(2 * e));
    Integer count(0);
    for (int j = 0; j <= 2 * e; ++j) {
        Integer a = int_pow(Integer(q), static_cast<unsigned long>(j));
        Integer d = det / a;
        for (Integer b(0); b < a; ++b) {
            Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), d);
            if (g == 1) ++count;
        }
    }
    return count;
}

namespace {

// Growth rates of the expansion coefficients: reciprocals of the pole radii
// q^n, q^n |alpha_i|, q^n / |alpha_i|.
std::vector<double> coefficient_growth_rates(const SatakeData& sd) {
    std::vector<double> rho;
    double qn = std::pow(static_cast<double>(sd.q), sd.n);
    rho.push_back(qn);
    for (const auto& a : sd.alpha) {
        double av = std::fabs(to_double(a));
        rho.push_back(qn * av);
        rho.push_back(qn / av);
    }
    return rho;
}

}  // namespace

ZetaValue unramified_zeta_series(const SatakeData& sd, const EvaluationPoint& s, int D) {
    if (D < 0) throw gsp_error("negative truncation degree");
    // c = chi(pi) q^{-(2n+1)(s+1/2)}
    const Rational e2 = Rational(2 * sd.n + 1) * (s.s + Rational(1, 2));
    const bool exact = den(e2) == 1;
    const double lnq = std::log(static_cast<double>(sd.q));
    const double abs_c = std::fabs(to_double(sd.chi)) * std::exp(-to_double(e2) * lnq);

    TruncatedSeries<Rational> coeffs =
        rationality_series_numeric(sd.n, Rational(sd.q), sd.alpha, D);

    // Tail: |S_d| <= B(r) r^{-d} for any r below every pole radius, with
    // B(r) = (1+r) prod(1+q^{2i} r^2) / prod_j (1 - rho_j r). Taking
    // r = sqrt(|c| / rho_max) gives sum_{d>D} |S_d| |c|^d
    //   <= B * x^{D+1} / (1-x) with x = sqrt(|c| rho_max).
    double tail = 0.0;
    if (abs_c > 0.0) {
        const auto rho = coefficient_growth_rates(sd);
        double rho_max = 0.0;
        for (double r : rho) rho_max = std::max(rho_max, r);
        const double x = std::sqrt(abs_c * rho_max);
        if (x >= 1.0)
            throw gsp_error("zeta series divergent: tail bound infinite at this s");
        const double r = std::sqrt(abs_c / rho_max);
        double b = 1.0 + r;
        for (int i = 1; i <= sd.n; ++i)
            b *= 1.0 + std::pow(static_cast<double>(sd.q), 2 * i) * r * r;
        for (double rj : rho) b /= 1.0 - rj * r;
        tail = b * std::pow(x, D + 1) / (1.0 - x);
    }

    ZetaValue out{exact, Rational(0), 0.0, tail};
    if (exact) {
        // exponent is integral, so c is an exact rational
        const long e2i = e2.convert_to<long>();
        const Rational c = sd.chi * rat_pow(Rational(sd.q), -e2i);
        Rational acc(0);
        for (int d = D; d >= 0; --d) acc = acc * c + coeffs.coeff(d);
        out.exact_value = acc;
        out.value = to_double(acc);
    } else {
        const double c = to_double(sd.chi) * std::exp(-to_double(e2) * lnq);
        double acc = 0.0;
        for (int d = D; d >= 0; --d) acc = acc * c + to_double(coeffs.coeff(d));
        out.value = acc;
    }
    return out;
}

ZetaValue unramified_zeta_closed(const SatakeData& sd, const EvaluationPoint& s) {
    const Rational e2 = Rational(2 * sd.n + 1) * (s.s + Rational(1, 2));
    const Rational e1 = e2 - sd.n;  // (2n+1)s + 1/2
    const bool exact = den(e2) == 1;

    LocalLFactor std_factor = standard_lfactor(sd);
    LocalLFactor chi_factor = abelian_lfactor(sd.chi, sd.q);
    LocalLFactor chi2_factor = abelian_lfactor(sd.chi * sd.chi, sd.q);

    ZetaValue out{exact, Rational(0), 0.0, 0.0};
    if (exact) {
        const long e2i = e2.convert_to<long>();
        const long e1i = e2i - sd.n;
        const Rational t1 = rat_pow(Rational(sd.q), -e1i);
        const Rational t2 = rat_pow(Rational(sd.q), -e2i);
        Rational acc(1);
        Rational d1 = std_factor.den.eval(t1);
        if (d1 == 0) throw gsp_error("pole of standard L-factor in closed form");
        Rational d2 = chi_factor.den.eval(t2);
        acc = d2 / d1;
        for (int i = 1; i <= sd.n; ++i) {
            // exponent (2n+1)(2s+1) - 2i = 2 e2 - 2i
            const Rational t3 = rat_pow(Rational(sd.q), -(2 * e2i - 2 * i));
            acc *= chi2_factor.den.eval(t3);
        }
        out.exact_value = acc;
        out.value = to_double(acc);
    } else {
        const double lnq = std::log(static_cast<double>(sd.q));
        const double t1 = std::exp(-to_double(e1) * lnq);
        const double t2 = std::exp(-to_double(e2) * lnq);
        double d1 = std_factor.den.eval_double(t1);
        if (d1 == 0.0) throw gsp_error("pole of standard L-factor in closed form");
        double acc = chi_factor.den.eval_double(t2) / d1;
        for (int i = 1; i <= sd.n; ++i) {
            const double t3 = std::exp(-(2.0 * to_double(e2) - 2 * i) * lnq);
            acc *= chi2_factor.den.eval_double(t3);
        }
        out.value = acc;
    }
    return out;
}

}  // namespace gsp
