#include "gsp/assembly.hpp"

#include <cmath>

namespace gsp {

namespace {

// Local factor of the degree-5 standard L at p, inverted:
//   [(1 - c p^{-r}) prod_i (1 - c a_i p^{-r})(1 - c a_i^{-1} p^{-r})]^{-1}.
std::complex<double> standard_local_inverse(const SatakeData& sd,
                                            std::complex<double> c, long r) {
    const double t = std::pow(static_cast<double>(sd.q),
                              -static_cast<double>(r));
    std::complex<double> den = 1.0 - c * t;
    for (const auto& a : sd.alpha) {
        const double av = to_double(a);
        den *= 1.0 - c * (av * t);
        den *= 1.0 - c * (t / av);
    }
    if (den == std::complex<double>(0.0, 0.0))
        throw gsp_error("pole of standard L-factor in assembly");
    return 1.0 / den;
}

}  // namespace

CnAssembly c_n_assembly(const ArchContext& ctx, long r,
                        const std::map<long, SatakeData>& satake_table,
                        const DirichletCharacter& chi,
                        const std::vector<std::pair<long, int>>& n_factorization,
                        long P) {
    if (ctx.n != 2) throw gsp_error("c_n_assembly: n = 2 only");
    if (r <= 2)
        throw gsp_error("c_n_assembly: r <= 2 is outside the absolutely "
                        "convergent range");
    long n_check = 1;
    std::vector<long> bad_primes;
    for (auto [p, m] : n_factorization) {
        bad_primes.push_back(p);
        for (int i = 0; i < m; ++i) n_check *= p;
    }
    if (n_check != chi.modulus())
        throw gsp_error("c_n_assembly: N factorization does not match the "
                        "character modulus");

    const long k = ctx.scalar_weight();
    Rational c_const = c_krnN(ctx, r, n_factorization);
    if (k % 2 != 0) c_const = -c_const;
    PiPower prefactor(c_const, 2 * r + 4 - 2 * k);

    // Numerator: truncated Euler product of the twisted degree-5 factors.
    std::complex<double> num(1.0, 0.0);
    for (long p : primes_up_to(P)) {
        if (chi.modulus() % p == 0) continue;
        auto it = satake_table.find(p);
        if (it == satake_table.end())
            throw gsp_error("c_n_assembly: missing Satake data for prime " +
                            std::to_string(p));
        num *= standard_local_inverse(it->second, chi.value(p), r);
    }
    // Omitted p > P: five roots of modulus <= p^{1/2} each, so the log of
    // the missing product is below 5/(1-2^{1/2-r}) * P^{3/2-r}/(r-3/2).
    const double rr = static_cast<double>(r);
    const double delta = 5.0 / (1.0 - std::pow(2.0, 0.5 - rr)) *
                         std::pow(static_cast<double>(P), 1.5 - rr) /
                         (rr - 1.5);
    const double num_rel = std::expm1(delta);

    LValue d1 = partial_l_omit(chi, rr + 2.0, bad_primes, P);
    DirichletCharacter chi2 = chi.power(2);
    LValue d2 = partial_l_omit(chi2, 2.0 * rr, bad_primes, P);
    LValue d3 = partial_l_omit(chi2, 2.0 * rr + 2.0, bad_primes, P);

    std::complex<double> lratio = num / (d1.value * d2.value * d3.value);
    double rel = (1.0 + num_rel);
    for (const LValue& d : {d1, d2, d3}) {
        const double dr = d.error_bound / std::abs(d.value);
        if (dr >= 1.0)
            throw gsp_error("c_n_assembly: denominator bound too weak at this P");
        rel /= 1.0 - dr;
    }
    rel -= 1.0;

    CnAssembly out;
    out.prefactor = prefactor;
    out.lratio = lratio;
    out.error_bound = std::abs(lratio) * rel;
    out.value = lratio * prefactor.to_double();
    return out;
}

}  // namespace gsp
