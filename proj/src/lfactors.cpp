#include "gsp/lfactors.hpp"

#include <cmath>

namespace gsp {

Rational LocalLFactor::eval_at_t(const Rational& t) const {
    Rational d = den.eval(t);
    if (d == 0) throw gsp_error("evaluation at pole of local L-factor");
    return Rational(1) / d;
}

double LocalLFactor::eval_at_t(double t) const {
    return 1.0 / den.eval_double(t);
}

RationalFunction1 LocalLFactor::as_ratfun() const {
    return RationalFunction1(Polynomial1::constant(Rational(1)), den);
}

LocalLFactor standard_lfactor(const SatakeData& sd) {
    auto lin = [](const Rational& c) {
        // 1 - c T
        return Polynomial1(std::vector<Rational>{Rational(1), -c});
    };
    Polynomial1 den = lin(sd.chi);
    for (const auto& a : sd.alpha) {
        den = den * lin(sd.chi * a);
        den = den * lin(sd.chi / a);
    }
    return LocalLFactor{std::move(den), sd.q};
}

LocalLFactor abelian_lfactor(const Rational& chi_value, long q) {
    return LocalLFactor{
        Polynomial1(std::vector<Rational>{Rational(1), -chi_value}), q};
}

Integer sp_order_mod(int n, long p, int m) {
    if (n < 1 || p < 2 || m < 1) throw gsp_error("sp_order_mod: bad arguments");
    Integer order = int_pow(Integer(p),
                            static_cast<unsigned long>(m - 1) *
                                static_cast<unsigned long>(n) *
                                static_cast<unsigned long>(2 * n + 1));
    order *= int_pow(Integer(p), static_cast<unsigned long>(n) *
                                     static_cast<unsigned long>(n));
    for (int i = 1; i <= n; ++i)
        order *= int_pow(Integer(p), static_cast<unsigned long>(2 * i)) - 1;
    return order;
}

Rational principal_congruence_volume(int n, long p, int m) {
    return Rational(1) / Rational(sp_order_mod(n, p, m));
}

long sp_count_bruteforce(int n, int p) {
    const int size = 2 * n;
    const int cells = size * size;
    double work = std::pow(static_cast<double>(p), cells);
    if (work > 2e7) throw gsp_error("brute-force count too large");
    std::vector<int> g(cells, 0);
    auto at = [&](int i, int j) { return g[i * size + j]; };
    // J has +1 at (i, n+i) and -1 at (n+i, i)
    long count = 0;
    const long total = static_cast<long>(work);
    for (long it = 0; it < total; ++it) {
        long rem = it;
        for (int c = 0; c < cells; ++c) {
            g[c] = static_cast<int>(rem % p);
            rem /= p;
        }
        bool ok = true;
        // (tg J g)_{ab} = sum_i g_{ia} g_{n+i,b} - g_{n+i,a} g_{ib}
        for (int a = 0; a < size && ok; ++a)
            for (int b = a + 1; b < size && ok; ++b) {
                int want = (b == a + n) ? 1 : 0;
                long s = 0;
                for (int i = 0; i < n; ++i)
                    s += at(i, a) * at(n + i, b) - at(n + i, a) * at(i, b);
                if (((s - want) % p + p) % p != 0) ok = false;
            }
        if (ok) ++count;
    }
    return count;
}

}  // namespace gsp
