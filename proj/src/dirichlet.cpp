#include "gsp/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gsp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<unsigned long long>(a) * b) % m);
}

long pow_mod(long a, long e, long m) {
    long r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

long multiplicative_order(long a, long m) {
    long t = a % m;
    long ord = 1;
    while (t != 1) {
        t = mul_mod(t, a, m);
        ++ord;
        if (ord > m) throw gsp_error("order search ran past the group size");
    }
    return ord;
}

std::vector<std::pair<long, int>> factorize(long N) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= N; ++p) {
        if (N % p) continue;
        int e = 0;
        while (N % p == 0) {
            N /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (N > 1) out.push_back({N, 1});
    return out;
}

long euler_phi_prime_power(long p, int e) {
    long q = 1;
    for (int i = 1; i < e; ++i) q *= p;
    return q * (p - 1);
}

// Fractional part in [0, 1).
Rational frac_mod1(const Rational& t) {
    Integer fl = num(t) / den(t);
    if (t < 0 && fl * den(t) != num(t)) fl -= 1;
    Rational r = t - Rational(fl);
    return r;
}

}  // namespace

std::vector<CyclicFactor> cyclic_factors(long N) {
    if (N < 1) throw gsp_error("modulus must be positive");
    std::vector<CyclicFactor> out;
    for (auto [p, e] : factorize(N)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                out.push_back({q, 3, 2});
            } else {
                out.push_back({q, q - 1, 2});
                out.push_back({q, 3, q / 4});
            }
            continue;
        }
        long phi = euler_phi_prime_power(p, e);
        long g = 0;
        for (long cand = 2; cand < q; ++cand) {
            if (cand % p == 0) continue;
            if (multiplicative_order(cand, q) == phi) {
                g = cand;
                break;
            }
        }
        if (g == 0) throw gsp_error("no primitive root found");
        out.push_back({q, g, phi});
    }
    return out;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : modulus_(modulus), factors_(cyclic_factors(modulus)),
      exponents_(std::move(exponents)) {
    if (exponents_.size() != factors_.size())
        throw gsp_error("need one exponent per cyclic factor of (Z/N)^*");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        long d = factors_[i].order;
        exponents_[i] = ((exponents_[i] % d) + d) % d;
    }
}

std::optional<Rational> DirichletCharacter::angle(long a) const {
    long r = ((a % modulus_) + modulus_) % modulus_;
    if (modulus_ == 1) return Rational(0);
    if (std::gcd(r, modulus_) != 1) return std::nullopt;
    Rational t(0);
    std::size_t i = 0;
    while (i < factors_.size()) {
        long q = factors_[i].prime_power;
        long ra = r % q;
        if (q % 2 == 0 && q >= 8) {
            // pair of factors (-1, 3) for the same 2^a
            long half = q / 4;
            long t3 = 1;
            long e1 = -1, e0 = 0;
            for (long e = 0; e < half; ++e) {
                if (t3 == ra) {
                    e1 = e;
                    e0 = 0;
                    break;
                }
                if (q - t3 == ra) {
                    e1 = e;
                    e0 = 1;
                    break;
                }
                t3 = mul_mod(t3, 3, q);
            }
            if (e1 < 0) throw gsp_error("discrete log failed in 2-part");
            t += Rational(exponents_[i] * e0, 2);
            t += Rational(exponents_[i + 1], half) * Rational(e1);
            i += 2;
            continue;
        }
        long g = factors_[i].generator;
        long d = factors_[i].order;
        long t_pow = 1;
        long dl = -1;
        for (long e = 0; e < d; ++e) {
            if (t_pow == ra) {
                dl = e;
                break;
            }
            t_pow = mul_mod(t_pow, g, q);
        }
        if (dl < 0) throw gsp_error("discrete log failed");
        t += Rational(exponents_[i], d) * Rational(dl);
        ++i;
    }
    return frac_mod1(t);
}

std::complex<double> DirichletCharacter::value(long a) const {
    auto t = angle(a);
    if (!t) return {0.0, 0.0};
    double th = kTwoPi * to_double(*t);
    return {std::cos(th), std::sin(th)};
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](long k) { return k == 0; });
}

int DirichletCharacter::parity() const {
    if (modulus_ <= 2) return 1;
    auto t = angle(modulus_ - 1);
    return (*t == 0) ? 1 : -1;
}

long DirichletCharacter::conductor() const {
    for (long f = 1; f <= modulus_; ++f) {
        if (modulus_ % f) continue;
        bool trivial_on_kernel = true;
        for (long a = 1; a < modulus_ && trivial_on_kernel; ++a) {
            if (std::gcd(a, modulus_) != 1) continue;
            if (a % f != 1 % f) continue;
            auto t = angle(a);
            if (*t != 0) trivial_on_kernel = false;
        }
        if (trivial_on_kernel) return f;
    }
    return modulus_;
}

DirichletCharacter DirichletCharacter::power(long m) const {
    std::vector<long> exps;
    exps.reserve(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        long d = factors_[i].order;
        long k = static_cast<long>(
            (static_cast<long long>(exponents_[i]) * (((m % d) + d) % d)) % d);
        exps.push_back(k);
    }
    return DirichletCharacter(modulus_, std::move(exps));
}

std::vector<DirichletCharacter> all_characters(long N) {
    auto facs = cyclic_factors(N);
    std::vector<long> exps(facs.size(), 0);
    std::vector<DirichletCharacter> out;
    while (true) {
        out.emplace_back(N, exps);
        std::size_t i = 0;
        while (i < exps.size()) {
            if (++exps[i] < facs[i].order) break;
            exps[i] = 0;
            ++i;
        }
        if (i == exps.size()) break;
    }
    return out;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
    long N = chi.modulus();
    if (N == 1) return {1.0, 0.0};
    std::complex<double> acc(0.0, 0.0);
    for (long a = 1; a < N; ++a) {
        auto t = chi.angle(a);
        if (!t) continue;
        double th = kTwoPi * (to_double(*t) + static_cast<double>(a) / N);
        acc += std::complex<double>(std::cos(th), std::sin(th));
    }
    return acc;
}

std::vector<long> primes_up_to(long P) {
    if (P < 2) return {};
    std::vector<bool> comp(static_cast<std::size_t>(P) + 1, false);
    std::vector<long> out;
    for (long i = 2; i <= P; ++i) {
        if (comp[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= P; j += i) comp[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

LValue dirichlet_lvalue_euler(const DirichletCharacter& chi, double s, long P) {
    if (s <= 1.0) throw gsp_error("euler truncation requires s > 1");
    if (P < 2) throw gsp_error("euler truncation needs P >= 2");
    std::complex<double> acc(1.0, 0.0);
    for (long p : primes_up_to(P)) {
        std::complex<double> c = chi.value(p);
        acc /= 1.0 - c * std::pow(static_cast<double>(p), -s);
    }
    double delta = std::pow(static_cast<double>(P), 1.0 - s) /
                   ((s - 1.0) * (1.0 - std::pow(2.0, -s)));
    return {acc, std::abs(acc) * std::expm1(delta)};
}

namespace {

// zeta(s, x) for real s > 1, 0 < x <= 1, with a certified bound: M direct
// terms, tail integral, and four Euler-Maclaurin corrections; the error is
// at most the first omitted correction term.
std::pair<double, double> hurwitz_zeta(double s, double x, int M) {
    double acc = 0.0;
    for (int k = 0; k < M; ++k) acc += std::pow(k + x, -s);
    const double y = M + x;
    acc += std::pow(y, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(y, -s);
    double rising = s;  // (s)_{2j-1} accumulated across j
    for (int j = 1; j <= 4; ++j) {
        acc += to_double(bernoulli(2 * static_cast<unsigned>(j))) /
               to_double(Rational(factorial(2 * static_cast<unsigned>(j)))) *
               rising * std::pow(y, -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
    }
    double err = std::fabs(to_double(bernoulli(10)) /
                           to_double(Rational(factorial(10))) * rising *
                           std::pow(y, -s - 9));
    return {acc, err};
}

}  // namespace

LValue dirichlet_lvalue_hurwitz(const DirichletCharacter& chi, double s, int M) {
    if (s <= 1.0) throw gsp_error("hurwitz evaluation requires s > 1");
    if (M < 1) throw gsp_error("hurwitz evaluation needs M >= 1");
    long N = chi.modulus();
    std::complex<double> acc(0.0, 0.0);
    double err = 0.0;
    for (long a = 1; a <= N; ++a) {
        auto t = chi.angle(a);
        if (!t) continue;
        auto [z, e] = hurwitz_zeta(s, static_cast<double>(a) / N, M);
        double th = kTwoPi * to_double(*t);
        acc += std::complex<double>(std::cos(th), std::sin(th)) * z;
        err += e;
    }
    double scale = std::pow(static_cast<double>(N), -s);
    return {acc * scale, err * scale};
}

LValue partial_l_omit(const DirichletCharacter& chi, double s,
                      const std::vector<long>& omit, long P) {
    LValue base = dirichlet_lvalue_euler(chi, s, P);
    for (long p : omit) {
        if (p < 2) throw gsp_error("omitted entries must be primes");
        std::complex<double> f =
            1.0 - chi.value(p) * std::pow(static_cast<double>(p), -s);
        base.value *= f;
        base.error_bound *= std::abs(f);
    }
    return base;
}

}  // namespace gsp
