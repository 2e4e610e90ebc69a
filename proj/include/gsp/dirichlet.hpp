#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// One cyclic piece of (Z/N)^*: a residue generating it mod its prime power,
// and the order of that residue.
struct CyclicFactor {
    long prime_power;
    long generator;
    long order;
};

// The canonical cyclic decomposition of (Z/N)^*: one factor per odd prime
// power, none for 2, one of order 2 for 4, and the pair (-1, 3) for 2^a with
// a >= 3. Empty for N = 1 and N = 2.
std::vector<CyclicFactor> cyclic_factors(long N);

// Character mod N, pinned down by one exponent per cyclic factor: the
// generator g_i maps to e^{2 pi i k_i / d_i}. Values are kept as exact angle
// fractions and rendered to complex doubles only on demand.
class DirichletCharacter {
  public:
    DirichletCharacter(long modulus, std::vector<long> exponents);

    long modulus() const { return modulus_; }
    const std::vector<CyclicFactor>& factors() const { return factors_; }
    const std::vector<long>& exponents() const { return exponents_; }

    // Angle fraction t in [0,1) with chi(a) = e^{2 pi i t}; nullopt when
    // gcd(a, N) > 1.
    std::optional<Rational> angle(long a) const;
    std::complex<double> value(long a) const;

    bool is_principal() const;
    // chi(-1), +1 or -1.
    int parity() const;
    // Smallest f | N such that chi is trivial on residues = 1 mod f.
    long conductor() const;
    bool is_primitive() const { return conductor() == modulus_; }
    // chi^m, a character of the same modulus.
    DirichletCharacter power(long m) const;

  private:
    long modulus_;
    std::vector<CyclicFactor> factors_;
    std::vector<long> exponents_;
};

std::vector<DirichletCharacter> all_characters(long N);

// sum over a coprime to N of chi(a) e^{2 pi i a / N}; 1 for N = 1.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

struct LValue {
    std::complex<double> value;
    double error_bound;
};

std::vector<long> primes_up_to(long P);

// Truncated Euler product over p <= P with certified tail: the omitted
// factors change the value by at most |value| * (e^delta - 1) with
// delta = P^{1-s} / ((s-1)(1-2^{-s})). Requires s > 1.
LValue dirichlet_lvalue_euler(const DirichletCharacter& chi, double s, long P);

// N^{-s} sum_a chi(a) zeta(s, a/N) with M direct terms per Hurwitz zeta and
// an Euler-Maclaurin correction; the certified bound is the first omitted
// correction term, summed over residues.
LValue dirichlet_lvalue_hurwitz(const DirichletCharacter& chi, double s, int M);

// Euler value with the factors at the listed primes divided out.
LValue partial_l_omit(const DirichletCharacter& chi, double s,
                      const std::vector<long>& omit, long P);

}  // namespace gsp
