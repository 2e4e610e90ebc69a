#pragma once

#include "gsp/polynomial.hpp"
#include "gsp/satake.hpp"

namespace gsp {

// Euler factor 1/den(T) at T = q^{-s}. The denominator is stored with
// constant term 1 (not monic), matching the usual L-factor normalization.
struct LocalLFactor {
    Polynomial1 den;
    long q;

    // 1/den(T); throws "evaluation at pole" when den(T) = 0
    Rational eval_at_t(const Rational& t) const;
    double eval_at_t(double t) const;

    RationalFunction1 as_ratfun() const;  // canonical form of 1/den
};

// Degree-(2n+1) standard factor: denominator
//   (1 - chi T) prod_i (1 - chi alpha_i T)(1 - chi alpha_i^{-1} T).
LocalLFactor standard_lfactor(const SatakeData& sd);

// Degree-1 abelian factor with denominator 1 - chi T.
LocalLFactor abelian_lfactor(const Rational& chi_value, long q);

// |Sp(2n, Z/p^m)| = p^{(m-1) n(2n+1)} p^{n^2} prod_{i=1}^n (p^{2i} - 1).
// The m >= 2 layers come from smooth lifting: p^{dim Sp} new solutions per
// step, dim Sp(2n) = n(2n+1).
Integer sp_order_mod(int n, long p, int m);

// vol of the principal congruence subgroup of level p^m inside Sp(2n, Z_p)
// under vol(Sp(2n, Z_p)) = 1: the reciprocal of the order above.
Rational principal_congruence_volume(int n, long p, int m);

// Direct enumeration of {g in M_{2n}(F_p) : tg J g = J}; only feasible for
// (2n)^2 log2(p) around 16, which covers the tested (n,p) pairs.
long sp_count_bruteforce(int n, int p);

}  // namespace gsp
