#pragma once

#include <vector>

#include "gsp/laurent.hpp"
#include "gsp/series.hpp"

namespace gsp {

// Unramified local data: prime power q, Satake parameters alpha_i, and the
// value chi(pi) of an unramified character at a uniformizer (0 allowed as a
// formal degenerate case).
struct SatakeData {
    int n;
    long q;
    std::vector<Rational> alpha;
    Rational chi{1};

    SatakeData(int n_, long q_, std::vector<Rational> alpha_, Rational chi_ = Rational(1));
};

struct EvaluationPoint {
    Rational s;
};

// Generating function of the Satake images of the Cartan-cell characteristic
// functions, expanded to degree D in Y:
//   (1-Y)/(1-q^n Y) * prod_i (1-q^{2i} Y^2) / ((1-X_i q^n Y)(1-X_i^{-1} q^n Y))
// with q kept symbolic. Variable 0 of each coefficient is q; variables
// 1..n are X_1..X_n.
TruncatedSeries<LaurentPolynomial> rationality_series(int n, int D);

// Same expansion with numeric q and numeric values for the X_i.
TruncatedSeries<Rational> rationality_series_numeric(int n, const Rational& q,
                                                     const std::vector<Rational>& x,
                                                     int D);

// Volumes of the Cartan cells K_{e_1..e_n} graded by e_1 + ... + e_n,
// obtained by substituting X_i = q^i. The substitution telescopes to
// prod_{i=1}^n (1+q^i Y)/(1-q^{n+i} Y).
TruncatedSeries<Rational> cartan_volume_series(int n, long q, int D);

// The telescoped closed form expanded directly; cross-check for the
// substitution route.
TruncatedSeries<Rational> telescoped_volume_series(int n, long q, int D);

// Independent oracle for the n=1 cell volumes: counts sublattices of Z^2 of
// index q^{2e} with cyclic quotient, via Hermite normal forms [[a,b],[0,d]]
// with ad = q^{2e}, 0 <= b < a, gcd(a,b,d) = 1.
Integer sl2_cell_count_bruteforce(long q, int e);

struct ZetaValue {
    bool exact;              // true when the evaluation point is integral
    Rational exact_value;    // meaningful only when exact
    double value;
    double tail_bound;       // 0 for the closed form
};

// Degree-D partial sum of sum_e S(T_e)(alpha) c^{sum e} with
// c = chi(pi) q^{-(2n+1)(s+1/2)}, plus a certified geometric tail bound.
// Throws when |c| is too large for the bound to be finite.
ZetaValue unramified_zeta_series(const SatakeData& sd, const EvaluationPoint& s, int D);

// The same value through local L-factors:
//   L((2n+1)s+1/2, std x chi) / ( L((2n+1)(s+1/2), chi)
//     * prod_{i=1}^n L((2n+1)(2s+1)-2i, chi^2) ).
// Exact when (2n+1)(s+1/2) is an integer. Throws on a pole, naming the factor.
ZetaValue unramified_zeta_closed(const SatakeData& sd, const EvaluationPoint& s);

}  // namespace gsp
