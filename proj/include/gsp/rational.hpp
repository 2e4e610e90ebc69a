#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsp {

// All exact arithmetic runs on boost multiprecision integers/rationals.
// cpp_rational keeps values reduced to lowest terms with positive denominator,
// which is exactly the canonical form the rest of the library relies on.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct gsp_error : std::runtime_error {
    explicit gsp_error(const std::string& what) : std::runtime_error(what) {}
};

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical serialization is "num/den", always with the denominator.
std::string rat_to_string(const Rational& r);

// Accepts "num/den" or a bare integer string. Throws gsp_error on malformed
// input or zero denominator.
Rational rat_from_string(const std::string& s);

// b^e for integer e of either sign; b = 0 with e < 0 throws.
Rational rat_pow(const Rational& b, long e);

Integer int_pow(const Integer& b, unsigned long e);

Integer factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

// Bernoulli number B_m (B_1 = -1/2 convention), exact.
// Computed by the defining recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0.
Rational bernoulli(unsigned m);

}  // namespace gsp
