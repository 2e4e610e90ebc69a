#pragma once

#include "gsp/rational.hpp"

namespace gsp {

// A constant of the form coeff * pi^pi_exp. Canonical zero has pi_exp = 0,
// so equality is plain field comparison.
struct PiPower {
    Rational coeff{0};
    long pi_exp{0};

    PiPower() = default;
    PiPower(Rational c, long e);

    bool is_zero() const { return coeff == 0; }

    PiPower operator*(const PiPower& o) const;
    PiPower operator/(const PiPower& o) const;  // throws on zero divisor
    PiPower operator*(const Rational& c) const;
    bool operator==(const PiPower& o) const {
        return coeff == o.coeff && pi_exp == o.pi_exp;
    }

    double to_double() const;
    std::string to_string() const;  // "num/den * pi^e"
};

PiPower pi_pow(long e);  // pi^e

}  // namespace gsp
