#include "gsp/pi_power.hpp"

#include <cmath>

namespace gsp {

PiPower::PiPower(Rational c, long e) : coeff(std::move(c)), pi_exp(e) {
    if (coeff == 0) pi_exp = 0;
}

PiPower PiPower::operator*(const PiPower& o) const {
    return PiPower(coeff * o.coeff, pi_exp + o.pi_exp);
}

PiPower PiPower::operator/(const PiPower& o) const {
    if (o.is_zero()) throw gsp_error("division by zero PiPower");
    return PiPower(coeff / o.coeff, pi_exp - o.pi_exp);
}

PiPower PiPower::operator*(const Rational& c) const {
    return PiPower(coeff * c, pi_exp);
}

double PiPower::to_double() const {
    constexpr double kPi = 3.14159265358979323846;
    return gsp::to_double(coeff) * std::pow(kPi, static_cast<double>(pi_exp));
}

std::string PiPower::to_string() const {
    return rat_to_string(coeff) + " * pi^" + std::to_string(pi_exp);
}

PiPower pi_pow(long e) { return PiPower(Rational(1), e); }

}  // namespace gsp
