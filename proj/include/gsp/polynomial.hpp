#pragma once

#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// Dense univariate polynomial over Rational, coefficients in ascending
// degree, normalized so the zero polynomial has no coefficients and a
// nonzero one has nonzero leading coefficient.
class Polynomial1 {
  public:
    Polynomial1() = default;
    explicit Polynomial1(std::vector<Rational> coeffs);
    static Polynomial1 constant(const Rational& c);
    // a*x + b
    static Polynomial1 linear(const Rational& a, const Rational& b);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1: zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int d) const;
    const Rational& leading() const;

    Polynomial1 operator+(const Polynomial1& o) const;
    Polynomial1 operator-(const Polynomial1& o) const;
    Polynomial1 operator*(const Polynomial1& o) const;
    Polynomial1 operator*(const Rational& s) const;
    bool operator==(const Polynomial1& o) const { return c_ == o.c_; }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial1, Polynomial1> divmod(const Polynomial1& d) const;

    Polynomial1 monic() const;

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    // p(a*x + b)
    Polynomial1 compose_affine(const Rational& a, const Rational& b) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial1 poly_gcd(Polynomial1 a, Polynomial1 b);  // monic gcd

// Quotient of polynomials in canonical form: denominator monic and coprime
// to the numerator, so operator== is mathematical equality.
class RationalFunction1 {
  public:
    RationalFunction1();  // zero
    RationalFunction1(Polynomial1 num, Polynomial1 den);
    static RationalFunction1 one();
    static RationalFunction1 from_poly(Polynomial1 p);

    const Polynomial1& num() const { return num_; }
    const Polynomial1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction1 operator*(const RationalFunction1& o) const;
    RationalFunction1 operator/(const RationalFunction1& o) const;
    bool operator==(const RationalFunction1& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunction1 reciprocal() const;
    RationalFunction1 compose_affine(const Rational& a, const Rational& b) const;

    Rational eval(const Rational& x) const;  // throws "evaluation at pole"
    double eval_double(double x) const;

    std::string to_string() const;

  private:
    Polynomial1 num_, den_;
};

// Exact value f(x); pole -> gsp_error("evaluation at pole ...").
Rational ratfun_eval(const RationalFunction1& f, const Rational& x);

}  // namespace gsp
