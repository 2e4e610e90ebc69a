#pragma once

#include <map>
#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// Sparse multivariate Laurent polynomial: exponent vector -> coefficient.
// Zero coefficients are never stored, so structural equality of the term
// maps is polynomial equality.
class LaurentPolynomial {
  public:
    using Exponents = std::vector<int>;
    using TermMap   = std::map<Exponents, Rational>;

    explicit LaurentPolynomial(int nvars = 0) : nvars_(nvars) {}

    static LaurentPolynomial constant(int nvars, const Rational& c);
    static LaurentPolynomial monomial(int nvars, const Exponents& e,
                                      const Rational& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Full evaluation; every variable with a negative exponent anywhere must
    // get a nonzero value.
    Rational eval(const std::vector<Rational>& values) const;

    // Relabel variables by x_i -> x_{perm[i]}.
    LaurentPolynomial permute_vars(const std::vector<int>& perm) const;

    // x_i -> x_i^{-1}.
    LaurentPolynomial invert_var(int i) const;

    // Substitute a value for one variable; result keeps the variable slot
    // with exponent 0 so downstream exponent vectors stay aligned.
    LaurentPolynomial substitute_var(int i, const Rational& value) const;

    std::string to_string() const;  // for diagnostics

  private:
    void add_term(const Exponents& e, const Rational& c);

    int nvars_;
    TermMap terms_;
};

}  // namespace gsp
