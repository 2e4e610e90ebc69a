#include "gsp/laurent.hpp"

#include <sstream>

namespace gsp {

void LaurentPolynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Rational& c) {
    LaurentPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const Exponents& e,
                                              const Rational& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw gsp_error("monomial exponent vector has wrong length");
    LaurentPolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (nvars_ != o.nvars_) throw gsp_error("variable count mismatch");
    LaurentPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    if (nvars_ != o.nvars_) throw gsp_error("variable count mismatch");
    LaurentPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (nvars_ != o.nvars_) throw gsp_error("variable count mismatch");
    LaurentPolynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Rational LaurentPolynomial::eval(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw gsp_error("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= rat_pow(values[i], e[i]);
        acc += term;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_)
        throw gsp_error("permutation has wrong length");
    LaurentPolynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [old_e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[perm[i]] = old_e[i];
        r.add_term(e, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::invert_var(int i) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [old_e, c] : terms_) {
        Exponents e = old_e;
        e[i] = -e[i];
        r.add_term(e, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::substitute_var(int i, const Rational& value) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [old_e, c] : terms_) {
        Exponents e = old_e;
        int k = e[i];
        e[i] = 0;
        r.add_term(e, c * rat_pow(value, k));
    }
    return r;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) os << "*x" << i << "^" << e[i];
    }
    return os.str();
}

}  // namespace gsp
