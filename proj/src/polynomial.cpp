#include "gsp/polynomial.hpp"

#include <sstream>

namespace gsp {

Polynomial1::Polynomial1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Polynomial1::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial1 Polynomial1::constant(const Rational& c) {
    return Polynomial1(std::vector<Rational>{c});
}

Polynomial1 Polynomial1::linear(const Rational& a, const Rational& b) {
    return Polynomial1(std::vector<Rational>{b, a});
}

Rational Polynomial1::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(d)];
}

const Rational& Polynomial1::leading() const {
    if (c_.empty()) throw gsp_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Polynomial1 Polynomial1::operator+(const Polynomial1& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial1(std::move(out));
}

Polynomial1 Polynomial1::operator-(const Polynomial1& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Polynomial1(std::move(out));
}

Polynomial1 Polynomial1::operator*(const Polynomial1& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial1();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return Polynomial1(std::move(out));
}

Polynomial1 Polynomial1::operator*(const Rational& s) const {
    std::vector<Rational> out = c_;
    for (auto& c : out) c *= s;
    return Polynomial1(std::move(out));
}

std::pair<Polynomial1, Polynomial1> Polynomial1::divmod(const Polynomial1& d) const {
    if (d.is_zero()) throw gsp_error("polynomial division by zero");
    Polynomial1 q, r = *this;
    std::vector<Rational> qc(degree() >= d.degree() && degree() >= 0
                                 ? static_cast<std::size_t>(degree() - d.degree() + 1)
                                 : 0,
                             Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational f = r.leading() / d.leading();
        int shift = r.degree() - d.degree();
        qc[static_cast<std::size_t>(shift)] = f;
        std::vector<Rational> sub(static_cast<std::size_t>(shift) + d.c_.size(),
                                  Rational(0));
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            sub[static_cast<std::size_t>(shift) + i] = d.c_[i] * f;
        r = r - Polynomial1(std::move(sub));
    }
    return {Polynomial1(std::move(qc)), r};
}

Polynomial1 Polynomial1::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Rational Polynomial1::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial1::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + to_double(*it);
    return acc;
}

Polynomial1 Polynomial1::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the substituted variable keeps everything exact.
    Polynomial1 acc;
    Polynomial1 lin = Polynomial1::linear(a, b);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + Polynomial1::constant(*it);
    return acc;
}

std::string Polynomial1::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit = (c == 1);
        if (i == 0 || !unit) os << rat_to_string(c);
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

Polynomial1 poly_gcd(Polynomial1 a, Polynomial1 b) {
    // Euclid with monic remainders so coefficients stay small-ish.
    while (!b.is_zero()) {
        Polynomial1 r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RationalFunction1::RationalFunction1()
    : num_(), den_(Polynomial1::constant(Rational(1))) {}

RationalFunction1::RationalFunction1(Polynomial1 num, Polynomial1 den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw gsp_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial1::constant(Rational(1));
        return;
    }
    Polynomial1 g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction1 RationalFunction1::one() {
    return from_poly(Polynomial1::constant(Rational(1)));
}

RationalFunction1 RationalFunction1::from_poly(Polynomial1 p) {
    return RationalFunction1(std::move(p), Polynomial1::constant(Rational(1)));
}

RationalFunction1 RationalFunction1::operator*(const RationalFunction1& o) const {
    return RationalFunction1(num_ * o.num_, den_ * o.den_);
}

RationalFunction1 RationalFunction1::operator/(const RationalFunction1& o) const {
    if (o.is_zero()) throw gsp_error("division by zero rational function");
    return RationalFunction1(num_ * o.den_, den_ * o.num_);
}

RationalFunction1 RationalFunction1::reciprocal() const {
    if (is_zero()) throw gsp_error("reciprocal of zero");
    return RationalFunction1(den_, num_);
}

RationalFunction1 RationalFunction1::compose_affine(const Rational& a,
                                                    const Rational& b) const {
    return RationalFunction1(num_.compose_affine(a, b),
                             den_.compose_affine(a, b));
}

Rational RationalFunction1::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0)
        throw gsp_error("evaluation at pole x = " + rat_to_string(x));
    return num_.eval(x) / d;
}

double RationalFunction1::eval_double(double x) const {
    return num_.eval_double(x) / den_.eval_double(x);
}

std::string RationalFunction1::to_string() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Rational ratfun_eval(const RationalFunction1& f, const Rational& x) {
    return f.eval(x);
}

}  // namespace gsp
