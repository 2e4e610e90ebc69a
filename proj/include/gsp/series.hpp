#pragma once

#include <vector>

#include "gsp/laurent.hpp"
#include "gsp/rational.hpp"

namespace gsp {

// Coefficient-ring hooks used by TruncatedSeries. "zero_like"/"one_like"
// carry the shape (variable count) when the ring is a polynomial ring.
inline Rational ring_zero_like(const Rational&) { return Rational(0); }
inline Rational ring_one_like(const Rational&) { return Rational(1); }
inline bool ring_is_zero(const Rational& c) { return c == 0; }
inline Rational ring_inverse(const Rational& c) {
    if (c == 0) throw gsp_error("singular factor");
    return Rational(1) / c;
}

inline LaurentPolynomial ring_zero_like(const LaurentPolynomial& p) {
    return LaurentPolynomial(p.nvars());
}
inline LaurentPolynomial ring_one_like(const LaurentPolynomial& p) {
    return LaurentPolynomial::constant(p.nvars(), Rational(1));
}
inline bool ring_is_zero(const LaurentPolynomial& p) { return p.is_zero(); }
// Laurent units are single terms c * x^e.
inline LaurentPolynomial ring_inverse(const LaurentPolynomial& p) {
    if (p.term_count() != 1) throw gsp_error("singular factor");
    const auto& [e, c] = *p.terms().begin();
    LaurentPolynomial::Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return LaurentPolynomial::monomial(p.nvars(), inv, Rational(1) / c);
}

// Power series in one variable truncated at a fixed degree; coefficient c_d
// is stored for every 0 <= d <= degree, including zeros.
template <typename C>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw gsp_error("series needs at least degree 0");
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const C& coeff(int d) const { return c_.at(static_cast<std::size_t>(d)); }
    const std::vector<C>& coeffs() const { return c_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        int d = std::min(degree(), o.degree());
        std::vector<C> out;
        out.reserve(d + 1);
        for (int i = 0; i <= d; ++i) out.push_back(c_[i] + o.c_[i]);
        return TruncatedSeries(std::move(out));
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        int d = std::min(degree(), o.degree());
        std::vector<C> out(d + 1, ring_zero_like(c_[0]));
        for (int i = 0; i <= d; ++i) {
            if (ring_is_zero(c_[i])) continue;
            for (int j = 0; i + j <= d; ++j)
                out[i + j] = out[i + j] + c_[i] * o.c_[j];
        }
        return TruncatedSeries(std::move(out));
    }

  private:
    std::vector<C> c_;
};

// One factor of a rational generating function, as polynomial coefficient
// lists in ascending degree. den must be a unit at Y = 0.
template <typename C>
struct SeriesFactor {
    std::vector<C> num;
    std::vector<C> den;
};

// Expansion of den^{-1} to the requested degree: with den = sum d_j Y^j,
// the inverse u satisfies u_0 = d_0^{-1} and
// u_m = -d_0^{-1} * sum_{j>=1} d_j u_{m-j}.
template <typename C>
std::vector<C> invert_poly_series(const std::vector<C>& den, int D) {
    if (den.empty()) throw gsp_error("singular factor");
    C d0_inv = ring_inverse(den[0]);
    std::vector<C> u;
    u.reserve(D + 1);
    u.push_back(d0_inv);
    for (int m = 1; m <= D; ++m) {
        C acc = ring_zero_like(den[0]);
        int jmax = std::min<int>(m, static_cast<int>(den.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc = acc + den[j] * u[m - j];
        u.push_back(d0_inv * (ring_zero_like(acc) - acc));
    }
    return u;
}

// Product of num_i/den_i expanded exactly to degree D.
template <typename C>
TruncatedSeries<C> series_from_rational_factors(
    const std::vector<SeriesFactor<C>>& factors, int D) {
    if (factors.empty()) throw gsp_error("no factors given");
    if (D < 0) throw gsp_error("negative truncation degree");
    const C proto = factors[0].den.empty() ? factors[0].num.at(0)
                                           : factors[0].den[0];
    std::vector<C> acc(D + 1, ring_zero_like(proto));
    acc[0] = ring_one_like(proto);
    TruncatedSeries<C> out(std::move(acc));
    for (const auto& f : factors) {
        std::vector<C> u = invert_poly_series(f.den, D);
        TruncatedSeries<C> inv(std::move(u));
        std::vector<C> np = f.num;
        if (np.empty()) throw gsp_error("empty numerator polynomial");
        np.resize(D + 1, ring_zero_like(proto));
        out = out * (TruncatedSeries<C>(std::move(np)) * inv);
    }
    return out;
}

}  // namespace gsp
