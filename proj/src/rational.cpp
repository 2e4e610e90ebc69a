#include "gsp/rational.hpp"

#include <mutex>

namespace gsp {

std::string rat_to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw gsp_error("empty rational string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        if (d == 0) throw gsp_error("zero denominator in \"" + s + "\"");
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        throw gsp_error("malformed rational \"" + s + "\": " + e.what());
    }
}

Rational rat_pow(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    if (b == 0) {
        if (e < 0) throw gsp_error("zero base with negative exponent");
        return Rational(0);
    }
    Rational base = e > 0 ? b : Rational(1) / b;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Integer int_pow(const Integer& b, unsigned long e) {
    Integer acc(1), base(b);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Integer factorial(unsigned n) {
    Integer acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);  // exact at every step: acc is C(n, i+1) * partial
    }
    return acc;
}

Rational bernoulli(unsigned m) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        unsigned j = static_cast<unsigned>(cache.size());
        // sum_{i=0}^{j} C(j+1, i) B_i = 0  =>  solve for B_j
        Rational acc(0);
        for (unsigned i = 0; i < j; ++i)
            acc += Rational(binomial(j + 1, i)) * cache[i];
        cache.push_back(-acc / Rational(binomial(j + 1, j)));
    }
    return cache[m];
}

}  // namespace gsp
