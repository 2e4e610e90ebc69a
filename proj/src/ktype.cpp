#include "gsp/ktype.hpp"

#include <algorithm>
#include <numeric>

namespace gsp {

HCParameter::HCParameter(std::vector<long> e) : ell(std::move(e)) {
    if (ell.empty()) throw gsp_error("empty Harish-Chandra parameter");
    for (std::size_t j = 0; j < ell.size(); ++j) {
        if (ell[j] <= 0) throw gsp_error("Harish-Chandra parameter must be positive");
        if (j > 0 && ell[j] >= ell[j - 1])
            throw gsp_error("Harish-Chandra parameter must be strictly decreasing");
    }
}

KTypeVector::KTypeVector(std::vector<long> kk) : k(std::move(kk)) {
    if (k.empty()) throw gsp_error("empty K-type vector");
    for (std::size_t j = 1; j < k.size(); ++j)
        if (k[j] > k[j - 1])
            throw gsp_error("K-type vector must be weakly decreasing");
}

RootSystemData::RootSystemData(int nn) : n(nn) {
    if (n < 1) throw gsp_error("root system needs n >= 1");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> r(n, 0);
            r[i] = 1;
            r[j] = -1;
            compact_pos.push_back(std::move(r));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<int> r(n, 0);
            r[i] += 1;
            r[j] += 1;
            noncompact_pos.push_back(std::move(r));
        }
    for (int j = 1; j <= n; ++j) {
        rho_c_doubled.push_back(n + 1 - 2 * j);
        rho_n_doubled.push_back(n + 1);
    }
}

KTypeVector hc_to_minimal_ktype(const HCParameter& lambda) {
    std::vector<long> k(lambda.ell);
    for (std::size_t j = 0; j < k.size(); ++j) k[j] += static_cast<long>(j) + 1;
    return KTypeVector(std::move(k));
}

HCParameter minimal_ktype_to_hc(const KTypeVector& k) {
    std::vector<long> e(k.k);
    for (std::size_t j = 0; j < e.size(); ++j) e[j] -= static_cast<long>(j) + 1;
    return HCParameter(std::move(e));  // constructor validates
}

bool parity_condition(const HCParameter& lambda) {
    for (std::size_t j = 1; j < lambda.ell.size(); ++j)
        if (((lambda.ell[j] - lambda.ell[j - 1]) % 2) == 0) return false;
    return true;
}

Integer q_count(const std::vector<long>& mu, int n) {
    if (static_cast<int>(mu.size()) != n) throw gsp_error("weight length mismatch");
    for (long c : mu)
        if (c < 0) return 0;
    RootSystemData rs(n);
    // box DP: dp[v] = number of multisets summing to v, v <= mu pointwise
    std::vector<std::size_t> stride(n, 1);
    std::vector<long> dim(n);
    std::size_t total = 1;
    for (int i = n - 1; i >= 0; --i) {
        dim[i] = mu[i] + 1;
        stride[i] = total;
        total *= static_cast<std::size_t>(dim[i]);
    }
    std::vector<Integer> dp(total, Integer(0));
    dp[0] = 1;
    std::vector<long> v(n);
    for (const auto& root : rs.noncompact_pos) {
        // unbounded use of this root: ascending scan makes dp[v - root]
        // already include it
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rem = idx;
            bool ok = true;
            std::size_t src = idx;
            for (int i = 0; i < n; ++i) {
                v[i] = static_cast<long>(rem / stride[i]);
                rem %= stride[i];
                if (root[i] > v[i]) { ok = false; break; }
                src -= static_cast<std::size_t>(root[i]) * stride[i];
            }
            if (ok && !dp[src].is_zero() && src != idx) dp[idx] += dp[src];
        }
    }
    return dp[total - 1];
}

namespace {

Integer q_count_rec(const std::vector<long>& mu,
                    const std::vector<std::vector<int>>& roots,
                    std::size_t idx) {
    bool zero = std::all_of(mu.begin(), mu.end(), [](long c) { return c == 0; });
    if (zero) return 1;
    if (idx == roots.size()) return 0;
    // max count of roots[idx] that fits inside mu
    long cap = -1;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (roots[idx][i] == 0) continue;
        long fit = mu[i] / roots[idx][i];
        cap = cap < 0 ? fit : std::min(cap, fit);
    }
    Integer acc(0);
    std::vector<long> rest = mu;
    for (long t = 0; t <= cap; ++t) {
        acc += q_count_rec(rest, roots, idx + 1);
        for (std::size_t i = 0; i < mu.size(); ++i) rest[i] -= roots[idx][i];
        bool neg = std::any_of(rest.begin(), rest.end(), [](long c) { return c < 0; });
        if (neg) break;
    }
    return acc;
}

}  // namespace

Integer q_count_naive(const std::vector<long>& mu, int n) {
    if (static_cast<int>(mu.size()) != n) throw gsp_error("weight length mismatch");
    for (long c : mu)
        if (c < 0) return 0;
    RootSystemData rs(n);
    return q_count_rec(mu, rs.noncompact_pos, 0);
}

Integer blattner_multiplicity(const HCParameter& lambda, const KTypeVector& m_vec) {
    int n = lambda.n();
    if (m_vec.n() != n) throw gsp_error("K-type length mismatch");
    // Doubled coordinates: (m + rho_c)_i - (lambda + rho_n)_j reduces to
    // 2 (m_i - i - ell_j); the (n+1)/2 halves cancel, so the Q argument is
    // always integral.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total(0);
    std::vector<long> mu(n);
    do {
        bool feasible = true;
        for (int j = 0; j < n; ++j) {
            int i = perm[j];
            mu[j] = m_vec.k[i] - (i + 1) - lambda.ell[j];
            if (mu[j] < 0) { feasible = false; break; }
        }
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        if (feasible) {
            Integer q = q_count(mu, n);
            if (inversions % 2 == 0)
                total += q;
            else
                total -= q;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace gsp
