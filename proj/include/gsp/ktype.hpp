#pragma once

#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// Harish-Chandra parameter: strictly decreasing positive integers.
struct HCParameter {
    std::vector<long> ell;
    explicit HCParameter(std::vector<long> e);
    int n() const { return static_cast<int>(ell.size()); }
};

// K-type highest weight: weakly decreasing integers.
struct KTypeVector {
    std::vector<long> k;
    explicit KTypeVector(std::vector<long> kk);
    int n() const { return static_cast<int>(k.size()); }
};

// Root data for sp(2n, R) relative to the compact subgroup U(n).
// Weights are stored doubled so the half-integral rho_c stays integral.
struct RootSystemData {
    int n;
    std::vector<std::vector<int>> compact_pos;     // e_i - e_j, i < j
    std::vector<std::vector<int>> noncompact_pos;  // e_i + e_j, i <= j
    std::vector<long> rho_c_doubled;               // (n+1-2j) in slot j
    std::vector<long> rho_n_doubled;               // (n+1) in every slot

    explicit RootSystemData(int n);
};

// k_j = ell_j + j.
KTypeVector hc_to_minimal_ktype(const HCParameter& lambda);

// Inverse of the dictionary; validates that ell is strictly decreasing
// and positive.
HCParameter minimal_ktype_to_hc(const KTypeVector& k);

// True iff every consecutive difference ell_j - ell_{j-1} is odd,
// equivalently all k_j share one parity.
bool parity_condition(const HCParameter& lambda);

// Number of multisets of positive noncompact roots {e_i + e_j, i <= j}
// summing to mu (integer coordinates). Dynamic programming over the
// coordinate box; any negative coordinate gives 0.
Integer q_count(const std::vector<long>& mu, int n);

// Same count by direct recursive enumeration; test oracle for q_count.
Integer q_count_naive(const std::vector<long>& mu, int n);

// Multiplicity of the U(n)-type with highest weight m_vec in the
// holomorphic discrete series with Harish-Chandra parameter lambda:
//   sum over permutations w of sign(w) * Q(w(m + rho_c) - lambda - rho_n).
Integer blattner_multiplicity(const HCParameter& lambda, const KTypeVector& m_vec);

}  // namespace gsp
