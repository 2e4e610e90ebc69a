#pragma once

#include <cstdint>
#include <random>

#include "gsp/matrix.hpp"

namespace gsp {

// J_n = [[0, I_n], [-I_n, 0]], the form defining Sp(2n) and GSp(2n).
Mat symplectic_j(int n);

// The similitude factor mu with tg J g = mu J, exact. Throws "not in GSp"
// when no such mu exists and "zero multiplier" when g is singular.
Rational gsp_multiplier(const Mat& g, int n);

// Matrix in GSp(2n) carrying its multiplier; construction validates.
class SymplecticMatrix {
  public:
    SymplecticMatrix(Mat m, int n);

    const Mat& mat() const { return m_; }
    int half_size() const { return n_; }
    const Rational& multiplier() const { return mu_; }

    SymplecticMatrix operator*(const SymplecticMatrix& o) const;
    SymplecticMatrix inverse() const;
    bool operator==(const SymplecticMatrix& o) const { return m_ == o.m_; }

  private:
    Mat m_;
    int n_;
    Rational mu_;
};

SymplecticMatrix sp_identity(int n);

// Pairwise embedding GSp(2a) x GSp(2b) -> GSp(2a+2b) with matching
// multipliers. Block layout (row/column widths a, b, a, b):
//   [ A1   0  -B1   0 ]
//   [  0  A2   0   B2 ]
//   [-C1   0   D1   0 ]
//   [  0  C2   0   D2 ]
// Note the sign flips on the first factor's B and C blocks.
SymplecticMatrix embed_doubling(const SymplecticMatrix& g1,
                                const SymplecticMatrix& g2);

// diag(0_{n-r}, I_r) as an n x n block.
Mat itilde(int n, int r);

// alpha_r in Sp(4n): identity plus Itilde_r hooks in the (3,2) and (4,1)
// n x n block positions.
SymplecticMatrix alpha_matrix(int n, int r);

// The coset representative Q_r in Sp(4n), written in n x n blocks as
//   [ I    0    0    0  ]
//   [ 0  I'_{n-r} 0  It ]
//   [ 0    0    I   It  ]
//   [ It  -It   0  I'_{n-r} ]
// with It = itilde(n, r) and I'_{n-r} = I_n - It.
SymplecticMatrix q_matrix(int n, int r);

// Levi/unipotent data of an element of the Siegel parabolic: p equals
// [[A, 0], [0, v tA^{-1}]] * [[I, X], [0, I]].
struct SiegelFactorization {
    Mat A;
    Rational v;
    Mat X;
    Rational d;  // v^{-n} det(A), where A is 2n x 2n
};

// Input must have size 4n and vanishing lower-left 2n x 2n block.
SiegelFactorization siegel_factor(const SymplecticMatrix& p);

// Conjugation X = Q_r (h1, h2) Q_r^{-1}; checks that X lands in the Siegel
// parabolic of Sp(4n) and returns it with its d-value. Throws
// "lemma violation" if the lower-left block is nonzero.
struct ConjugationResult {
    SymplecticMatrix X;
    Rational d;
};

// Case (i): p_i = blockdiag(g_i, I_r, tg_i^{-1}, I_r) * n_i with
// g_i in GL(n-r) and n_i unipotent in N_{2n,r}. Expected d: det(g1) det(g2).
ConjugationResult lemma22_levi_pair(int n, int r, const Mat& g1, const Mat& g2,
                                    const Mat& n1, const Mat& n2);

// Case (ii): the pair (x, x) with x = (1, x1), x1 in Sp(2r). Expected d = 1.
ConjugationResult lemma22_sp_diag(int n, int r, const SymplecticMatrix& x1);

// Case (iii): the pair (g, g) with g in GSp(2n), conjugated by Q_n.
// Expected d = 1.
ConjugationResult lemma22_full_diag(int n, const SymplecticMatrix& g);

// Membership test for the parabolic P_{2n,r}: lower-left (n+r) x (n-r)
// block zero.
bool in_parabolic_2nr(const Mat& g, int n, int r);

// Deterministic product of word_length generators
// {J_n, [[I,X],[0,I]] symmetric X, [[U,0],[0,tU^{-1}]] unimodular U}
// with small integer entries; always multiplier 1.
SymplecticMatrix random_symplectic(int n, std::uint64_t seed, int word_length);

// Random invertible integer matrix as L * D * U with unit-triangular L, U.
Mat random_gl(int m, std::mt19937_64& rng);

// Random element of the unipotent radical N_{2n,r}, size 2n.
Mat random_n2nr(int n, int r, std::mt19937_64& rng);

// Random similitude with prescribed small multiplier times a random
// symplectic word; used to exercise the mu != 1 cases.
SymplecticMatrix random_gsp(int n, std::uint64_t seed, int word_length,
                            const Rational& mu);

}  // namespace gsp
