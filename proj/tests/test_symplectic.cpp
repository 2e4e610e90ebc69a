#include "doctest.h"

#include <random>

#include "gsp/symplectic.hpp"

using namespace gsp;

TEST_CASE("multiplier detects GSp membership") {
    CHECK(gsp_multiplier(symplectic_j(2), 2) == Rational(1));
    Mat scaled = Mat::identity(4);
    for (int i = 0; i < 2; ++i) scaled.at(i, i) = 3;
    // diag(3,3,1,1) has tgJg = 3J
    CHECK(gsp_multiplier(scaled, 2) == Rational(3));
    Mat bad = Mat::identity(4);
    bad.at(0, 1) = 1;  // upper shear in the GL block is not a similitude
    CHECK_THROWS_AS(gsp_multiplier(bad, 2), gsp_error);
}

TEST_CASE("doubling embedding matches the fixed 4x4 example") {
    SymplecticMatrix j1(symplectic_j(1), 1);
    SymplecticMatrix e = embed_doubling(j1, j1);
    Mat want(4, 4);
    want.at(0, 2) = -1;
    want.at(1, 3) = 1;
    want.at(2, 0) = 1;
    want.at(3, 1) = -1;
    CHECK(e.mat() == want);
    CHECK(e.multiplier() == Rational(1));
}

TEST_CASE("doubling embedding is a homomorphism with matching multipliers") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SymplecticMatrix g1 = random_symplectic(1, seed, 5);
        SymplecticMatrix h1 = random_symplectic(1, seed + 100, 5);
        SymplecticMatrix g2 = random_symplectic(2, seed + 200, 5);
        SymplecticMatrix h2 = random_symplectic(2, seed + 300, 5);
        SymplecticMatrix lhs = embed_doubling(g1, g2) * embed_doubling(h1, h2);
        SymplecticMatrix rhs = embed_doubling(g1 * h1, g2 * h2);
        CHECK(lhs == rhs);
    }
    // similitudes with equal multiplier embed to that multiplier
    SymplecticMatrix a = random_gsp(1, 11, 4, Rational(2));
    SymplecticMatrix b = random_gsp(2, 12, 4, Rational(2));
    CHECK(embed_doubling(a, b).multiplier() == Rational(2));
}

TEST_CASE("coset matrices are symplectic") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= n; ++r) {
            CHECK(q_matrix(n, r).multiplier() == Rational(1));
            CHECK(alpha_matrix(n, r).multiplier() == Rational(1));
        }
}

TEST_CASE("siegel factorization recovers Levi and unipotent parts") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Mat A = random_gl(2, rng);
        Mat X(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                X.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
                X.at(j, i) = X.at(i, j);
            }
        const Rational v(2);
        // p = [[A, 0],[0, v tA^{-1}]] [[I, X],[0, I]]
        Mat p(4, 4);
        p.set_block(0, 0, A);
        p.set_block(0, 2, A * X);
        p.set_block(2, 2, A.inverse().transpose() * Rational(2));
        SiegelFactorization f = siegel_factor(SymplecticMatrix(p, 2));
        CHECK(f.A == A);
        CHECK(f.v == v);
        CHECK(f.X == X);
        CHECK(f.d == rat_pow(v, -1) * A.det());
    }
}

TEST_CASE("siegel factorization rejects non-parabolic input") {
    CHECK_THROWS_AS(siegel_factor(SymplecticMatrix(symplectic_j(2), 2)),
                    gsp_error);
}

TEST_CASE("levi pair d-value is the product of determinants") {
    // fixed example: n=2, r=0, g1 = diag(2,3), g2 = I gives d = 6
    Mat g1(2, 2), g2 = Mat::identity(2);
    g1.at(0, 0) = 2;
    g1.at(1, 1) = 3;
    Mat id4 = Mat::identity(4);
    auto res = lemma22_levi_pair(2, 0, g1, g2, id4, id4);
    CHECK(res.d == Rational(6));
    CHECK(res.X.mat().block(4, 0, 4, 4).is_zero());
}

TEST_CASE("levi pair validates its inputs") {
    Mat g = Mat::identity(2);
    CHECK_THROWS_AS(lemma22_levi_pair(2, 2, g, g, Mat::identity(4), Mat::identity(4)),
                    gsp_error);
    // a unipotent argument outside N_{2n,r} must be rejected
    CHECK_THROWS_WITH_AS(
        lemma22_levi_pair(2, 0, g, g, symplectic_j(2), Mat::identity(4)),
        "input not in P_{2n,r}", gsp_error);
}

TEST_CASE("sp diagonal and full diagonal cases give d = 1") {
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= n; ++r) {
            SymplecticMatrix x1 = random_symplectic(r, 40 + n + r, 6);
            CHECK(lemma22_sp_diag(n, r, x1).d == Rational(1));
        }
        SymplecticMatrix g = random_gsp(n, 50 + n, 5, Rational(3));
        CHECK(lemma22_full_diag(n, g).d == Rational(1));
    }
    SymplecticMatrix nonsp = random_gsp(2, 60, 4, Rational(2));
    CHECK_THROWS_AS(lemma22_sp_diag(2, 2, nonsp), gsp_error);
}

TEST_CASE("random generators are deterministic and symplectic") {
    SymplecticMatrix a = random_symplectic(2, 777, 8);
    SymplecticMatrix b = random_symplectic(2, 777, 8);
    CHECK(a == b);
    CHECK(a.multiplier() == Rational(1));
    CHECK(random_symplectic(2, 0, 0) == sp_identity(2));
    SymplecticMatrix c = random_gsp(2, 777, 8, Rational(5));
    CHECK(c.multiplier() == Rational(5));
    CHECK(!(random_symplectic(2, 778, 8) == a));
}

TEST_CASE("inverse undoes the group operation") {
    SymplecticMatrix g = random_gsp(2, 91, 6, Rational(2));
    CHECK(g * g.inverse() == sp_identity(2));
}
