#include "gsp/symplectic.hpp"

namespace gsp {

Mat symplectic_j(int n) {
    Mat j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = -1;
    }
    return j;
}

Rational gsp_multiplier(const Mat& g, int n) {
    if (g.rows() != 2 * n || g.cols() != 2 * n)
        throw gsp_error("gsp_multiplier: matrix is not 2n x 2n");
    if (n == 0) return Rational(1);
    Mat j = symplectic_j(n);
    Mat p = g.transpose() * j * g;
    Rational mu = p.at(0, n);
    if (mu == 0) {
        if (p.is_zero()) throw gsp_error("zero multiplier");
        throw gsp_error("not in GSp");
    }
    if (!(p == j * mu)) throw gsp_error("not in GSp");
    return mu;
}

SymplecticMatrix::SymplecticMatrix(Mat m, int n) : m_(std::move(m)), n_(n) {
    mu_ = gsp_multiplier(m_, n_);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
    if (n_ != o.n_) throw gsp_error("size mismatch");
    return SymplecticMatrix(m_ * o.m_, n_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    // g^{-1} = mu^{-1} J^{-1} tg J, avoiding general elimination.
    Mat j = symplectic_j(n_);
    Mat jinv = j.transpose();  // J^{-1} = -J = tJ
    Mat inv = (jinv * m_.transpose() * j) * (Rational(1) / mu_);
    return SymplecticMatrix(std::move(inv), n_);
}

SymplecticMatrix sp_identity(int n) {
    return SymplecticMatrix(Mat::identity(2 * n), n);
}

SymplecticMatrix embed_doubling(const SymplecticMatrix& g1,
                                const SymplecticMatrix& g2) {
    if (g1.multiplier() != g2.multiplier())
        throw gsp_error("embed_doubling: multiplier mismatch");
    int a = g1.half_size(), b = g2.half_size();
    const Mat& m1 = g1.mat();
    const Mat& m2 = g2.mat();
    Mat out(2 * (a + b), 2 * (a + b));
    Mat A1 = m1.block(0, 0, a, a), B1 = m1.block(0, a, a, a);
    Mat C1 = m1.block(a, 0, a, a), D1 = m1.block(a, a, a, a);
    Mat A2 = m2.block(0, 0, b, b), B2 = m2.block(0, b, b, b);
    Mat C2 = m2.block(b, 0, b, b), D2 = m2.block(b, b, b, b);
    out.set_block(0, 0, A1);
    out.set_block(0, a + b, B1 * Rational(-1));
    out.set_block(a, a, A2);
    out.set_block(a, 2 * a + b, B2);
    out.set_block(a + b, 0, C1 * Rational(-1));
    out.set_block(a + b, a + b, D1);
    out.set_block(2 * a + b, a, C2);
    out.set_block(2 * a + b, 2 * a + b, D2);
    return SymplecticMatrix(std::move(out), a + b);
}

Mat itilde(int n, int r) {
    Mat m(n, n);
    for (int i = n - r; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SymplecticMatrix alpha_matrix(int n, int r) {
    if (r < 0 || r > n) throw gsp_error("alpha_matrix: r out of range");
    Mat m = Mat::identity(4 * n);
    Mat it = itilde(n, r);
    m.set_block(2 * n, n, it);
    m.set_block(3 * n, 0, it);
    return SymplecticMatrix(std::move(m), 2 * n);
}

SymplecticMatrix q_matrix(int n, int r) {
    if (r < 0 || r > n) throw gsp_error("q_matrix: r out of range");
    Mat it = itilde(n, r);
    Mat ip = Mat::identity(n) - it;  // I'_{n-r}
    Mat m(4 * n, 4 * n);
    m.set_block(0, 0, Mat::identity(n));
    m.set_block(n, n, ip);
    m.set_block(n, 3 * n, it);
    m.set_block(2 * n, 2 * n, Mat::identity(n));
    m.set_block(2 * n, 3 * n, it);
    m.set_block(3 * n, 0, it);
    m.set_block(3 * n, n, it * Rational(-1));
    m.set_block(3 * n, 3 * n, ip);
    return SymplecticMatrix(std::move(m), 2 * n);
}

SiegelFactorization siegel_factor(const SymplecticMatrix& p) {
    int size = p.mat().rows();
    if (size % 4 != 0)
        throw gsp_error("siegel_factor: size must be 4n");
    int half = size / 2;           // A is half x half
    int n = half / 2;              // exponent in d = v^{-n} det(A)
    if (!p.mat().block(half, 0, half, half).is_zero())
        throw gsp_error("not in Siegel parabolic");
    Mat A = p.mat().block(0, 0, half, half);
    Mat U = p.mat().block(0, half, half, half);
    Rational v = p.multiplier();
    // For block upper-triangular GSp elements tA D = v I, so A is invertible.
    Mat X = A.inverse() * U;
    Rational d = rat_pow(v, -n) * A.det();
    return SiegelFactorization{std::move(A), v, std::move(X), std::move(d)};
}

namespace {

ConjugationResult conjugate_pair(int n, int r, const SymplecticMatrix& h1,
                                 const SymplecticMatrix& h2) {
    SymplecticMatrix q = q_matrix(n, r);
    SymplecticMatrix emb = embed_doubling(h1, h2);
    Mat xm = q.mat() * emb.mat() * q.inverse().mat();
    if (!xm.block(2 * n, 0, 2 * n, 2 * n).is_zero())
        throw gsp_error("lemma violation: conjugate not block upper triangular");
    SymplecticMatrix X(std::move(xm), 2 * n);
    Rational d = siegel_factor(X).d;
    return ConjugationResult{std::move(X), std::move(d)};
}

int rand_small(std::mt19937_64& rng, int lo, int hi) {
    // uniform over [lo, hi] via fixed-width modulo; bias is irrelevant here
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

bool in_parabolic_2nr(const Mat& g, int n, int r) {
    if (g.rows() != 2 * n || g.cols() != 2 * n) return false;
    return g.block(n - r, 0, n + r, n - r).is_zero();
}

ConjugationResult lemma22_levi_pair(int n, int r, const Mat& g1, const Mat& g2,
                                    const Mat& n1, const Mat& n2) {
    if (r < 0 || r >= n) throw gsp_error("levi pair case needs 0 <= r < n");
    int m = n - r;
    if (g1.rows() != m || g2.rows() != m)
        throw gsp_error("GL part must have size n - r");
    auto build = [&](const Mat& g, const Mat& nu) {
        Mat u(n, n);
        u.set_block(0, 0, g);
        u.set_block(m, m, Mat::identity(r));
        Mat levi(2 * n, 2 * n);
        levi.set_block(0, 0, u);
        levi.set_block(n, n, u.inverse().transpose());
        Mat p = levi * nu;
        if (!in_parabolic_2nr(p, n, r))
            throw gsp_error("input not in P_{2n,r}");
        return SymplecticMatrix(std::move(p), n);
    };
    return conjugate_pair(n, r, build(g1, n1), build(g2, n2));
}

ConjugationResult lemma22_sp_diag(int n, int r, const SymplecticMatrix& x1) {
    if (r < 1 || r > n) throw gsp_error("sp2r diagonal case needs 1 <= r <= n");
    if (x1.half_size() != r) throw gsp_error("x1 must lie in Sp(2r)");
    if (x1.multiplier() != 1) throw gsp_error("x1 must be symplectic");
    // x = (1, x1) in Sp(2(n-r)) x Sp(2r); at r = n the first factor is empty.
    SymplecticMatrix x =
        r == n ? x1 : embed_doubling(sp_identity(n - r), x1);
    return conjugate_pair(n, r, x, x);
}

ConjugationResult lemma22_full_diag(int n, const SymplecticMatrix& g) {
    if (g.half_size() != n) throw gsp_error("g must lie in GSp(2n)");
    return conjugate_pair(n, n, g, g);
}

SymplecticMatrix random_symplectic(int n, std::uint64_t seed, int word_length) {
    std::mt19937_64 rng(seed);
    Mat acc = Mat::identity(2 * n);
    for (int w = 0; w < word_length; ++w) {
        int kind = rand_small(rng, 0, 2);
        Mat g(2 * n, 2 * n);
        if (kind == 0) {
            g = symplectic_j(n);
        } else if (kind == 1) {
            Mat x(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    int v = rand_small(rng, -2, 2);
                    x.at(i, j) = v;
                    x.at(j, i) = v;
                }
            g = Mat::identity(2 * n);
            g.set_block(0, n, x);
        } else {
            Mat u = Mat::identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && rand_small(rng, 0, 1))
                        u.at(i, j) = rand_small(rng, -2, 2);
            // u may have det != ±1 in general; shear products stay unimodular
            Mat l = Mat::identity(n), up = Mat::identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i < j) up.at(i, j) = u.at(i, j);
                    if (i > j) l.at(i, j) = u.at(i, j);
                }
            Mat uni = l * up;
            g = Mat(2 * n, 2 * n);
            g.set_block(0, 0, uni);
            g.set_block(n, n, uni.inverse().transpose());
        }
        acc = acc * g;
    }
    return SymplecticMatrix(std::move(acc), n);
}

Mat random_gl(int m, std::mt19937_64& rng) {
    Mat l = Mat::identity(m), u = Mat::identity(m), d(m, m);
    for (int i = 0; i < m; ++i) {
        int v = rand_small(rng, 1, 3);
        d.at(i, i) = rand_small(rng, 0, 1) ? v : -v;
        for (int j = i + 1; j < m; ++j) {
            u.at(i, j) = rand_small(rng, -2, 2);
            l.at(j, i) = rand_small(rng, -2, 2);
        }
    }
    return l * d * u;
}

Mat random_n2nr(int n, int r, std::mt19937_64& rng) {
    int m = n - r;
    Mat acc = Mat::identity(2 * n);
    int steps = rand_small(rng, 2, 4);
    for (int s = 0; s < steps; ++s) {
        Mat g = Mat::identity(2 * n);
        if (rand_small(rng, 0, 1) == 0 && r > 0 && m > 0) {
            // GL-type generator [[U,0],[0,tU^{-1}]], U = [[I, a],[0, I]]
            Mat u = Mat::identity(n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < r; ++j) u.at(i, m + j) = rand_small(rng, -2, 2);
            g.set_block(0, 0, u);
            g.set_block(n, n, u.inverse().transpose());
        } else {
            // symmetric-block generator [[I, B],[0, I]], B = [[b, c],[tc, 0]]
            Mat b(n, n);
            for (int i = 0; i < m; ++i) {
                for (int j = i; j < m; ++j) {
                    int v = rand_small(rng, -2, 2);
                    b.at(i, j) = v;
                    b.at(j, i) = v;
                }
                for (int j = 0; j < r; ++j) {
                    int v = rand_small(rng, -2, 2);
                    b.at(i, m + j) = v;
                    b.at(m + j, i) = v;
                }
            }
            g.set_block(0, n, b);
        }
        acc = acc * g;
    }
    return acc;
}

SymplecticMatrix random_gsp(int n, std::uint64_t seed, int word_length,
                            const Rational& mu) {
    Mat scale = Mat::identity(2 * n);
    for (int i = 0; i < n; ++i) scale.at(i, i) = mu;
    return SymplecticMatrix(scale, n) * random_symplectic(n, seed, word_length);
}

}  // namespace gsp
