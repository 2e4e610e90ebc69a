// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and reports its own timing
// where a budget applies.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gsp/arch.hpp"
#include "gsp/dirichlet.hpp"
#include "gsp/ktype.hpp"
#include "gsp/lfactors.hpp"
#include "gsp/oracles.hpp"
#include "gsp/quadrature.hpp"
#include "gsp/satake.hpp"
#include "gsp/symplectic.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

// ---------------------------------------------------------------- 1
// Series route vs closed route for the unramified zeta integral, random
// rational Satake tuples. When both routes are exact the tail inequality is
// checked in exact arithmetic; on the double route a fixed 1e-13 evaluation
// slack absorbs rounding, far below the 1e-6 relative gate.
Outcome crit_series_vs_closed() {
    const auto t0 = Clock::now();
    const std::vector<gsp::Rational> chi_pool = {
        gsp::Rational(1), gsp::Rational(-1), gsp::Rational(2),
        gsp::Rational(1, 2), gsp::Rational(-3, 2)};
    int checked = 0, failed = 0;
    for (int n : {1, 2})
        for (long q : {2L, 3L, 5L})
            for (gsp::Rational s : {gsp::Rational(3, 2), gsp::Rational(2)}) {
                std::mt19937_64 rng(1000003ull * n + 17ull * q +
                                    gsp::num(s).convert_to<unsigned long long>());
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<gsp::Rational> alpha;
                    for (int i = 0; i < n; ++i) {
                        long a = 1 + static_cast<long>(rng() % 6);
                        long b = 1 + static_cast<long>(rng() % 6);
                        alpha.push_back(gsp::Rational(a, b));
                    }
                    gsp::Rational chi = chi_pool[rng() % chi_pool.size()];
                    gsp::SatakeData sd(n, q, alpha, chi);
                    gsp::EvaluationPoint pt{s};
                    gsp::ZetaValue zs = gsp::unramified_zeta_series(sd, pt, 24);
                    gsp::ZetaValue zc = gsp::unramified_zeta_closed(sd, pt);
                    ++checked;
                    bool ok;
                    if (zs.exact && zc.exact) {
                        gsp::Rational diff = zs.exact_value - zc.exact_value;
                        if (diff < 0) diff = -diff;
                        ok = diff <= gsp::Rational(zs.tail_bound);
                    } else {
                        ok = std::fabs(zs.value - zc.value) <=
                             zs.tail_bound +
                                 1e-13 * std::max(1.0, std::fabs(zc.value));
                    }
                    ok = ok && std::fabs(zs.value - zc.value) <=
                                   1e-6 * std::fabs(zc.value);
                    if (!ok) ++failed;
                }
            }
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d tuples, %d failed, %.2fs (budget 10s)", checked, failed,
                  dt);
    return {failed == 0 && dt < 10.0, buf};
}

// ---------------------------------------------------------------- 2
Outcome crit_cartan_volumes() {
    int failed = 0;
    for (long q : {2L, 3L}) {
        auto vol = gsp::cartan_volume_series(1, q, 6);
        if (!(vol.coeff(0) == gsp::Rational(1))) ++failed;
        for (int e = 1; e <= 6; ++e) {
            gsp::Rational want =
                gsp::rat_pow(gsp::Rational(q), 2 * e - 1) * gsp::Rational(q + 1);
            if (!(vol.coeff(e) == want)) ++failed;
        }
    }
    bool brute = gsp::sl2_cell_count_bruteforce(2, 1) == gsp::Integer(6);
    if (!brute) ++failed;
    return {failed == 0,
            "n=1 volumes q^{2e-1}(q+1) for e<=6, q in {2,3}; lattice count 6"};
}

// ---------------------------------------------------------------- 3
Outcome crit_blattner() {
    // All strictly decreasing positive ell with odd consecutive gaps.
    std::vector<std::vector<long>> lambdas;
    std::function<void(std::vector<long>&, int)> extend =
        [&](std::vector<long>& cur, int depth) {
            if (depth > 0) lambdas.push_back(cur);
            if (depth == 4) return;
            long top = cur.empty() ? 13 : cur.back();
            for (long next = cur.empty() ? 12 : top - 1; next >= 1; --next) {
                if (!cur.empty() && (top - next) % 2 == 0) continue;
                cur.push_back(next);
                extend(cur, depth + 1);
                cur.pop_back();
            }
        };
    std::vector<long> cur;
    extend(cur, 0);

    int checked = 0, failed = 0;
    for (const auto& ell : lambdas) {
        gsp::HCParameter lam(ell);
        for (long m : {0L, 2L, 4L}) {
            std::vector<long> mv(ell.size(), ell[0] + 1 + m);
            ++checked;
            if (!(gsp::blattner_multiplicity(lam, gsp::KTypeVector(mv)) ==
                  gsp::Integer(1)))
                ++failed;
        }
    }

    // DP vs naive enumeration over a full coordinate box.
    int qchecked = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<long> mu(n, 0);
        bool done = false;
        while (!done) {
            ++qchecked;
            if (!(gsp::q_count(mu, n) == gsp::q_count_naive(mu, n))) ++failed;
            int pos = 0;
            while (pos < n) {
                if (++mu[pos] <= 10) break;
                mu[pos++] = 0;
            }
            done = pos == n;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d multiplicity-one cases, %d Q-box points, %d failed",
                  checked, qchecked, failed);
    return {failed == 0, buf};
}

// ---------------------------------------------------------------- 4
Outcome crit_dual_route() {
    int checked = 0, failed = 0;
    std::function<void(std::vector<long>&, int, int)> extend =
        [&](std::vector<long>& kv, int n, int depth) {
            if (depth == n) {
                ++checked;
                gsp::ArchContext ctx(kv);
                if (!(gsp::b_lambda_general(ctx) == gsp::b_lambda_route_a(ctx)))
                    ++failed;
                return;
            }
            long hi = depth == 0 ? 12 : kv.back();
            for (long k = hi; k > n; --k) {
                if (depth > 0 && (kv[0] - k) % 2 != 0) continue;
                kv.push_back(k);
                extend(kv, n, depth + 1);
                kv.pop_back();
            }
        };
    for (int n = 1; n <= 3; ++n) {
        std::vector<long> kv;
        extend(kv, n, 0);
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d k-vectors, %d failed (symbolic)",
                  checked, failed);
    return {failed == 0, buf};
}

// Shared n=2 weight grid for criteria 5 and 10.
std::vector<std::vector<long>> weight_grid_n2() {
    std::vector<std::vector<long>> grid;
    for (long k1 = 6; k1 <= 14; ++k1)
        for (long k2 = 6; k2 <= k1; ++k2)
            if ((k1 - k2) % 2 == 0) grid.push_back({k1, k2});
    return grid;
}

// ---------------------------------------------------------------- 5
Outcome crit_ak_values() {
    int checked = 0, failed = 0;
    for (const auto& kv : weight_grid_n2()) {
        gsp::ArchContext ctx(kv);
        gsp::AkFunction ak = gsp::a_k(ctx);
        for (long t = 0; t <= kv[1] - 2; ++t) {
            ++checked;
            try {
                if (ak.eval_exact(t) == 0) ++failed;
            } catch (const gsp::gsp_error&) {
                ++failed;  // pole inside the critical strip
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "%d values of A_k on [0, k_2-2], %d degenerate", checked,
                  failed);
    return {failed == 0, buf};
}

// ---------------------------------------------------------------- 6
Outcome crit_selberg() {
    const auto t0 = Clock::now();
    gsp::QuadratureConfig mc;
    mc.method = gsp::QuadratureConfig::Method::monte_carlo;
    mc.budget = 10000000;
    mc.seed = 20250816;
    gsp::QuadResult r2 = gsp::quad_selberg(2, 5.0, mc);
    const double want2 = 1.0 / 120.0;
    bool ok2 = std::fabs(r2.value - want2) <= 1e-4 * want2;

    gsp::QuadratureConfig ad;
    ad.method = gsp::QuadratureConfig::Method::adaptive;
    gsp::QuadResult r1 = gsp::quad_selberg(1, 4.0, ad);
    bool ok1 = std::fabs(r1.value - 0.25) <= 1e-6 * 0.25;

    const double dt = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "n=2 MC got %.8g (rel err %.2e), n=1 adaptive got %.10g, "
                  "%.2fs (budget 60s)",
                  r2.value, std::fabs(r2.value - want2) / want2, r1.value, dt);
    return {ok1 && ok2 && dt < 60.0, buf};
}

// ---------------------------------------------------------------- 7
Outcome crit_measure() {
    gsp::QuadratureConfig cfg;
    gsp::MeasureRoutes routes = gsp::measure_consistency_n1(2, cfg);
    const double want = 4.0 * 3.141592653589793238462643;
    auto ok = [&](double v) { return std::fabs(v - want) <= 1e-4 * want; };
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "classical %.8g, kak %.8g, iwasawa %.8g vs 4*pi", routes.classical,
                  routes.kak, routes.iwasawa);
    return {ok(routes.classical) && ok(routes.kak) && ok(routes.iwasawa), buf};
}

// ---------------------------------------------------------------- 8
Outcome crit_group_orders() {
    const auto t0 = Clock::now();
    struct Case {
        int n;
        long p;
        long want;
    };
    int failed = 0;
    for (Case c : {Case{1, 2, 6}, Case{1, 3, 24}, Case{2, 2, 720}}) {
        if (gsp::sp_count_bruteforce(c.n, static_cast<int>(c.p)) != c.want)
            ++failed;
        if (!(gsp::sp_order_mod(c.n, c.p, 1) == gsp::Integer(c.want))) ++failed;
    }
    const double dt = seconds_since(t0);
    char buf[120];
    std::snprintf(buf, sizeof buf, "orders 6, 24, 720, %.2fs (budget 5s)", dt);
    return {failed == 0 && dt < 5.0, buf};
}

// ---------------------------------------------------------------- 9
Outcome crit_gauss() {
    int checked = 0, failed = 0;
    for (long n = 1; n <= 50; ++n) {
        for (const auto& chi : gsp::all_characters(n)) {
            if (!chi.is_primitive()) continue;
            ++checked;
            std::complex<double> g = gsp::gauss_sum(chi);
            if (std::fabs(std::norm(g) - static_cast<double>(n)) > 1e-10)
                ++failed;
        }
    }
    gsp::DirichletCharacter chi4(4, {1});
    std::complex<double> g4 = gsp::gauss_sum(chi4);
    if (std::abs(g4 - std::complex<double>(0.0, 2.0)) > 1e-10) ++failed;
    gsp::DirichletCharacter chi5(5, {2});
    std::complex<double> g5 = gsp::gauss_sum(chi5);
    if (std::abs(g5 - std::complex<double>(std::sqrt(5.0), 0.0)) > 1e-10)
        ++failed;
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "%d primitive characters N<=50, %d failed; G(chi_4)=2i, "
                  "G(chi_5,quad)=sqrt5",
                  checked, failed);
    return {failed == 0, buf};
}

// ---------------------------------------------------------------- 10
Outcome crit_constants() {
    int checked = 0, failed = 0;
    for (const auto& kv : weight_grid_n2()) {
        gsp::ArchContext ctx(kv);
        const long bound = kv[1] - 2;
        for (long r = (bound % 2 == 0) ? 2 : 1; r <= bound; r += 2) {
            for (long n_level : {1L, 2L}) {
                std::vector<std::pair<long, int>> fact;
                if (n_level == 2) fact.push_back({2, 1});
                ++checked;
                try {
                    if (gsp::c_krnN(ctx, r, fact) == 0) ++failed;
                } catch (const gsp::gsp_error&) {
                    ++failed;  // pi-cancellation or range violation
                }
            }
        }
    }
    gsp::ArchContext ctx1010({10, 10});
    gsp::Rational want =
        gsp::Rational(270, 4896) * gsp::rat_pow(gsp::Rational(2), -12);
    if (!(gsp::c_krnN(ctx1010, 8, {}) == want)) ++failed;
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "%d constants rational and nonzero, %d failed; "
                  "c_{(10,10),8,2,1} matches",
                  checked, failed);
    return {failed == 0, buf};
}

// ---------------------------------------------------------------- 11
Outcome crit_lemma22() {
    int checked = 0, failed = 0;
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= n; ++r)
            gsp::q_matrix(n, r);  // constructor validates symplecticity

    for (int n = 1; n <= 3; ++n) {
        for (int seed = 0; seed < 100; ++seed) {
            // (i): Levi pairs in GL(n-r) times unipotents, r < n.
            for (int r = 0; r < n; ++r) {
                std::mt19937_64 rng(7000u + 97u * n + 17u * r + seed);
                gsp::Mat g1 = gsp::random_gl(n - r, rng);
                gsp::Mat g2 = gsp::random_gl(n - r, rng);
                gsp::Mat n1 = gsp::random_n2nr(n, r, rng);
                gsp::Mat n2 = gsp::random_n2nr(n, r, rng);
                ++checked;
                try {
                    auto res = gsp::lemma22_levi_pair(n, r, g1, g2, n1, n2);
                    if (!(res.d == g1.det() * g2.det())) ++failed;
                } catch (const gsp::gsp_error&) {
                    ++failed;
                }
            }
            // (ii): diagonal Sp(2r) pairs, 1 <= r <= n.
            for (int r = 1; r <= n; ++r) {
                gsp::SymplecticMatrix x1 =
                    gsp::random_symplectic(r, 31000u + 59u * n + seed, 6);
                ++checked;
                try {
                    auto res = gsp::lemma22_sp_diag(n, r, x1);
                    if (!(res.d == 1)) ++failed;
                } catch (const gsp::gsp_error&) {
                    ++failed;
                }
            }
            // (iii): full diagonal GSp(2n) pairs with nontrivial multiplier.
            gsp::SymplecticMatrix g = gsp::random_gsp(
                n, 61000u + 13u * n + seed, 5, gsp::Rational(seed % 3 + 1));
            ++checked;
            try {
                auto res = gsp::lemma22_full_diag(n, g);
                if (!(res.d == 1)) ++failed;
            } catch (const gsp::gsp_error&) {
                ++failed;
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d conjugations, %d failed", checked,
                  failed);
    return {failed == 0, buf};
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"series vs closed zeta identity", crit_series_vs_closed},
        {"Cartan cell volumes", crit_cartan_volumes},
        {"scalar K-type multiplicity one", crit_blattner},
        {"dual-route archimedean identity", crit_dual_route},
        {"A_k finite nonzero on critical strip", crit_ak_values},
        {"Selberg integral oracle", crit_selberg},
        {"measure constant alpha_1 = 4 pi", crit_measure},
        {"symplectic group orders", crit_group_orders},
        {"Gauss sum magnitudes", crit_gauss},
        {"critical-value constants rational", crit_constants},
        {"parabolic conjugation d-values", crit_lemma22},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("[%s] criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL",
                    i + 1, criteria[i].label, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
