#include "gsp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace gsp {

void validate(const QuadratureConfig& cfg) {
    if (cfg.budget <= 0) throw gsp_error("quadrature budget must be positive");
    if (cfg.cutoff <= 1.0) throw gsp_error("cutoff R must exceed 1");
    if (cfg.tolerance <= 0) throw gsp_error("tolerance must be positive");
    if (cfg.shards < 1) throw gsp_error("shard count must be positive");
}

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kTMax = 6.8;

// One tanh-sinh level: nodes t = j*h, abscissa u = 1/(1+e^{-2y}) with
// y = (pi/2) sinh t; 1-u = 1/(1+e^{2y}).
double ts_level_sum(const std::function<double(double, double)>& f, double h,
                    bool odd_only) {
    double acc = 0.0;
    long j = odd_only ? 1 : 0;
    const long step = odd_only ? 2 : 1;
    for (;; j += step) {
        const double t = h * static_cast<double>(j);
        if (t > kTMax) break;
        const double y = kHalfPi * std::sinh(t);
        const double sech = 2.0 / (std::exp(y) + std::exp(-y));
        // du/dt = (pi/2) cosh(t) * sech(y)^2 / 2 since u(1-u) = sech(y)^2 / 4.
        const double w = 0.5 * kHalfPi * std::cosh(t) * sech * sech;
        if (w < 1e-300) break;
        const double u = 1.0 / (1.0 + std::exp(-2.0 * y));
        const double um1 = 1.0 / (1.0 + std::exp(2.0 * y));
        if (um1 == 0.0 || u == 0.0) break;
        double s = f(u, um1);
        if (j != 0) s += f(um1, u);  // the mirror node t -> -t
        acc += w * s;
    }
    return acc;
}

}  // namespace

QuadResult integrate_unit(const std::function<double(double, double)>& f,
                          double tol, int max_level) {
    double h = 1.0;
    double sum = ts_level_sum(f, h, false);
    double value = h * sum;
    double err = std::fabs(value);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += ts_level_sum(f, h, true);
        const double next = h * sum;
        err = std::fabs(next - value);
        value = next;
        if (err <= tol * std::max(1.0, std::fabs(value)) && level >= 3) break;
    }
    return {value, err};
}

QuadResult integrate_unit2(
    const std::function<double(double, double, double, double)>& f,
    double tol, int max_level) {
    double inner_err = 0.0;
    auto outer = [&](double u, double um1) {
        QuadResult inner = integrate_unit(
            [&](double v, double vm1) { return f(u, um1, v, vm1); },
            tol * 0.1, max_level);
        inner_err = std::max(inner_err, inner.error);
        return inner.value;
    };
    QuadResult out = integrate_unit(outer, tol, max_level);
    return {out.value, out.error + inner_err};
}

double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

namespace {

unsigned long long splitmix64(unsigned long long x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

QuadResult mc_stratified_square(const std::function<double(double, double)>& f,
                                const QuadratureConfig& cfg) {
    validate(cfg);
    long g = static_cast<long>(std::sqrt(static_cast<double>(cfg.budget) / 64.0));
    g = std::clamp(g, 4L, 512L);
    const long per_cell = std::max(2L, cfg.budget / (g * g));
    const int shards = std::min<long>(cfg.shards, g);

    // Per-shard sums of cell means and of squared deviations, reduced in
    // shard order afterwards.
    std::vector<double> mean_part(static_cast<std::size_t>(shards), 0.0);
    std::vector<double> var_part(static_cast<std::size_t>(shards), 0.0);

    auto run_shard = [&](int sh) {
        const long row0 = g * sh / shards;
        const long row1 = g * (sh + 1) / shards;
        std::mt19937_64 rng(splitmix64(cfg.seed ^ (0x51ed1ull * (sh + 1))));
        double mean_acc = 0.0;
        double var_acc = 0.0;
        std::vector<double> cell(static_cast<std::size_t>(per_cell));
        for (long gy = row0; gy < row1; ++gy) {
            for (long gx = 0; gx < g; ++gx) {
                double s = 0.0;
                for (long i = 0; i < per_cell; ++i) {
                    const double u = (static_cast<double>(gx) + uniform01(rng)) / g;
                    const double v = (static_cast<double>(gy) + uniform01(rng)) / g;
                    cell[static_cast<std::size_t>(i)] = f(u, v);
                    s += cell[static_cast<std::size_t>(i)];
                }
                const double m = s / static_cast<double>(per_cell);
                mean_acc += m;
                double sq = 0.0;
                for (long i = 0; i < per_cell; ++i) {
                    const double d = cell[static_cast<std::size_t>(i)] - m;
                    sq += d * d;
                }
                var_acc += sq / (static_cast<double>(per_cell) - 1.0) /
                           static_cast<double>(per_cell);
            }
        }
        mean_part[static_cast<std::size_t>(sh)] = mean_acc;
        var_part[static_cast<std::size_t>(sh)] = var_acc;
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int sh = 0; sh < shards; ++sh) pool.emplace_back(run_shard, sh);
    for (auto& t : pool) t.join();

    double mean = 0.0, var = 0.0;
    for (int sh = 0; sh < shards; ++sh) {
        mean += mean_part[static_cast<std::size_t>(sh)];
        var += var_part[static_cast<std::size_t>(sh)];
    }
    const double cells = static_cast<double>(g) * static_cast<double>(g);
    return {mean / cells, 3.0 * std::sqrt(var) / cells};
}

}  // namespace gsp
