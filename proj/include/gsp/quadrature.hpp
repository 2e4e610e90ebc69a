#pragma once

#include <functional>
#include <random>

#include "gsp/rational.hpp"

namespace gsp {

struct QuadratureConfig {
    enum class Method { adaptive, tensor, monte_carlo };

    Method method = Method::adaptive;
    long budget = 1000000;           // Monte Carlo samples
    unsigned long long seed = 1;
    double cutoff = 40.0;            // finite stand-in for an infinite limit
    double tolerance = 1e-9;
    int shards = 8;
};

void validate(const QuadratureConfig& cfg);

struct QuadResult {
    double value;
    double error;  // refinement difference, or 3 sigma for Monte Carlo
};

// tanh-sinh rule on (0,1). The integrand receives u and 1-u separately,
// both formed without cancellation, so endpoint singularities on either
// side keep full precision.
QuadResult integrate_unit(const std::function<double(double, double)>& f,
                          double tol, int max_level = 11);

// Nested tanh-sinh on (0,1)^2; arguments are (u, 1-u, v, 1-v).
QuadResult integrate_unit2(
    const std::function<double(double, double, double, double)>& f,
    double tol, int max_level = 8);

// 53-bit uniform in [0,1).
double uniform01(std::mt19937_64& g);

// Stratified Monte Carlo over (0,1)^2 on a G x G grid sized from the
// budget, sharded by row blocks with per-shard derived seeds and a fixed
// reduction order, so a fixed seed gives a bit-identical estimate.
QuadResult mc_stratified_square(const std::function<double(double, double)>& f,
                                const QuadratureConfig& cfg);

}  // namespace gsp
