#pragma once

#include <string>
#include <vector>

namespace gsp {

struct CheckResult {
    std::string name;
    bool pass;
    double got;
    double want;
    double tolerance;  // absolute, after scaling
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// suite: all | selberg | beta | kak | measure | neretin | exact.
// tol_scale multiplies every numeric tolerance; 0 forces the float checks
// to fail, exercising the nonzero exit path.
VerifyReport run_verify(const std::string& suite, unsigned long long seed,
                        double tol_scale);

}  // namespace gsp
