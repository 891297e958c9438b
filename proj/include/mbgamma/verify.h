#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbgamma/bm_gamma.h"
#include "mbgamma/zeta.h"

namespace mbgamma::verify {

/// Outcome of one invariant check. `achieved` is the worst error seen (or the fitted slope for
/// decay checks); `bound` is the tolerance it was held to.
struct CheckResult {
    std::string suite;
    std::string property;
    double achieved = 0.0;
    double bound = 0.0;
    bool passed = false;
    std::string detail;
};

struct Options {
    /// Tolerance for the continuation and contour identities. Bernoulli-algebra checks keep
    /// their own tighter bounds.
    double tol = 1e-8;
    std::uint64_t seed = 0x5eed2024;
    ContourConfig contour{};
    ContinuationConfig continuation{};
};

/// bernoulli, zeta, gamma, ladder, stirling
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(std::string_view name, const Options& options = {});

/// "PASS  suite/property  achieved=...  bound=...  detail"
std::string format(const CheckResult& result);

}  // namespace mbgamma::verify
