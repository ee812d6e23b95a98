#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quotdt/gen_functions.hpp"

namespace quotdt {

struct Discrepancy {
    long degree = -1;
    std::string expected;
    std::string actual;
};

struct CaseOutcome {
    std::string identity;
    nlohmann::json params;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseOutcome> cases;

    bool all_pass() const;
    /// Deterministic JSON (sorted keys, decimal-string coefficients). Timing
    /// data is emitted only on request so that identical invocations stay
    /// byte-identical.
    nlohmann::json to_json(bool include_timings = false) const;
};

using PowerFn = std::function<MotiveSeries(const MotiveSeries&, const TateClass&)>;

struct VerifyOptions {
    long order = 12;
    std::vector<unsigned> ranks = {1, 2, 3, 4};
    int threads = 0;
    std::string only_identity;   // run only cases whose identity matches
    unsigned seed = 0x5eed;
    int instances = 100;         // randomized instances per axiom case
    PowerFn power_impl;          // injectable power structure; default power()
};

/// Suites: axioms | identities | euler | effectivity | oracle | all.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();

/// Regression-pinned oracle counts for n >= 2 (no closed form available;
/// values frozen from exhaustive enumeration).
struct PinnedCount {
    unsigned r;
    int n;
    unsigned q;
    const char* count_quot;
    const char* count_ncquot;
};
const std::vector<PinnedCount>& pinned_oracle_counts();

} // namespace quotdt
