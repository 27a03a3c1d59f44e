#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frale/io.hpp"

namespace frale {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool divergent_analytic = false; // reported, not a failure by itself
    std::string details;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<ReportRow> rows; // quantity table behind the verdicts
    bool complete = true;        // false when a wall budget cut the suite short

    bool all_pass() const;
    std::string json() const; // machine-readable verdict block
    std::string csv() const;  // quantity,analytic,empirical,stderr
};

/// Knobs shared by every suite. `ensemble = 0` keeps each suite's pinned
/// default; `budget_seconds <= 0` means no budget.
struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint64_t ensemble = 0;
    double hurst = 0.0; // 0 = suite default
    double budget_seconds = 0.0;
    std::string stepfn_json; // wiener suite: extra user step function
};

SuiteResult verify_constants(const VerifyOptions& opt = {});
SuiteResult verify_isometry(const VerifyOptions& opt = {});
SuiteResult verify_covariance(const VerifyOptions& opt = {});
SuiteResult verify_qv(const VerifyOptions& opt = {});
SuiteResult verify_cumulants(const VerifyOptions& opt = {});
SuiteResult verify_charfn(const VerifyOptions& opt = {});
SuiteResult verify_divergence(const VerifyOptions& opt = {});
SuiteResult verify_zeroprob(const VerifyOptions& opt = {});
SuiteResult verify_shift_rate(const VerifyOptions& opt = {});
SuiteResult verify_wiener(const VerifyOptions& opt = {});
SuiteResult verify_scheme_equivalence(const VerifyOptions& opt = {});
SuiteResult verify_figures(const VerifyOptions& opt = {});
SuiteResult verify_property_substitutes(const VerifyOptions& opt = {});

/// Suite registry for the CLI: name -> runner.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<std::string> suite_names();

} // namespace frale
