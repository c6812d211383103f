#pragma once

#include <functional>
#include <string>

#include "permucover/json_io.hpp"

namespace permucover {

// Exit-code contract, stable for CI.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,          // unexpected error
    kExitVerifyFailed = 2,     // a verification check did not hold
    kExitResourceLimit = 3,
    kExitInputError = 4,
};

struct Limits {
    int max_n_vertices = kDefaultMaxN; // n! vertices are materialized
    int max_n_exhaustive = 5;
    double timeout_secs = 600;
};

struct AnalysisConfig {
    std::vector<Rat> generators;
    double tol = kDefaultValueTol;
    std::uint64_t seed = kDefaultSeed;
    Limits limits;
    double radius_scale = 2.0;
    double step_div = 16.0;
    double max_step_div = 8.0;
    int threads = 0;
    bool progress = false;
};

struct FullReport {
    Json sym;
    Json criterion;
    Json monodromy; // report, or {"skipped": reason}
    Json covers;    // report, or {"skipped": reason}
    std::string verdict;
    bool all_passed = false;
    Json to_json() const;
};

// Full pipeline: build -> criterion -> (monodromy when the exact criterion
// holds) -> (cover enumeration and certified minimum when n is within the
// exhaustive limit). Stages degrade to a skip reason instead of erroring
// when the theory does not apply.
FullReport cmd_analyze(const AnalysisConfig& config);

// Exact cover verification; ok means covered with H_A absent.
struct VerifyOutcome {
    CoverReport report;
    bool ok = false;
};
VerifyOutcome cmd_verify_cover(const AnalysisConfig& config, const CoverFile& file);

// Named self-checks for the golden subcommand: each runs and reports
// pass/fail. `full` adds the long n=5 exhaustive runs.
struct GoldenCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};
std::vector<GoldenCheck> run_golden(bool full, const AnalysisConfig& config);

} // namespace permucover
