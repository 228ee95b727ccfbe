#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/report.hpp"

namespace ybe {

inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr const char* kToleranceEnv = "YBE_TOLERANCE";
inline constexpr const char* kToolVersion = "ybecheck 0.1.0";

struct CaseSpec {
    IdentityKind kind = IdentityKind::hyperbolic_3_2;
    std::optional<int> samples;        // overrides the campaign default
    std::optional<double> tolerance;   // overrides everything else
    std::optional<IdentityCase> fixed; // a single explicit case instead of samples
};

struct LimitSpec {
    std::string id;
    LimitExperiment experiment;
    bool expect_converge = true;  // false for negative controls
};

struct CampaignConfig {
    std::uint64_t seed = 0;
    int samples = 10;
    std::optional<double> tolerance;
    int threads = 0;  // 0: hardware concurrency
    std::string output;
    std::string csv;
    std::vector<CaseSpec> cases;
    std::vector<LimitSpec> limits;
    json echo;  // the parsed document as given
};

// ConfigError with pointer and line for anything malformed, unknown or
// inadmissible (for instance a fixed case that breaks its balancing condition).
CampaignConfig parse_config(const std::string& text);
CampaignConfig load_config(const std::string& path);

// config value, else the environment variable, else 1e-6.
// ConfigError if the variable is set but not a positive number.
double resolve_tolerance(std::optional<double> from_config, const char* env_value);

struct LimitOutcome {
    std::string id;
    LimitExperiment experiment;
    bool expect_converge = true;
    ConvergenceTable table;
    bool pass = false;
    std::string error;
};

struct CampaignResult {
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
    json config;
    std::vector<VerificationReport> reports;
    std::vector<LimitOutcome> limits;
    int passed = 0;
    int failed = 0;
    // wall clock, kept apart from the deterministic fields
    double seconds_total = 0.0;
    std::vector<double> seconds_per_task;

    bool all_pass() const { return failed == 0; }
};

// Runs every case on a worker pool. Per-case errors are recorded as failed
// reports with an "error: ..." note, never thrown.
CampaignResult run_campaign(const CampaignConfig& cfg, double tolerance);

json to_json(const CampaignResult& r);
CampaignResult result_from_json(const json& j);
std::string write_result(const CampaignResult& r);  // pretty JSON text
std::string result_csv(const CampaignResult& r);

}  // namespace ybe
