#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fw {

enum class Profile { strict, fast };
enum class MetricKind { error, p_value };

Profile parse_profile(const std::string& name);  // UsageError on anything else

struct CheckResult {
    std::string name;
    std::string paper_anchor;
    double metric = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string detail;
    MetricKind kind = MetricKind::error;
};

// passed <=> metric <= threshold for errors, metric >= threshold for p-values
bool evaluate(MetricKind kind, double metric, double threshold);

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;  // sorted by name
    double wall_time_s = 0.0;

    bool all_passed() const;
};

struct VerifyConfig {
    Profile profile = Profile::strict;
    std::uint64_t seed = 42;
    std::size_t n_samples = 0;  // 0: 10^5 under strict, 10^4 under fast
    unsigned workers = 4;       // sampler streams
    unsigned threads = 0;       // concurrent checks, 0: hardware concurrency
};

// quadrature and closed-form identities of the laws, special functions and operators
VerificationReport run_identity_suite(const VerifyConfig& cfg);
// sampler laws; each failing check is retried up to twice on derived seeds
VerificationReport run_statistical_suite(const VerifyConfig& cfg);
// Caputo residuals of the Fourier/Laplace-side solutions
VerificationReport run_residual_suite(const VerifyConfig& cfg);
// identities, statistics, residuals or all; UsageError otherwise
VerificationReport run_suite(const std::string& suite, const VerifyConfig& cfg);

// {suite, seed, results:[{name, paper_anchor, metric, threshold, passed, detail}], wall_time_s}
std::string to_json(const VerificationReport& report, bool with_wall_time = true);

}  // namespace fw
