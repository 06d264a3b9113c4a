#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fracwright/errors.hpp>
#include <fracwright/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>

using namespace fw;

TEST_CASE("evaluate") {
    CHECK(evaluate(MetricKind::error, 1e-5, 1e-4));
    CHECK(!evaluate(MetricKind::error, 1e-3, 1e-4));
    CHECK(evaluate(MetricKind::p_value, 0.2, 0.01));
    CHECK(!evaluate(MetricKind::p_value, 0.001, 0.01));
    CHECK(!evaluate(MetricKind::error, std::nan(""), 1));
    CHECK(!evaluate(MetricKind::p_value, std::nan(""), 0.01));
}

TEST_CASE("profiles and suite names") {
    CHECK(parse_profile("strict") == Profile::strict);
    CHECK(parse_profile("fast") == Profile::fast);
    CHECK_THROWS_AS(parse_profile("quick"), UsageError);
    CHECK_THROWS_AS(run_suite("bogus", {}), UsageError);
}

TEST_CASE("residual suite passes and serializes") {
    VerifyConfig cfg;
    cfg.threads = 1;
    auto rep = run_residual_suite(cfg);
    CHECK(rep.suite == "residuals");
    CHECK(rep.results.size() == 4);
    CHECK(rep.all_passed());
    CHECK(std::is_sorted(rep.results.begin(), rep.results.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));
    auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["suite"] == "residuals");
    CHECK(j["seed"] == 42);
    CHECK(j["results"].size() == 4);
    CHECK(j.contains("wall_time_s"));
    for (const auto& r : j["results"]) {
        CHECK(r.contains("name"));
        CHECK(r.contains("paper_anchor"));
        CHECK(r["metric"].get<double>() <= r["threshold"].get<double>());
        CHECK(r["passed"] == true);
    }
    CHECK(nlohmann::json::parse(to_json(rep, false))["wall_time_s"] == 0.0);
}

TEST_CASE("statistical suite is deterministic for a seed and thread count independent") {
    VerifyConfig cfg;
    cfg.profile = Profile::fast;
    cfg.n_samples = 20000;
    cfg.threads = 1;
    auto a = to_json(run_statistical_suite(cfg), false);
    cfg.threads = 3;
    auto b = to_json(run_statistical_suite(cfg), false);
    CHECK(a == b);
    cfg.seed = 43;
    CHECK(to_json(run_statistical_suite(cfg), false) != a);
}

TEST_CASE("statistical suite passes at strict sample size") {
    VerifyConfig cfg;
    cfg.threads = 1;
    auto rep = run_statistical_suite(cfg);
    for (const auto& r : rep.results) {
        INFO(r.name << ": " << r.detail << " metric " << r.metric << " threshold " << r.threshold);
        CHECK(r.passed);
    }
    CHECK(rep.results.size() >= 30);
}
