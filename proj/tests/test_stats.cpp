#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fracwright/philox.hpp>
#include <fracwright/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace fw;

TEST_CASE("Kolmogorov survival function") {
    CHECK(kolmogorov_q(0) == doctest::Approx(1.0));
    // tabulated quantiles of the Kolmogorov distribution
    CHECK(kolmogorov_q(1.3580986393225505) == doctest::Approx(0.05).epsilon(1e-6));
    CHECK(kolmogorov_q(1.6276236115189293) == doctest::Approx(0.01).epsilon(1e-6));
    CHECK(kolmogorov_q(0.5) == doctest::Approx(0.9639452436648751).epsilon(1e-9));
    double prev = 1;
    for (double l = 0.05; l < 3; l += 0.05) {
        double q = kolmogorov_q(l);
        CHECK(q <= prev);
        prev = q;
    }
}

TEST_CASE("KS on uniforms and on a shifted law") {
    PhiloxEngine g(3, 0, 0);
    std::vector<double> u(20000);
    for (double& v : u) v = g.uniform();
    auto ok = ks_test(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(ok.p_value > 1e-3);
    CHECK(ok.statistic < 0.02);
    auto bad = ks_test(u, [](double x) { return std::clamp(x * 1.05, 0.0, 1.0); });
    CHECK(bad.p_value < 1e-6);
    std::vector<double> w(20000);
    for (double& v : w) v = g.uniform();
    CHECK(ks_two_sample(u, w).p_value > 1e-3);
    for (double& v : w) v = v * v;
    CHECK(ks_two_sample(u, w).p_value < 1e-6);
}

TEST_CASE("KS statistic on a tiny sample") {
    auto r = ks_test({0.5, 0.1, 0.9}, [](double x) { return x; });
    // D+ = 1/3 - 0.1 and D- = 0.9 - 2/3 tie
    CHECK(r.statistic == doctest::Approx(0.7 / 3));
}

TEST_CASE("chi-square") {
    std::vector<double> obs{30, 30, 40}, p{0.3, 0.3, 0.4};
    auto r = chi_square(obs, p);
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.df == 2);
    CHECK(r.p_value == doctest::Approx(1.0));
    std::vector<double> o2{20, 30, 50};
    auto s = chi_square(o2, p);
    // (10^2/30 + 0 + 10^2/40) = 5.8333, p = exp(-x/2) for two degrees of freedom
    CHECK(s.statistic == doctest::Approx(35.0 / 6));
    CHECK(s.p_value == doctest::Approx(std::exp(-35.0 / 12)));
}

TEST_CASE("mean and characteristic function estimates") {
    std::vector<double> x{1, 2, 3, 4};
    auto m = mean_estimate(x);
    CHECK(m.mean == doctest::Approx(2.5));
    CHECK(m.se == doctest::Approx(std::sqrt(5.0 / 3 / 4)));
    std::vector<double> rows{0, 0, std::numbers::pi, 0};
    std::vector<double> xi{1, 5};
    auto c = empirical_charfn(rows, 2, xi);
    CHECK(std::abs(c.value) < 1e-15);
    CHECK(c.se > 0);
}

TEST_CASE("CdfTable reproduces a closed CDF") {
    CdfTable t([](double x) { return std::exp(-x); }, 0, 30, 601);
    CHECK(t.total() == doctest::Approx(1 - std::exp(-30.0)).epsilon(1e-12));
    for (double x : {0.0, 0.013, 0.7, 2.5, 10.0, 29.9}) CHECK(std::fabs(t(x) - (1 - std::exp(-x))) < 1e-8);
    CHECK(t(-1) == 0);
    CHECK(t(40) == doctest::Approx(t.total()));
}
