#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fracwright/errors.hpp>
#include <fracwright/fracops.hpp>
#include <fracwright/specfun.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace fw;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST_CASE("Caputo derivative of powers") {
    // D^b t^p = Gamma(p+1)/Gamma(p+1-b) t^{p-b}
    for (double b : {0.3, 0.5, 0.8})
        for (double p : {1.0, 1.5, 2.0}) {
            auto f = [p](double s) { return std::pow(s, p); };
            auto df = [p](double s) { return p * std::pow(s, p - 1); };
            double want = std::tgamma(p + 1) * rgamma(p + 1 - b) * std::pow(1.3, p - b);
            CHECK(rel(caputo_derivative({b}, f, 1.3, df), want) < 1e-8);
            CHECK(rel(caputo_derivative({b}, f, 1.3), want) < 1e-6);
        }
}

TEST_CASE("Caputo derivative of constants vanishes, RL does not") {
    auto one = [](double) { return 1.0; };
    CHECK(std::fabs(caputo_derivative({0.4}, one, 2.0)) < 1e-12);
    CHECK(rel(rl_derivative({0.4}, one, 2.0), std::pow(2.0, -0.4) * rgamma(0.6)) < 1e-12);
}

TEST_CASE("property: Mittag-Leffler relaxation is a Caputo eigenfunction") {
    for (double b : {0.4, 0.7})
        for (double t : {0.5, 1.5}) {
            auto f = [b](double s) { return mittag_leffler({b, 1}, -std::pow(s, b)); };
            CHECK(std::fabs(caputo_derivative({b}, f, t) + f(t)) < 1e-5);
        }
}

TEST_CASE("order one is the ordinary derivative") {
    auto f = [](double s) { return std::sin(s); };
    CHECK(std::fabs(caputo_derivative({1.0}, f, 0.7) - std::cos(0.7)) < 1e-8);
    CHECK(std::fabs(caputo_derivative({1.0}, f, 0.7, [](double s) { return std::cos(s); }) - std::cos(0.7)) < 1e-15);
}

TEST_CASE("property: exponentials are eigenfunctions of the directional derivative") {
    Direction a({0.6, 0.8});
    for (double al : {0.25, 0.5, 0.75})
        for (double mu : {0.5, 2.0}) {
            auto f = [&](std::span<const double> x) { return std::exp(mu * a.dot(x)); };
            std::vector<double> x{0.3, -0.1};
            double e = std::exp(mu * a.dot(x));
            CHECK(std::fabs(frac_dir_derivative({al, a}, f, x) / e - std::pow(mu, al)) < 1e-4);
        }
}

TEST_CASE("directional derivative of order near one approaches a.grad") {
    Direction a({1.0});
    auto f = [](std::span<const double> x) { return std::exp(x[0]); };
    std::vector<double> x{0.0};
    CHECK(std::fabs(frac_dir_derivative({0.999, a}, f, x) - 1.0) < 1e-2);
}

TEST_CASE("slowly decaying fields raise TailError") {
    Direction a({1.0});
    auto f = [](std::span<const double> x) { return x[0] < 0 ? std::sqrt(-x[0]) : 0.0; };
    std::vector<double> x{0.0};
    CHECK_THROWS_AS(frac_dir_derivative({0.3, a, 10.0}, f, x), TailError);
}

TEST_CASE("symbols") {
    Direction a({1.0});
    std::vector<double> xi{2.0};
    auto s = dir_symbol(0.5, a, xi);
    CHECK(std::abs(s - std::sqrt(2.0) * std::exp(std::complex<double>(0, -std::numbers::pi / 4))) < 1e-14);
    std::vector<double> v{3.0, 4.0};
    CHECK(laplacian_symbol(0.5, v) == doctest::Approx(5.0));
    CHECK(laplacian_symbol(1.0, v) == doctest::Approx(25.0));
    CHECK(homogeneous_plus(0.5, -1) == 0);
    CHECK(rel(homogeneous_plus(0.5, 4), 2 * rgamma(1.5)) < 1e-14);
}

TEST_CASE("Laplace transform") {
    // L[t^nu_+ / Gamma(1+nu)](s) = s^{-1-nu}
    for (double nu : {-0.5, 0.0, 0.7}) {
        double got = laplace_transform([nu](double t) { return homogeneous_plus(nu, t); }, 2.0);
        CHECK(rel(got, std::pow(2.0, -1 - nu)) < 1e-8);
    }
    CHECK(rel(laplace_transform([](double) { return 1.0; }, 1.0, {1, 2}), std::exp(-1.0) - std::exp(-2.0)) < 1e-12);
}

TEST_CASE("domain errors") {
    auto f = [](double s) { return s; };
    CHECK_THROWS_AS(caputo_derivative({0.0}, f, 1), DomainError);
    CHECK_THROWS_AS(caputo_derivative({1.2}, f, 1), DomainError);
    CHECK_THROWS_AS(caputo_derivative({0.5, 16}, f, 1), DomainError);
    CHECK_THROWS_AS(caputo_derivative({0.5}, f, 0), DomainError);
    CHECK_THROWS_AS(rl_derivative({0.5}, [](double s) { return 1 / s; }, 1), DomainError);
    CHECK_THROWS_AS(homogeneous_plus(-1, 1), DomainError);
}
