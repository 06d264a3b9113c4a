#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fracwright/errors.hpp>
#include <fracwright/laws.hpp>
#include <fracwright/specfun.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace fw;

namespace {
double rel(double got, double want) { return got == want ? 0.0 : std::fabs(got - want) / std::fabs(want); }

template <class F>
double quad(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 8, 1e-12);
}
}  // namespace

TEST_CASE("density goldens") {
    CHECK(rel(density_l(0.5, 1, 1), 0.4393912894677224) < 1e-10);
    CHECK(rel(density_h(0.5, 1, 1), 0.2196956) < 1e-6);
    CHECK(rel(density_h(0.5, 4, 2), 0.0549239) < 1e-5);
    CHECK(rel(density_lamperti(0.5, 1, 1), 1 / (2 * std::numbers::pi)) < 1e-14);
    CHECK(rel(density_lamperti(0.5, 4, 1), 1 / (10 * std::numbers::pi)) < 1e-14);
    Direction a({1.0});
    std::vector<double> zero{0.0};
    CHECK(rel(solution_g(0.5, a, zero, 1), 0.408024469549131491) < 1e-10);
}

TEST_CASE("l_1/2 is the half-normal density") {
    for (double t : {0.5, 1.0, 2.0})
        for (double x = 0; x <= 5; x += 0.25) {
            double want = 2 * std::exp(-x * x / (4 * t)) / std::sqrt(4 * std::numbers::pi * t);
            CHECK(std::fabs(density_l(0.5, x, t) - want) < 1e-12);
        }
}

TEST_CASE("h_1/2 is the Levy density") {
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        double want = 1 / (2 * std::sqrt(std::numbers::pi)) * std::pow(x, -1.5) * std::exp(-1 / (4 * x));
        CHECK(rel(density_h(0.5, x, 1), want) < 1e-9);
    }
}

TEST_CASE("property: self-similarity of l and h") {
    for (double b : {0.3, 0.6, 0.85})
        for (double c : {0.5, 2.0, 3.0})
            for (double x : {0.2, 1.0, 2.5}) {
                // l(x, c t) = c^{-b} l(x c^{-b}, t), h(x, c t) = c^{-1/b} h(x c^{-1/b}, t)
                CHECK(rel(density_l(b, x, c), std::pow(c, -b) * density_l(b, x * std::pow(c, -b), 1)) < 1e-10);
                CHECK(rel(density_h(b, x, c), std::pow(c, -1 / b) * density_h(b, x * std::pow(c, -1 / b), 1)) < 1e-9);
            }
}

TEST_CASE("property: Laplace transform of l is the Mittag-Leffler function") {
    for (double b : {0.4, 0.7})
        for (double s : {0.5, 1.0, 2.0}) {
            double lt = quad([&](double x) { return std::exp(-s * x) * density_l(b, x, 1); }, 0, 60);
            CHECK(rel(lt, mittag_leffler({b, 1}, -s)) < 1e-8);
        }
}

TEST_CASE("property: Lamperti CDF is the integral of the density, increasing to 1") {
    for (double b : {0.3, 0.5, 0.8}) {
        double prev = 0;
        for (double x : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
            double c = cdf_lamperti(b, x, 1);
            CHECK(c > prev);
            CHECK(c < 1);
            CHECK(std::fabs(c - cdf_lamperti(b, 0.05, 1) - quad([&](double y) { return density_lamperti(b, y, 1); }, 0.05, x)) <
                  1e-9);
            prev = c;
        }
        CHECK(cdf_lamperti(b, 1, 1) == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("U_{b,b} equals the Lamperti law") {
    for (double b : {0.3, 0.5, 0.7})
        for (double x : {0.1, 1.0, 5.0}) CHECK(std::fabs(density_U(b, b, x, 1) - density_lamperti(b, x, 1)) < 1e-7);
}

TEST_CASE("g closed form agrees with the Gaussian mixture and is even") {
    Direction a({1.0});
    for (double b : {0.4, 0.9})
        for (double y : {0.0, 0.6, 2.0}) {
            std::vector<double> p{y}, m{-y};
            double g = solution_g(b, a, p, 1.3);
            CHECK(g == doctest::Approx(solution_g(b, a, m, 1.3)).epsilon(1e-15));
            CHECK(std::fabs(g - solution_g_subordinated(b, a, p, 1.3)) < 1e-7);
        }
}

TEST_CASE("solution_v with nu = -beta reduces to l") {
    Direction a({1.0});
    for (double x : {0.2, 1.0, 3.0}) {
        std::vector<double> p{x};
        CHECK(rel(solution_v(0.6, -0.6, a, p, 1.7), density_l(0.6, x, 1.7)) < 1e-12);
    }
}

TEST_CASE("U^1 is l on the projected coordinate") {
    Direction a({0.6, 0.8});
    std::vector<double> x{1.0, 0.5};
    CHECK(rel(solution_Un(0.5, 1, a, x, 1.2), density_l(0.5, a.dot(x), 1.2)) < 1e-12);
}

TEST_CASE("fractional Poisson pmf") {
    double sum = 0;
    for (int k = 0; k < 200; ++k) sum += pmf_frac_poisson(0.5, 1.0, k, 1.0);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rel(pmf_frac_poisson(0.5, 1.0, 0, 1.0), 0.427583576155807) < 1e-10);
    for (int k = 0; k < 8; ++k) {
        double want = std::exp(-2.0) * std::pow(2.0, k) / std::tgamma(k + 1.0);
        CHECK(rel(pmf_frac_poisson(1.0, 2.0, k, 1.0), want) < 1e-10);
    }
}

TEST_CASE("characteristic function limits") {
    Direction a({0.6, 0.8});
    std::vector<double> zero{0.0, 0.0}, xi{0.3, -0.2};
    FracParams p{0.5, 0.8, 0.7};
    CHECK(std::abs(charfn_advdiff(p, a, zero, 1) - 1.0) < 1e-15);
    CHECK(std::abs(charfn_advdiff(p, a, xi, 1)) <= 1.0);
    // theta = alpha = beta = 1: Gaussian with drift a t
    FracParams c{1, 1, 1};
    std::complex<double> want = std::exp(std::complex<double>(-2 * 0.13, 2 * a.dot(xi)));
    CHECK(std::abs(charfn_advdiff(c, a, xi, 2) - want) < 1e-12);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(density_l(0, 1, 1), DomainError);
    CHECK_THROWS_AS(density_l(0.5, -1, 1), DomainError);
    CHECK_THROWS_AS(density_l(0.5, 1, 0), DomainError);
    CHECK_THROWS_AS(density_h(0.5, 0, 1), DomainError);
    CHECK_THROWS_AS(density_lamperti(0.5, 0, 1), DomainError);
    CHECK_THROWS_AS(density_U(0.5, 0.5, 0, 1), DomainError);
    Direction mixed({0.6, -0.8});
    std::vector<double> x{1, 1};
    CHECK_THROWS_AS(density_p_multivariate(0.5, mixed, x, 1), DomainError);
    CHECK_THROWS_AS(pmf_frac_poisson(0.5, 0, 1, 1), DomainError);
    CHECK_THROWS_AS(Direction({1.0, 1.0}), DomainError);
}
