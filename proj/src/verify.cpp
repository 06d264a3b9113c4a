#include "fracwright/verify.hpp"

#include "fracwright/errors.hpp"
#include "fracwright/fracops.hpp"
#include "fracwright/laws.hpp"
#include "fracwright/montecarlo.hpp"
#include "fracwright/specfun.hpp"
#include "fracwright/stats.hpp"
#include "quad.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <thread>

namespace fw {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct Outcome {
    double metric = 0.0;
    std::string detail;
};

struct Check {
    std::string name;
    std::string anchor;
    MetricKind kind = MetricKind::error;
    double threshold = 0.0;
    std::function<Outcome(std::uint64_t)> run;
    bool statistical = false;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// seed of one statistical check: base seed, check name and attempt number
std::uint64_t derive_seed(std::uint64_t seed, const std::string& name, int attempt) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ull;
    return splitmix(seed ^ splitmix(h + std::uint64_t(attempt)));
}

double integrate(const std::function<double(double)>& f, std::vector<double> pts, double tol) {
    detail::QuadResult r;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) r += detail::gk(f, pts[i], pts[i + 1], tol, 12);
    return r.value;
}

// a.x beyond which W_{-b,rho}(-a.x) is below e^{-70}, from the M-Wright exponent
double negligible_radius(double beta) {
    double c = (1 - beta) * std::pow(beta, beta / (1 - beta));
    return std::pow(70 / c, 1 - beta);
}

// breakpoints in one coordinate x where offset + coef x crosses fixed fractions of R
std::vector<double> level_points(double R, double offset, double coef) {
    double hi = (R - offset) / coef;
    std::vector<double> pts{0};
    for (double f = 1.0 / 64; f < 1; f *= 2) {
        double x = (f * R - offset) / coef;
        if (x > 0 && x < hi) pts.push_back(x);
    }
    pts.push_back(std::max(hi, 0.0));
    return pts;
}

// mass of p_beta(., 1; 2) over the triangle a.x <= R, nested Gauss-Kronrod
double orthant_mass(double beta, const Direction& a) {
    const double R = negligible_radius(beta);
    auto inner = [&](double x1) {
        auto f = [&](double x2) { std::vector<double> x{x1, x2}; return density_p_multivariate(beta, a, x, 1); };
        return integrate(f, level_points(R, a[0] * x1, a[1]), 1e-10);
    };
    return integrate(inner, level_points(R, 0, a[0]), 1e-9);
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

// ---------------------------------------------------------------- identities

void add_identity_checks(std::vector<Check>& out) {
    auto add = [&](std::string name, std::string anchor, double thr, std::function<Outcome()> f) {
        out.push_back({std::move(name), std::move(anchor), MetricKind::error, thr,
                       [f = std::move(f)](std::uint64_t) { return f(); }, false});
    };

    // special functions
    add("specfun.goldens", "Wright and Mittag-Leffler special values", 1e-10, [] {
        double e1 = std::fabs(wright({0, 1}, 1.0) / std::exp(1.0) - 1);
        double e2 = std::fabs(wright({-0.5, 0.5}, -1.0) / (std::exp(-0.25) / std::sqrt(kPi)) - 1);
        double e3 = std::fabs(mittag_leffler({1, 1}, -1.0) / std::exp(-1.0) - 1);
        double e4 = std::fabs(mittag_leffler({0.5, 1}, -1.0) / 0.427583576155807 - 1);
        return Outcome{std::max({e1, e2, e3, e4}), "max relative error over W_{0,1}(1), W_{-1/2,1/2}(-1), E_1(-1), E_{1/2}(-1)"};
    });
    add("specfun.exponential_case", "W_{0,1}(z) = e^z", 1e-12, [] {
        double worst = 0;
        for (double z : linspace(-10, 10, 41)) worst = std::max(worst, std::fabs(wright({0, 1}, z) / std::exp(z) - 1));
        return Outcome{worst, "max relative error on z in [-10,10]"};
    });
    add("specfun.mwright_positivity", "positivity of l_beta", 0.0, [] {
        double lowest = 0;
        for (double b : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99})
            for (double x : linspace(0, 30, 61)) lowest = std::min(lowest, wright({-b, 1 - b}, -x));
        return Outcome{-lowest, "negated minimum of W_{-b,1-b}(-x) on the grid"};
    });
    for (double b : {0.3, 0.5, 0.8}) {
        add("specfun.ml_series_vs_integral.beta=" + num(b), "Mittag-Leffler spectral integral", 1e-7, [b] {
            double worst = 0, covered = 0;
            int points = 0;
            for (double x : linspace(0.5, 30, 60)) {
                double s;
                try {
                    s = mittag_leffler({b, 1}, -x, MLPath::series);
                } catch (const AccuracyError&) {
                    continue;  // beyond what the series can certify
                }
                double i = mittag_leffler({b, 1}, -x, MLPath::integral);
                worst = std::max(worst, std::fabs(s - i));
                covered = std::max(covered, x);
                ++points;
            }
            if (points == 0) return Outcome{NAN, "series certified nowhere on the grid"};
            return Outcome{worst, "max abs difference on the " + std::to_string(points) +
                                      " grid points where the series certifies, x <= " + num(covered)};
        });
    }
    add("specfun.relaxation_eigenfunction", "fractional relaxation equation", 1e-4, [] {
        double worst = 0;
        for (double b : {0.3, 0.5, 0.8})
            for (double w : {0.5, 1.0, 2.0}) {
                double wb = std::pow(w, b);
                auto f = [=](double s) { return mittag_leffler({b, 1}, -std::pow(s, b) * wb); };
                for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
                    double lhs = caputo_derivative({b}, f, t);
                    double rhs = -wb * f(t);
                    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
                }
            }
        return Outcome{worst, "max relative error, beta in {0.3,0.5,0.8}, w in {0.5,1,2}, t in [0.1,3]"};
    });

    // laws
    add("laws.gaussian_identity", "l_{1/2} as a folded Gaussian", 1e-10, [] {
        double worst = 0;
        for (double t : {0.5, 1.0, 2.0})
            for (double x : linspace(-5, 5, 41)) {
                double g = 2 * std::exp(-x * x / (4 * t)) / std::sqrt(4 * kPi * t);
                worst = std::max(worst, std::fabs(density_l(0.5, std::fabs(x), t) - g));
            }
        return Outcome{worst, "max abs error, x in [-5,5], t in {0.5,1,2}"};
    });
    add("laws.self_similarity", "scaling of l_beta", 1e-12, [] {
        double worst = 0;
        for (double b : {0.3, 0.5, 0.8})
            for (double t : {0.5, 2.0, 3.0})
                for (double x : {0.1, 1.0, 2.5}) {
                    double tb = std::pow(t, b);
                    double lhs = density_l(b, x, t), rhs = density_l(b, x / tb, 1) / tb;
                    worst = std::max(worst, std::fabs(lhs - rhs) / std::max(rhs, 1e-300));
                }
        return Outcome{worst, "max relative error"};
    });
    add("laws.lamperti_time_scaling", "ratio of two stable subordinators", 1e-12, [] {
        double worst = 0;
        for (double b : {0.3, 0.5, 0.7})
            for (double t : {0.5, 2.0, 5.0})
                for (double x : {0.2, 1.0, 4.0}) {
                    double lhs = density_lamperti(b, x, t), rhs = density_lamperti(b, x / t, 1) / t;
                    worst = std::max(worst, std::fabs(lhs - rhs) / rhs);
                }
        return Outcome{worst, "max relative error"};
    });
    add("laws.reduction_nu_minus_beta", "v_beta with nu = -beta is l_beta", 1e-12, [] {
        double worst = 0;
        Direction a({0.6, 0.8});
        for (double b : {0.3, 0.5, 0.7})
            for (double s : {0.0, 0.4, 1.0, 3.0}) {
                std::vector<double> x{s, s};
                double lhs = solution_v(b, -b, a, x, 1.3), rhs = density_l(b, a.dot(x), 1.3);
                worst = std::max(worst, std::fabs(lhs - rhs) / rhs);
            }
        return Outcome{worst, "max relative error"};
    });
    for (double b : {0.3, 0.5, 0.7}) {
        add("laws.lamperti_vs_subordination.beta=" + num(b), "subordination integral against the Lamperti law", 1e-6,
            [b] {
                double worst = 0, at = 0;
                for (int j = 0; j < 20; ++j) {
                    double x = 0.05 * std::pow(1.45, j);
                    double d = std::fabs(density_U(b, b, x, 1) - density_lamperti(b, x, 1));
                    if (d > worst) worst = d, at = x;
                }
                return Outcome{worst, "max abs error over 20 points in [0.05,58], worst at x=" + num(at)};
            });
    }
    for (double b : {0.4, 0.5, 0.6}) {
        add("laws.convolution_U1_U1.beta=" + num(b), "Laplace convolution of the U^n laws", 1e-4, [b] {
            const double r = std::sqrt(0.5);
            Direction a({r, r});
            const double pts[10][3] = {{1, 1, 2},     {0.5, 1, 1},   {0.2, 0.3, 1}, {1, 2, 3},   {0.1, 0.1, 0.5},
                                       {2, 0.5, 2},   {0.3, 1.5, 1.5}, {1, 1, 1},   {0.7, 0.2, 0.8}, {1.5, 1.5, 4}};
            double worst = 0;
            for (const auto& p : pts) {
                double c1 = r * p[0], c2 = r * p[1], t = p[2];
                auto f = [&](double s) {
                    if (s <= 0 || s >= t) return 0.0;
                    return density_l(b, c1, s) * density_l(b, c2, t - s);
                };
                double conv = integrate(f, {0, 0.25 * t, 0.5 * t, 0.75 * t, t}, 1e-10);
                std::vector<double> x{p[0], p[1]};
                worst = std::max(worst, std::fabs(conv - solution_Un(b, 2, a, x, t)));
            }
            return Outcome{worst, "max abs error of int_0^t u_1(s) u_2(t-s) ds against U^2 at 10 points"};
        });
    }
    add("laws.multivariate_mass", "unit mass of p_beta on the orthant", 1e-4, [] {
        const double r = std::sqrt(0.5);
        double mass = orthant_mass(0.5, Direction({r, r}));
        return Outcome{std::fabs(mass - 1), "2-D mass " + num(mass) + ", beta=0.5, a=(1,1)/sqrt2"};
    });
    add("laws.multivariate_marginal", "one-dimensional marginals of p_beta", 1e-5, [] {
        const double r = std::sqrt(0.5);
        Direction a({r, r});
        const double R = negligible_radius(0.5);
        double worst = 0;
        for (double x2 : {0.0, 0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0}) {
            auto f = [&](double x1) { std::vector<double> x{x1, x2}; return density_p_multivariate(0.5, a, x, 1); };
            double m = integrate(f, level_points(R, r * x2, r), 1e-10);
            worst = std::max(worst, std::fabs(m - r * density_l(0.5, r * x2, 1)));
        }
        return Outcome{worst, "max abs error of the x2-marginal against a2 l_beta(a2 x2, t)"};
    });
    add("laws.g_closed_vs_mixture", "Gaussian mixture over the inverse subordinator", 1e-6, [] {
        const double cases[4][3] = {{0.6, 1.3, 0.7}, {0.5, 0.5, 1}, {0.3, 2, 1.5}, {0.8, -0.7, 2}};
        Direction a({1.0});
        double worst = 0;
        for (const auto& c : cases) {
            std::vector<double> x{c[1]};
            worst = std::max(worst, std::fabs(solution_g(c[0], a, x, c[2]) - solution_g_subordinated(c[0], a, x, c[2])));
        }
        return Outcome{worst, "max abs difference of the closed form and the subordination integral"};
    });

    // normalizations
    for (double b : {0.3, 0.5, 0.8}) {
        add("laws.normalization.l.beta=" + num(b), "l_beta is a density", 1e-5, [b] {
            double m = integrate([b](double x) { return density_l(b, x, 1); }, {0, 1, 2, 4, 8, 16, 32, 64}, 1e-10);
            return Outcome{std::fabs(m - 1), "mass " + num(m)};
        });
        add("laws.normalization.g.beta=" + num(b), "g is a density in a.x", 1e-5, [b] {
            Direction a({1.0});
            auto f = [&](double y) { std::vector<double> x{y}; return solution_g(b, a, x, 1); };
            double m = 2 * integrate(f, {0, 1, 2, 4, 8, 16, 32, 64}, 1e-10);
            return Outcome{std::fabs(m - 1), "mass " + num(m)};
        });
    }
    for (double al : {0.3, 0.5, 0.7}) {
        add("laws.normalization.h.alpha=" + num(al), "h_alpha is a density", 1e-5, [al] {
            // x = e^u up to e^60, then the leading tail term t X^{-alpha} / Gamma(1-alpha)
            auto f = [al](double u) { double x = std::exp(u); return density_h(al, x, 1) * x; };
            std::vector<double> pts;
            for (double u = -12; u <= 60; u += 4) pts.push_back(u);
            double m = integrate(f, pts, 1e-10) + std::exp(-al * 60.0) * rgamma(1 - al);
            return Outcome{std::fabs(m - 1), "mass " + num(m)};
        });
    }
    for (double b : {0.3, 0.5, 0.7}) {
        add("laws.normalization.lamperti.beta=" + num(b), "Lamperti law is a density", 1e-5, [b] {
            auto f = [b](double u) { double x = std::exp(u); return density_lamperti(b, x, 1) * x; };
            double lim = 60.0 / b;
            std::vector<double> pts;
            for (double u = -lim; u <= lim + 1e-9; u += lim / 10) pts.push_back(u);
            double m = integrate(f, pts, 1e-10);
            return Outcome{std::fabs(m - 1), "mass " + num(m)};
        });
    }
    const double u_cases[3][2] = {{0.6, 0.4}, {0.5, 0.5}, {0.3, 0.7}};
    for (const auto& c : u_cases) {
        double al = c[0], b = c[1];
        add("laws.normalization.U.alpha=" + num(al) + ".beta=" + num(b), "subordinated law is a density", 1e-5, [al, b] {
            // x = e^u on [e^-40, e^40]; below, U ~ l_beta(0,1) x^{alpha-1} / Gamma(alpha),
            // above, the tail is E[L] X^{-alpha} / Gamma(1-alpha)
            auto f = [=](double u) { double x = std::exp(u); return density_U(al, b, x, 1) * x; };
            double m = integrate(f, {-40, -30, -20, -14, -6, -2, 2, 8, 20, 40}, 1e-8) +
                       rgamma(1 - b) * std::exp(-al * 40.0) * rgamma(1 + al) +
                       std::exp(-al * 40.0) * rgamma(1 - al) * rgamma(1 + b);
            return Outcome{std::fabs(m - 1), "mass " + num(m)};
        });
    }
    for (double b : {0.3, 0.5, 0.8}) {
        add("laws.normalization.p.beta=" + num(b), "unit mass of p_beta on the orthant", 1e-5, [b] {
            double m = orthant_mass(b, Direction({0.6, 0.8}));
            return Outcome{std::fabs(m - 1), "2-D mass " + num(m) + ", a=(0.6,0.8)"};
        });
    }
    add("laws.laplace_h", "Laplace transform of h_alpha", 1e-7, [] {
        double worst = 0;
        for (double al : {0.5, 0.7})
            for (double xi : {0.5, 1.0, 2.0}) {
                double v = laplace_transform([al](double x) { return x > 0 ? density_h(al, x, 1) : 0.0; }, xi);
                worst = std::max(worst, std::fabs(v - std::exp(-std::pow(xi, al))));
            }
        return Outcome{worst, "max abs error against exp(-t xi^alpha)"};
    });
    add("laws.laplace_l", "Laplace transform of l_beta", 1e-7, [] {
        double worst = 0;
        for (double b : {0.5, 0.7})
            for (double xi : {0.5, 1.0, 2.0}) {
                double v = laplace_transform([b](double x) { return density_l(b, std::max(x, 0.0), 1); }, xi);
                worst = std::max(worst, std::fabs(v - mittag_leffler({b, 1}, -xi)));
            }
        return Outcome{worst, "max abs error against E_beta(-xi t^beta)"};
    });
    add("laws.frac_poisson_pgf", "fractional Poisson distribution", 1e-6, [] {
        double mass = 0, pgf = 0;
        for (int k = 0; k <= 60; ++k) {
            double p = pmf_frac_poisson(0.5, 1.0, k, 1.0);
            mass += p;
            pgf += std::pow(0.5, k) * p;
        }
        double e = std::max(std::fabs(mass - 1), std::fabs(pgf - mittag_leffler({0.5, 1}, -0.5)));
        return Outcome{e, "mass " + num(mass) + ", pgf at z=1/2 " + num(pgf)};
    });

    // operators
    for (double al : {0.25, 0.5, 0.75}) {
        add("fracops.eigen_relation.alpha=" + num(al), "exponentials are eigenfunctions of (a.grad)^alpha", 1e-4, [al] {
            Direction a({0.6, 0.8});
            double worst = 0;
            for (double mu : {0.5, 1.0, 2.0, 4.0}) {
                auto f = [&](std::span<const double> x) { return std::exp(mu * a.dot(x)); };
                for (double s : {-1.0, -0.3, 0.0, 0.4, 1.0}) {
                    std::vector<double> x{s, 0.5 * s};
                    double e = std::exp(mu * a.dot(x));
                    double d = frac_dir_derivative({al, a}, f, x);
                    worst = std::max(worst, std::fabs(d - std::pow(mu, al) * e) / e);
                }
            }
            return Outcome{worst, "max relative error, mu in {0.5,1,2,4}, 5 points"};
        });
    }
    add("fracops.symbol_consistency", "Fourier symbol of (a.grad)^alpha", 1e-3, [] {
        const double al = 0.5;
        Direction a({1.0});
        auto bump = [](double y) { return std::fabs(y) < 1 ? std::exp(-1 / (1 - y * y)) : 0.0; };
        FieldFn f = [&](std::span<const double> x) { return bump(x[0]); };
        // D f on [-1, 10] by a composite 20-point Gauss rule; zero to the left of -1
        using G = boost::math::quadrature::gauss<double, 20>;
        std::vector<double> ys, ws;
        std::vector<double> edges{-1, -0.5, 0, 0.5, 1, 1.5, 2, 3, 4, 5, 6, 8, 10};
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            double mid = 0.5 * (edges[i] + edges[i + 1]), half = 0.5 * (edges[i + 1] - edges[i]);
            const auto& xs = G::abscissa();
            const auto& wt = G::weights();
            for (std::size_t j = 0; j < xs.size(); ++j)
                for (int sgn : {-1, 1}) {
                    if (xs[j] == 0 && sgn < 0) continue;
                    ys.push_back(mid + sgn * half * xs[j]);
                    ws.push_back(half * wt[j]);
                }
        }
        std::vector<double> dv(ys.size());
        for (std::size_t i = 0; i < ys.size(); ++i) {
            std::vector<double> x{ys[i]};
            dv[i] = frac_dir_derivative({al, a}, f, x);
        }
        // beyond y = 10 the operator is -alpha/Gamma(1-alpha) int f(u) (y-u)^{-alpha-1} du;
        // swapping the order leaves E(xi, L) = int_L^inf e^{i xi v} v^{-alpha-1} dv,
        // evaluated on the rotated ray v = L + i sign(xi) w
        auto tail_kernel = [&](double xi, double len) {
            double sg = xi > 0 ? 1 : -1;
            auto re = [&](double w) { return (cplx(0, sg) * std::pow(cplx(len, sg * w), -al - 1)).real() * std::exp(-std::fabs(xi) * w); };
            auto im = [&](double w) { return (cplx(0, sg) * std::pow(cplx(len, sg * w), -al - 1)).imag() * std::exp(-std::fabs(xi) * w); };
            double cut = 60.0 / std::fabs(xi);
            cplx v(integrate(re, {0, 1, 4, 16, cut}, 1e-12), integrate(im, {0, 1, 4, 16, cut}, 1e-12));
            return std::exp(cplx(0, xi * len)) * v;
        };
        double worst = 0;
        for (double xi : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
            cplx dhat = 0;
            for (std::size_t i = 0; i < ys.size(); ++i) dhat += ws[i] * dv[i] * std::exp(cplx(0, xi * ys[i]));
            auto tre = [&](double u) { return (bump(u) * std::exp(cplx(0, xi * u)) * tail_kernel(xi, 10 - u)).real(); };
            auto tim = [&](double u) { return (bump(u) * std::exp(cplx(0, xi * u)) * tail_kernel(xi, 10 - u)).imag(); };
            cplx tail(integrate(tre, {-1, 0, 1}, 1e-10), integrate(tim, {-1, 0, 1}, 1e-10));
            dhat += -al * rgamma(1 - al) * tail;
            auto fre = [&](double u) { return bump(u) * std::cos(xi * u); };
            auto fim = [&](double u) { return bump(u) * std::sin(xi * u); };
            cplx fhat(integrate(fre, {-1, 0, 1}, 1e-12), integrate(fim, {-1, 0, 1}, 1e-12));
            std::vector<double> xv{xi};
            worst = std::max(worst, std::abs(dhat - dir_symbol(al, a, xv) * fhat));
        }
        return Outcome{worst, "max abs error of the transformed derivative of a bump, alpha=0.5, xi in {+-0.5,+-1,+-2}"};
    });
    add("fracops.rl_caputo_relation", "Riemann-Liouville and Caputo derivatives", 1e-8, [] {
        double worst = 0;
        for (double b : {0.3, 0.5, 0.8}) {
            auto f = [](double s) { return 1 + s; };
            for (double t : {0.5, 1.0, 2.0}) {
                double rl = rl_derivative({b}, f, t);
                double want = std::pow(t, -b) * rgamma(1 - b) + std::pow(t, 1 - b) * rgamma(2 - b);
                worst = std::max(worst, std::fabs(rl - want) / want);
                auto g = [](double s) { return std::cos(s) + 2; };
                double diff = rl_derivative({b}, g, t) - caputo_derivative({b}, g, t) - 3 * std::pow(t, -b) * rgamma(1 - b);
                worst = std::max(worst, std::fabs(diff));
            }
        }
        return Outcome{worst, "RL of 1+t against its closed form, and RL - Caputo - f(0) t^-b / Gamma(1-b) for 2+cos t"};
    });
    add("fracops.alpha_to_one", "(a.grad)^alpha as alpha -> 1", 1e-2, [] {
        Direction a({1.0});
        auto f = [](std::span<const double> x) { return std::exp(-x[0] * x[0]); };
        double worst = 0;
        for (double s : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
            std::vector<double> x{s};
            double d = frac_dir_derivative({0.999, a}, f, x);
            worst = std::max(worst, std::fabs(d - (-2 * s * std::exp(-s * s))));
        }
        return Outcome{worst, "max abs error against the first derivative, alpha=0.999"};
    });
    add("fracops.homogeneous_laplace", "Laplace transform of the homogeneous distribution", 1e-7, [] {
        double worst = 0;
        for (double eta : {-0.5, 0.3, 1.5})
            for (double lam : {0.5, 2.0}) {
                double v = laplace_transform([eta](double z) { return homogeneous_plus(eta, z); }, lam);
                worst = std::max(worst, std::fabs(v / std::pow(lam, -eta - 1) - 1));
            }
        return Outcome{worst, "max relative error against lambda^{-eta-1}"};
    });
}

// ---------------------------------------------------------------- residuals

// relative Caputo residual of t -> E_b(-t^b c) against -c E_b(-t^b c), component-wise
double residual(double beta, cplx c, double t) {
    auto f = [=](double s) { return mittag_leffler({beta, 1}, cplx(-std::pow(s, beta)) * c); };
    CaputoSpec spec{beta};
    double re = caputo_derivative(spec, [&](double s) { return f(s).real(); }, t);
    double im = caputo_derivative(spec, [&](double s) { return f(s).imag(); }, t);
    cplx want = -c * f(t);
    return std::abs(cplx(re, im) - want) / std::abs(want);
}

void add_residual_checks(std::vector<Check>& out) {
    auto add = [&](std::string name, std::string anchor, double thr, std::function<Outcome()> f) {
        out.push_back({std::move(name), std::move(anchor), MetricKind::error, thr,
                       [f = std::move(f)](std::uint64_t) { return f(); }, false});
    };
    add("residual.a.advection", "time-fractional advection in Fourier variables", 1e-3, [] {
        Direction a({1.0});
        double worst = 0;
        for (double xi : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0, 2.0}) {
                std::vector<double> v{xi};
                worst = std::max(worst, residual(0.5, dir_symbol(0.5, a, v), t));
            }
        return Outcome{worst, "alpha=beta=1/2, xi in {0.5,1,2}, t in {0.5,1,2}"};
    });
    add("residual.b.advection_diffusion", "advection-diffusion characteristic function", 1e-3, [] {
        Direction a({0.6, 0.8});
        const double probes[4][2] = {{0.3, 0.4}, {0.6, 0.8}, {1.0, 0.0}, {-0.5, 0.4}};
        double worst = 0;
        for (const auto& p : probes)
            for (double t : {0.5, 1.0}) {
                cplx c = laplacian_symbol(0.7, p) + dir_symbol(0.5, a, p);
                worst = std::max(worst, residual(0.8, c, t));
            }
        return Outcome{worst, "(theta,alpha,beta)=(0.7,0.5,0.8), 4 probes, t in {0.5,1}"};
    });
    add("residual.b.classical", "advection-diffusion characteristic function", 1e-6, [] {
        Direction a({1.0});
        std::vector<double> xi{1.0};
        cplx c = laplacian_symbol(1.0, xi) + dir_symbol(1.0, a, xi);
        return Outcome{residual(1.0, c, 1.0), "theta=alpha=beta=1, xi=1, t=1"};
    });
    add("residual.c.inverse_subordinator", "Laplace transform of l_beta", 1e-3, [] {
        double worst = 0;
        for (double lam : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0, 2.0}) worst = std::max(worst, residual(0.6, cplx(lam), t));
        return Outcome{worst, "beta=0.6, lambda in {0.5,1,2}, t in {0.5,1,2}"};
    });
}

// ---------------------------------------------------------------- statistics

Outcome z_outcome(double got, double want, double se, const std::string& what) {
    return {std::fabs(got - want) / se, what + ": estimate " + num(got) + ", reference " + num(want) + ", se " + num(se)};
}

Outcome cf_outcome(const CharFnEstimate& est, cplx want, const std::string& what) {
    return {std::abs(est.value - want) / est.se, what + ": |empirical - reference| / se with reference " +
                                                     num(want.real()) + (want.imag() < 0 ? "" : "+") +
                                                     num(want.imag()) + "i, se " + num(est.se)};
}

Outcome ks_outcome(const KsResult& r, const std::string& what) {
    return {r.p_value, what + ": D=" + num(r.statistic)};
}

double median(std::vector<double> v) {
    auto mid = v.begin() + v.size() / 2;
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

void add_statistical_checks(std::vector<Check>& out, std::size_t n, unsigned workers) {
    auto add = [&](std::string name, std::string anchor, MetricKind kind, double thr,
                   std::function<Outcome(const BatchConfig&)> f) {
        out.push_back({std::move(name), std::move(anchor), kind, thr,
                       [f = std::move(f), n, workers](std::uint64_t seed) { return f({n, seed, workers}); }, true});
    };
    const auto E = MetricKind::error;
    const auto P = MetricKind::p_value;

    // stable subordinator
    for (double al : {0.5, 0.7})
        for (double xi : {0.5, 1.0, 2.0}) {
            add("montecarlo.subordinator.laplace.alpha=" + num(al) + ".xi=" + num(xi), "Laplace transform of H_alpha", E,
                3, [=](const BatchConfig& c) {
                    auto b = sample_stable_subordinator(al, 1, c);
                    std::vector<double> v(b.n_samples);
                    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(-xi * b.values[i]);
                    auto m = mean_estimate(v);
                    return z_outcome(m.mean, std::exp(-std::pow(xi, al)), m.se, "mean exp(-xi H)");
                });
        }
    add("montecarlo.subordinator.scaling.alpha=0.5", "self-similarity of H_alpha", P, 0.01, [](const BatchConfig& c) {
        auto b2 = sample_stable_subordinator(0.5, 2, c);
        BatchConfig c1 = c;
        c1.seed = splitmix(c.seed);
        auto b1 = sample_stable_subordinator(0.5, 1, c1);
        std::vector<double> s1 = b1.values;
        for (double& v : s1) v *= 4;  // 2^{1/alpha}
        return ks_outcome(ks_two_sample(b2.values, s1), "two-sample KS, H_2 against 4 H_1");
    });
    add("montecarlo.subordinator.median.alpha=0.999", "H_alpha -> t as alpha -> 1", E, 0.05, [](const BatchConfig& c) {
        double m = median(sample_stable_subordinator(0.999, 1, c).values);
        return Outcome{std::fabs(m - 1), "relative deviation of the median " + num(m) + " from t=1"};
    });

    // inverse subordinator
    add("montecarlo.inverse.ks.beta=0.5", "law of L_beta", P, 0.01, [](const BatchConfig& c) {
        auto b = sample_inverse_subordinator(0.5, 1, c);
        return ks_outcome(ks_test(b.values, [](double x) { return x <= 0 ? 0.0 : std::erf(x / 2); }),
                          "KS against the half-normal CDF");
    });
    add("montecarlo.inverse.ks.beta=0.3", "law of L_beta", P, 0.01, [](const BatchConfig& c) {
        static const CdfTable cdf([](double x) { return density_l(0.3, x, 1); }, 0, 40, 4001);
        auto b = sample_inverse_subordinator(0.3, 1, c);
        return ks_outcome(ks_test(b.values, [](double x) { return cdf(x); }), "KS against the tabulated CDF of l_0.3");
    });
    add("montecarlo.inverse.mean.beta=0.5", "moments of L_beta", E, 3, [](const BatchConfig& c) {
        auto m = mean_estimate(sample_inverse_subordinator(0.5, 1, c).values);
        return z_outcome(m.mean, rgamma(1.5), m.se, "sample mean");
    });
    add("montecarlo.inverse.laplace.beta=0.5", "Laplace transform of l_beta", E, 3, [](const BatchConfig& c) {
        auto b = sample_inverse_subordinator(0.5, 1, c);
        for (double& v : b.values) v = std::exp(-v);
        auto m = mean_estimate(b.values);
        return z_outcome(m.mean, mittag_leffler({0.5, 1}, -1.0), m.se, "mean exp(-L)");
    });
    add("montecarlo.inverse.concentration.beta=0.999", "L_beta -> t as beta -> 1", E, 0.05, [](const BatchConfig& c) {
        auto m = mean_estimate(sample_inverse_subordinator(0.999, 1, c).values);
        double sd = m.se * std::sqrt(double(c.n_samples));
        return Outcome{sd, "sample standard deviation"};
    });

    // isotropic stable
    add("montecarlo.stable.variance.theta=1", "Brownian case of S_2theta", E, 0.05, [](const BatchConfig& c) {
        auto b = sample_isotropic_stable(1.0, 1.5, 2, c);
        double worst = 0;
        for (std::size_t k = 0; k < 2; ++k) {
            auto m = mean_estimate(b.column(k));
            double var = m.se * m.se * double(c.n_samples);
            worst = std::max(worst, std::fabs(var / 3.0 - 1));
        }
        return Outcome{worst, "max relative deviation of the per-coordinate variance from 2t, t=1.5"};
    });
    add("montecarlo.stable.charfn.theta=0.5", "characteristic function of S_2theta", E, 3, [](const BatchConfig& c) {
        auto b = sample_isotropic_stable(0.5, 1, 1, c);
        std::vector<double> xi{1.0};
        return cf_outcome(empirical_charfn(b.values, 1, xi), std::exp(-1.0), "Cauchy case, xi=1");
    });
    add("montecarlo.stable.charfn_probes.theta=0.7", "characteristic function of S_2theta", E, 3, [](const BatchConfig& c) {
        auto b = sample_isotropic_stable(0.7, 1, 2, c);
        const double probes[5][2] = {{0.5, 0}, {0, 1}, {0.6, 0.8}, {-1, 1}, {1.5, -0.5}};
        double worst = 0;
        std::string at;
        for (const auto& p : probes) {
            auto est = empirical_charfn(b.values, 2, p);
            double z = std::abs(est.value - std::exp(-std::pow(laplacian_symbol(1.0, p), 0.7))) / est.se;
            if (z >= worst) worst = z, at = "(" + num(p[0]) + "," + num(p[1]) + ")";
        }
        return Outcome{worst, "max |empirical - exp(-t |xi|^{2 theta})| / se over 5 probes, worst at " + at};
    });
    add("montecarlo.stable.isotropy.theta=0.7", "isotropy of S_2theta", E, 3, [](const BatchConfig& c) {
        auto b = sample_isotropic_stable(0.7, 1, 2, c);
        const double p1[2] = {1, 0}, p2[2] = {0.6, 0.8}, p3[2] = {-0.8, 0.6};
        auto e1 = empirical_charfn(b.values, 2, p1), e2 = empirical_charfn(b.values, 2, p2),
             e3 = empirical_charfn(b.values, 2, p3);
        double z = std::max(std::abs(e1.value - e2.value) / std::hypot(e1.se, e2.se),
                            std::abs(e1.value - e3.value) / std::hypot(e1.se, e3.se));
        return Outcome{z, "max difference of rotated unit probes in units of the combined se"};
    });

    // advection-diffusion
    add("montecarlo.advdiff.classical.mean", "classical advection-diffusion limit", E, 0.05, [](const BatchConfig& c) {
        auto m = mean_estimate(sample_advdiff({1, 1, 1}, Direction({1.0}), 1, c).values);
        return Outcome{std::fabs(m.mean - 1), "relative deviation of the mean " + num(m.mean) + " from t=1"};
    });
    add("montecarlo.advdiff.classical.variance", "classical advection-diffusion limit", E, 0.05, [](const BatchConfig& c) {
        auto b = sample_advdiff({1, 1, 1}, Direction({0.6, 0.8}), 1, c);
        double worst = 0;
        for (std::size_t k = 0; k < 2; ++k) {
            auto m = mean_estimate(b.column(k));
            worst = std::max(worst, std::fabs(m.se * m.se * double(c.n_samples) / 2 - 1));
        }
        return Outcome{worst, "max relative deviation of the per-coordinate variance from 2t"};
    });
    add("montecarlo.advdiff.drift_vs_lamperti.beta=0.5", "subordinated drift with alpha = beta", P, 0.01,
        [](const BatchConfig& c) {
            auto b = sample_subordinated_drift(0.5, 0.5, 1, c);
            return ks_outcome(ks_test(b.values, [](double x) { return x <= 0 ? 0.0 : cdf_lamperti(0.5, x, 1); }),
                              "KS of H_alpha(L_beta) against the Lamperti CDF");
        });
    add("montecarlo.advdiff.charfn", "advection-diffusion characteristic function", E, 3, [](const BatchConfig& c) {
        FracParams p{0.5, 0.8, 0.7};
        Direction a({0.6, 0.8});
        auto b = sample_advdiff(p, a, 1, c);
        const double probes[5][2] = {{0.3, 0.4}, {0.6, 0.8}, {1, 0}, {-0.5, 0.4}, {0.2, -1}};
        double worst = 0;
        std::string at;
        for (const auto& q : probes) {
            auto est = empirical_charfn(b.values, 2, q);
            double z = std::abs(est.value - charfn_advdiff(p, a, q, 1)) / est.se;
            if (z >= worst) worst = z, at = "(" + num(q[0]) + "," + num(q[1]) + ")";
        }
        return Outcome{worst, "(theta,alpha,beta)=(0.7,0.5,0.8), max z over 5 probes, worst at " + at};
    });
    for (auto [al, b] : {std::pair{0.5, 0.5}, std::pair{0.7, 0.4}})
        for (double xi : {0.5, 1.0}) {
            add("montecarlo.composition.alpha=" + num(al) + ".beta=" + num(b) + ".xi=" + num(xi),
                "Laplace transform of H_alpha(L_beta)", E, 3, [=](const BatchConfig& c) {
                    auto s = sample_subordinated_drift(al, b, 1, c);
                    for (double& v : s.values) v = std::exp(-xi * v);
                    auto m = mean_estimate(s.values);
                    return z_outcome(m.mean, mittag_leffler({b, 1}, -std::pow(xi, al)), m.se, "mean exp(-xi H(L))");
                });
        }

    // fractional Poisson transport
    for (double b : {0.5, 1.0}) {
        add("montecarlo.fracpoisson.p0.beta=" + num(b), "fractional Poisson distribution", E, 3, [b](const BatchConfig& c) {
            auto s = sample_frac_poisson_transport({0.5, b, 0.5, 1.0, 1.0}, Direction({1.0}), 1, c, false);
            for (double& v : s.values) v = v == 0 ? 1 : 0;
            auto m = mean_estimate(s.values);
            return z_outcome(m.mean, mittag_leffler({b, 1}, -1.0), m.se, "P(count = 0)");
        });
    }
    add("montecarlo.fracpoisson.chisq.beta=0.5", "fractional Poisson distribution", P, 0.01, [](const BatchConfig& c) {
        auto s = sample_frac_poisson_transport({0.5, 0.5, 0.5, 1.0, 1.0}, Direction({1.0}), 1, c, false);
        std::vector<double> obs(11, 0.0), probs(11, 0.0);
        for (double v : s.values) obs[std::min<std::size_t>(10, std::size_t(std::llround(v)))] += 1;
        double acc = 0;
        for (int k = 0; k < 10; ++k) acc += probs[k] = pmf_frac_poisson(0.5, 1.0, k, 1.0);
        probs[10] = 1 - acc;
        auto r = chi_square(obs, probs);
        return Outcome{r.p_value, "chi-square " + num(r.statistic) + " on " + std::to_string(r.df) +
                                      " df, cells k=0..9 and k>=10"};
    });
    add("montecarlo.fracpoisson.charfn", "characteristic function of the Poisson transport", E, 3, [](const BatchConfig& c) {
        FracParams p{0.5, 0.5, 0.5, 1.0, 1.0};
        auto s = sample_frac_poisson_transport(p, Direction({1.0}), 1, c, true);
        const double xi = 0.5;
        cplx arg = -p.lambda * (1.0 - std::exp(cplx(0, xi))) - std::pow(cplx(0, -xi), p.alpha);
        std::vector<double> v{xi};
        return cf_outcome(empirical_charfn(s.values, 1, v), mittag_leffler({p.beta, 1}, arg), "xi=0.5, a=(1)");
    });

    // ratio
    for (double b : {0.3, 0.5}) {
        add("montecarlo.ratio.ks.beta=" + num(b), "ratio of two stable subordinators", P, 0.01, [b](const BatchConfig& c) {
            auto s = sample_ratio(b, 1, c);
            return ks_outcome(ks_test(s.values, [b](double x) { return x <= 0 ? 0.0 : cdf_lamperti(b, x, 1); }),
                              "KS against the Lamperti CDF");
        });
    }
    add("montecarlo.ratio.median.beta=0.5", "ratio of two stable subordinators", E, 0.03, [](const BatchConfig& c) {
        double m = median(sample_ratio(0.5, 1, c).values);
        return Outcome{std::fabs(m - 1), "sample median " + num(m)};
    });
    add("montecarlo.ratio.scaling.beta=0.5", "ratio of two stable subordinators", P, 0.01, [](const BatchConfig& c) {
        auto s2 = sample_ratio(0.5, 2, c);
        BatchConfig c1 = c;
        c1.seed = splitmix(c.seed);
        auto s1 = sample_ratio(0.5, 1, c1);
        for (double& v : s1.values) v *= 2;
        return ks_outcome(ks_two_sample(s2.values, s1.values), "two-sample KS, t=2 against 2 x (t=1)");
    });
}

// ---------------------------------------------------------------- runner

VerificationReport run_checks(const std::string& suite, std::vector<Check> checks, const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    const bool fast = cfg.profile == Profile::fast;
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};

    auto one = [&](std::size_t i) {
        const Check& c = checks[i];
        CheckResult& r = results[i];
        r.name = c.name;
        r.paper_anchor = c.anchor;
        r.kind = c.kind;
        r.threshold = fast ? (c.kind == MetricKind::error ? 10 * c.threshold : c.threshold / 10) : c.threshold;
        const int attempts = c.statistical ? 3 : 1;
        for (int k = 0; k < attempts; ++k) {
            try {
                Outcome o = c.run(c.statistical ? derive_seed(cfg.seed, c.name, k) : 0);
                r.metric = o.metric;
                r.detail = o.detail;
            } catch (const std::exception& e) {
                r.metric = NAN;
                r.detail = std::string("exception: ") + e.what();
            }
            r.passed = evaluate(r.kind, r.metric, r.threshold);
            if (c.statistical) r.detail += "; attempt " + std::to_string(k + 1) + " of 3";
            if (r.passed) break;
        }
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = unsigned(std::min<std::size_t>(threads, checks.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) one(i);
            });
    }
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    VerificationReport rep;
    rep.suite = suite;
    rep.seed = cfg.seed;
    rep.results = std::move(results);
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::size_t sample_count(const VerifyConfig& cfg) {
    std::size_t n = cfg.n_samples ? cfg.n_samples : 100000;
    if (cfg.profile == Profile::fast) n /= 10;
    return n;
}

}  // namespace

Profile parse_profile(const std::string& name) {
    if (name == "strict") return Profile::strict;
    if (name == "fast") return Profile::fast;
    throw UsageError("unknown profile '" + name + "' (expected strict or fast)");
}

bool evaluate(MetricKind kind, double metric, double threshold) {
    if (std::isnan(metric)) return false;
    return kind == MetricKind::error ? metric <= threshold : metric >= threshold;
}

bool VerificationReport::all_passed() const {
    return !results.empty() && std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

VerificationReport run_identity_suite(const VerifyConfig& cfg) {
    std::vector<Check> checks;
    add_identity_checks(checks);
    return run_checks("identities", std::move(checks), cfg);
}

VerificationReport run_statistical_suite(const VerifyConfig& cfg) {
    std::size_t n = sample_count(cfg);
    if (n < 1000) throw DomainError("statistical suite needs at least 10^4 samples under strict, 10^3 under fast");
    std::vector<Check> checks;
    add_statistical_checks(checks, n, cfg.workers);
    return run_checks("statistics", std::move(checks), cfg);
}

VerificationReport run_residual_suite(const VerifyConfig& cfg) {
    std::vector<Check> checks;
    add_residual_checks(checks);
    return run_checks("residuals", std::move(checks), cfg);
}

VerificationReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
    if (suite == "identities") return run_identity_suite(cfg);
    if (suite == "statistics") return run_statistical_suite(cfg);
    if (suite == "residuals") return run_residual_suite(cfg);
    if (suite == "all") {
        std::vector<Check> checks;
        add_identity_checks(checks);
        add_residual_checks(checks);
        std::size_t n = sample_count(cfg);
        if (n < 1000) throw DomainError("statistical suite needs at least 10^4 samples under strict, 10^3 under fast");
        add_statistical_checks(checks, n, cfg.workers);
        return run_checks("all", std::move(checks), cfg);
    }
    throw UsageError("unknown suite '" + suite + "' (expected identities, statistics, residuals or all)");
}

std::string to_json(const VerificationReport& report, bool with_wall_time) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    auto& arr = j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json o;
        o["name"] = r.name;
        o["paper_anchor"] = r.paper_anchor;
        o["metric"] = r.metric;
        o["threshold"] = r.threshold;
        o["passed"] = r.passed;
        o["detail"] = r.detail;
        arr.push_back(std::move(o));
    }
    j["wall_time_s"] = with_wall_time ? report.wall_time_s : 0.0;
    return j.dump(2) + "\n";
}

}  // namespace fw
