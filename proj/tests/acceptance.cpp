// Acceptance run: one line per criterion, "PASS"/"FAIL", metric against threshold, wall time against budget.
#include <fracwright/csv.hpp>
#include <fracwright/fracops.hpp>
#include <fracwright/laws.hpp>
#include <fracwright/montecarlo.hpp>
#include <fracwright/specfun.hpp>
#include <fracwright/stats.hpp>
#include <fracwright/verify.hpp>

#include "quad.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace fw;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool ok;
    std::string what;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome le(double metric, double thr, const std::string& what) {
    return {metric <= thr, what + " " + fmt(metric) + " <= " + fmt(thr)};
}

double integrate(const std::function<double(double)>& f, std::vector<double> pts, double tol) {
    detail::QuadResult r;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) r += detail::gk(f, pts[i], pts[i + 1], tol, 12);
    return r.value;
}

// a.x beyond which W_{-b,rho}(-a.x) drops below e^{-70}
double negligible_radius(double beta) {
    double c = (1 - beta) * std::pow(beta, beta / (1 - beta));
    return std::pow(70 / c, 1 - beta);
}

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

// statistical criteria may be rerun twice on fresh seeds
template <class F>
Outcome with_reruns(std::uint64_t seed, F&& attempt) {
    Outcome o{};
    for (int k = 0; k < 3; ++k) {
        o = attempt(seed + 1000003ull * k);
        if (o.ok) {
            if (k) o.what += " (after " + std::to_string(k) + " rerun" + (k > 1 ? "s)" : ")");
            return o;
        }
    }
    o.what += " (after 2 reruns)";
    return o;
}

Outcome c1() {
    const double e = std::numbers::e, pi = std::numbers::pi;
    double r1 = std::fabs(wright({0, 1}, 1) / e - 1);
    double r2 = std::fabs(wright({-0.5, 0.5}, -1) / (std::exp(-0.25) / std::sqrt(pi)) - 1);
    double r3 = std::fabs(mittag_leffler({1, 1}, -1.0) / std::exp(-1.0) - 1);
    return le(std::max({r1, r2, r3}), 1e-10, "max relative error");
}

Outcome c2() {
    double worst = 0;
    for (double t : {0.5, 1.0, 2.0})
        for (int i = 0; i <= 200; ++i) {
            double x = -5 + 0.05 * i;
            double want = 2 * std::exp(-x * x / (4 * t)) / std::sqrt(4 * std::numbers::pi * t);
            worst = std::max(worst, std::fabs(density_l(0.5, std::fabs(x), t) - want));
        }
    return le(worst, 1e-10, "max abs error over 201 x and 3 t");
}

Outcome c3() {
    double worst = 0;
    for (double b : {0.3, 0.5, 0.7})
        for (int j = 0; j < 20; ++j) {
            double x = 0.05 * std::pow(1.45, j);
            worst = std::max(worst, std::fabs(density_U(b, b, x, 1) - density_lamperti(b, x, 1)));
        }
    return le(worst, 1e-5, "max abs error over 20 points per beta");
}

Outcome c4() {
    const double r = std::sqrt(0.5);
    Direction a({r, r});
    const double pts[10][3] = {{1, 1, 2},   {0.5, 1, 1},     {0.2, 0.3, 1}, {1, 2, 3},       {0.1, 0.1, 0.5},
                               {2, 0.5, 2}, {0.3, 1.5, 1.5}, {1, 1, 1},     {0.7, 0.2, 0.8}, {1.5, 1.5, 4}};
    double worst = 0;
    for (double b : {0.4, 0.6})
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
    return le(worst, 1e-4, "max abs error of the t-convolution against U^2");
}

Outcome c5() {
    const double r = std::sqrt(0.5), beta = 0.5;
    Direction a({r, r});
    const double R = negligible_radius(beta);
    auto inner = [&](double x1) {
        auto f = [&](double x2) { std::vector<double> x{x1, x2}; return density_p_multivariate(beta, a, x, 1); };
        return integrate(f, level_points(R, r * x1, r), 1e-10);
    };
    double mass = integrate(inner, level_points(R, 0, r), 1e-9);
    double worst = 0;
    for (double x2 : {0.0, 0.3, 0.7, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0}) {
        auto f = [&](double x1) { std::vector<double> x{x1, x2}; return density_p_multivariate(beta, a, x, 1); };
        double m = integrate(f, level_points(R, r * x2, r), 1e-10);
        worst = std::max(worst, std::fabs(m - r * density_l(beta, r * x2, 1)));
    }
    bool ok = std::fabs(mass - 1) <= 1e-4 && worst <= 1e-5;
    return {ok, "|mass - 1| " + fmt(std::fabs(mass - 1)) + " <= 0.0001, marginal error " + fmt(worst) + " <= 1e-05"};
}

Outcome c6() {
    Direction a({0.6, 0.8});
    double worst = 0;
    for (double al : {0.25, 0.5, 0.75})
        for (double mu : {0.5, 1.0, 2.0, 4.0}) {
            auto f = [&](std::span<const double> x) { return std::exp(mu * a.dot(x)); };
            for (double s : {-1.0, 0.0, 1.0}) {
                std::vector<double> x{s, 0.5 * s};
                double e = std::exp(mu * a.dot(x));
                worst = std::max(worst, std::fabs(frac_dir_derivative({al, a}, f, x) - std::pow(mu, al) * e) / e);
            }
        }
    return le(worst, 1e-4, "max relative error");
}

Outcome c7() {
    VerifyConfig cfg;
    cfg.threads = 1;
    auto rep = run_residual_suite(cfg);
    double worst = 0;
    bool ok = !rep.results.empty();
    for (const auto& r : rep.results) {
        worst = std::max(worst, r.metric);
        ok = ok && r.passed && r.metric <= 1e-3;
    }
    return {ok, "max relative residual " + fmt(worst) + " <= 0.001 over " + std::to_string(rep.results.size()) +
                    " residual checks"};
}

Outcome c8() {
    const std::size_t N = 100000;
    static const CdfTable cdf03([](double x) { return density_l(0.3, x, 1); }, 0, 40, 4001);
    std::function<double(double)> cdf_l[2] = {[](double x) { return cdf03(x); },
                                              [](double x) { return x <= 0 ? 0.0 : std::erf(x / 2); }};
    const double betas[2] = {0.3, 0.5};
    double worst = 1;
    bool ok = true;
    std::string notes;
    for (int i = 0; i < 2; ++i) {
        double b = betas[i];
        auto inv = with_reruns(11 + i, [&](std::uint64_t s) {
            auto p = ks_test(sample_inverse_subordinator(b, 1, {N, s, 4}).values, cdf_l[i]).p_value;
            worst = std::min(worst, p);
            return Outcome{p > 0.01, ""};
        });
        auto rat = with_reruns(21 + i, [&](std::uint64_t s) {
            auto p = ks_test(sample_ratio(b, 1, {N, s, 4}).values,
                             [b](double x) { return x <= 0 ? 0.0 : cdf_lamperti(b, x, 1); })
                         .p_value;
            worst = std::min(worst, p);
            return Outcome{p > 0.01, ""};
        });
        ok = ok && inv.ok && rat.ok;
        notes += inv.what + rat.what;
    }
    return {ok, "min KS p-value over attempts " + fmt(worst) + ", all four laws p > 0.01" + notes};
}

Outcome c9() {
    FracParams p{0.5, 0.8, 0.7};
    Direction a({0.6, 0.8});
    const double probes[5][2] = {{0.3, 0.4}, {0.6, 0.8}, {1, 0}, {-0.5, 0.4}, {0.2, -1}};
    return with_reruns(31, [&](std::uint64_t s) {
        auto b = sample_advdiff(p, a, 1, {100000, s, 4});
        double worst = 0;
        for (const auto& q : probes) {
            auto est = empirical_charfn(b.values, 2, q);
            worst = std::max(worst, std::abs(est.value - charfn_advdiff(p, a, q, 1)) / est.se);
        }
        return le(worst, 3, "max |empirical - exact| / se over 5 probes");
    });
}

Outcome c10() {
    return with_reruns(41, [](std::uint64_t s) {
        auto y = sample_frac_poisson_transport({0.5, 0.5, 0.5, 1.0, 1.0}, Direction({1.0}), 1, {100000, s, 4}, false);
        std::vector<double> zero(y.values.size()), obs(11, 0.0), probs(11, 0.0);
        for (std::size_t i = 0; i < y.values.size(); ++i) {
            zero[i] = y.values[i] == 0 ? 1 : 0;
            obs[std::min<std::size_t>(10, std::size_t(std::llround(y.values[i])))] += 1;
        }
        auto m = mean_estimate(zero);
        double z = std::fabs(m.mean - mittag_leffler({0.5, 1}, -1.0)) / m.se;
        double acc = 0;
        for (int k = 0; k < 10; ++k) acc += probs[k] = pmf_frac_poisson(0.5, 1.0, k, 1.0);
        probs[10] = 1 - acc;
        auto chi = chi_square(obs, probs);
        return Outcome{z <= 3 && chi.p_value > 0.01,
                       "P(0) z-score " + fmt(z) + " <= 3, chi-square p " + fmt(chi.p_value) + " > 0.01"};
    });
}

Outcome c11() {
    const double t = 1.5;
    auto b = sample_advdiff({1, 1, 1}, Direction({0.6, 0.8}), t, {100000, 51, 4});
    const double drift[2] = {0.6 * t, 0.8 * t};
    double worst = 0;
    for (std::size_t k = 0; k < 2; ++k) {
        auto m = mean_estimate(b.column(k));
        double var = m.se * m.se * double(b.n_samples);
        worst = std::max({worst, std::fabs(m.mean / drift[k] - 1), std::fabs(var / (2 * t) - 1)});
    }
    return le(worst, 0.05, "max relative deviation of mean a t and variance 2t");
}

Outcome c12() {
    auto csv = [](const SampleBatch& b) {
        std::ostringstream os;
        write_batch_csv(os, b);
        return os.str();
    };
    BatchConfig cfg{20000, 7, 3};
    FracParams p{0.5, 0.8, 0.7};
    Direction a({0.6, 0.8});
    std::vector<std::function<SampleBatch()>> runs = {
        [&] { return sample_stable_subordinator(0.6, 1, cfg); },
        [&] { return sample_inverse_subordinator(0.5, 1, cfg); },
        [&] { return sample_isotropic_stable(0.7, 1, 3, cfg); },
        [&] { return sample_advdiff(p, a, 1, cfg); },
        [&] { return sample_frac_poisson_transport({0.5, 0.5, 0.5, 1, 1}, a, 1, cfg); },
        [&] { return sample_ratio(0.4, 2, cfg); },
    };
    int same = 0, total = 0;
    for (auto& r : runs) {
        ++total;
        same += csv(r()) == csv(r());
    }
    VerifyConfig vc;
    vc.profile = Profile::fast;
    vc.seed = 7;
    vc.n_samples = 20000;
    for (auto* suite : {"residuals", "statistics"}) {
        ++total;
        same += to_json(run_suite(suite, vc), false) == to_json(run_suite(suite, vc), false);
    }
    return {same == total, std::to_string(same) + "/" + std::to_string(total) +
                               " CSV and JSON outputs byte-identical across repeated runs"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;  // 0: no runtime bound
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"special-function goldens", 1, c1},
        {"Gaussian case of l_1/2", 1, c2},
        {"Lamperti law vs subordination integral", 30, c3},
        {"convolution semigroup of U^n", 30, c4},
        {"multivariate mass and marginal", 60, c5},
        {"eigen-relation of (a.grad)^alpha", 10, c6},
        {"Fourier-side Caputo residuals", 60, c7},
        {"sampler laws by KS", 60, c8},
        {"advection-diffusion characteristic function", 60, c9},
        {"fractional Poisson P(0) and chi-square", 60, c10},
        {"classical limit moments", 30, c11},
        {"reproducibility", 0, c12},
    };
    int failed = 0, idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.budget_s == 0 || dt < c.budget_s;
        bool ok = o.ok && in_time;
        failed += !ok;
        std::string budget = c.budget_s == 0 ? "" : " < " + fmt(c.budget_s) + " s";
        std::printf("%s %2d %s: %s; time %.2f s%s%s\n", ok ? "PASS" : "FAIL", idx, c.name, o.what.c_str(), dt,
                    budget.c_str(), in_time ? "" : " (over budget)");
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", idx - failed, idx);
    return failed ? 1 : 0;
}
