#include "fracwright/laws.hpp"

#include "fracwright/errors.hpp"
#include "fracwright/fracops.hpp"
#include "fracwright/specfun.hpp"
#include "quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace fw {

namespace {

using detail::QuadResult;

void check_open_unit(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) throw DomainError(std::string(name) + " must lie in (0,1)");
}

void check_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite");
}

double W(double mu, double rho, double z) { return wright({mu, rho, kLawPrecision}, z); }

// s / t^b beyond which l_b(s,t) < e^{-50}, from the M-Wright exponent (1-b) b^{b/(1-b)} y^{1/(1-b)}
double l_cutoff(double beta) {
    double c = (1.0 - beta) * std::pow(beta, beta / (1.0 - beta));
    return std::min(100.0, std::pow(50.0 / c, 1.0 - beta));
}

// mean +- k sd of the M-Wright law l_b(., 1), scaled; lets quadrature see narrow peaks as b -> 1
void add_mass_points(std::vector<double>& pts, double beta, double scale) {
    double mean = rgamma(1.0 + beta);
    double sd = std::sqrt(std::max(0.0, 2.0 * rgamma(1.0 + 2.0 * beta) - mean * mean));
    for (double k : {-6.0, -3.0, -1.0, 0.0, 1.0, 3.0, 6.0}) pts.push_back(scale * (mean + k * sd));
}

double orthant_projection(const Direction& a, std::span<const double> x) {
    if (!a.nonnegative()) throw DomainError("laws on the positive orthant need a nonnegative direction");
    if (x.size() != a.dim()) throw DomainError("point and direction dimensions differ");
    for (double v : x)
        if (!(v >= 0.0)) throw DomainError("x must lie in the positive orthant");
    return a.dot(x);
}

// GK over consecutive breakpoints; QuadratureError if the summed estimate is above
// abs_limit, read relative once the value exceeds 1
template <class F>
double piecewise(F&& f, std::vector<double> pts, double rel_tol, double abs_limit, const char* what) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    QuadResult r;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) r += detail::gk(f, pts[i], pts[i + 1], rel_tol, 15);
    if (!std::isfinite(r.value) || r.error > abs_limit * std::max(1.0, std::fabs(r.value))) throw QuadratureError(std::string(what) + " quadrature did not converge");
    return r.value;
}

}  // namespace

double density_l(double beta, double x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    if (!(x >= 0.0)) throw DomainError("x must be >= 0");
    double tb = std::pow(t, beta);
    return W(-beta, 1.0 - beta, -x / tb) / tb;
}

double density_h(double alpha, double x, double t) {
    check_open_unit(alpha, "alpha");
    check_time(t);
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x must be positive");
    double w = W(-alpha, 1.0 - alpha, -t / std::pow(x, alpha));
    if (w == 0.0) return 0.0;
    return std::exp(std::log(alpha * t * w) - (1.0 + alpha) * std::log(x));
}

double density_U(double alpha, double beta, double x, double t) {
    check_open_unit(alpha, "alpha");
    check_open_unit(beta, "beta");
    check_time(t);
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x must be positive");
    double s1 = std::pow(x, alpha), s2 = std::pow(t, beta);
    double lo = 1e-8 * std::min(s1, s2);
    double hi = std::min(l_cutoff(alpha) * s1, l_cutoff(beta) * s2);
    auto f = [&](double u) {
        double s = std::exp(u);
        return density_h(alpha, x, s) * density_l(beta, s, t) * s;
    };
    std::vector<double> sp;
    add_mass_points(sp, alpha, s1);
    add_mass_points(sp, beta, s2);
    std::vector<double> pts{std::log(lo), std::log(hi)};
    for (double s : sp)
        if (s > lo && s < hi) pts.push_back(std::log(s));
    return piecewise(f, pts, 1e-9, 1e-6, "subordination");
}

double density_lamperti(double beta, double x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    if (!(x > 0.0)) throw DomainError("Lamperti density is unbounded at x = 0");
    double s = std::sin(beta * std::numbers::pi), c = std::cos(beta * std::numbers::pi);
    double r = std::pow(x / t, beta);
    // (sin b pi / pi) x^{b-1} t^b / (x^{2b} + 2 x^b t^b cos b pi + t^{2b}), divided through by t^{2b}
    return s / std::numbers::pi * r / x / (r * r + 2.0 * r * c + 1.0);
}

double cdf_lamperti(double beta, double x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    if (!(x > 0.0)) return 0.0;
    if (std::isinf(x)) return 1.0;
    double s = std::sin(beta * std::numbers::pi), c = std::cos(beta * std::numbers::pi);
    double u = std::pow(x / t, beta);
    return (std::atan((u + c) / s) - std::atan(c / s)) / (beta * std::numbers::pi);
}

double solution_v(double beta, double nu, const Direction& a, std::span<const double> x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    double y = orthant_projection(a, x);
    return std::pow(t, nu) * W(-beta, nu + 1.0, -y / std::pow(t, beta));
}

double density_p_multivariate(double beta, const Direction& a, std::span<const double> x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    double y = orthant_projection(a, x);
    double prod = 1.0;
    for (double v : a.components()) {
        if (!(v > 0.0)) throw DomainError("multivariate law needs every direction component > 0");
        prod *= v;
    }
    double n = double(a.dim());
    double tb = std::pow(t, beta);
    return prod * std::pow(tb, -n) * W(-beta, 1.0 - n * beta, -y / tb);
}

double solution_Un(double beta, int n, const Direction& a, std::span<const double> x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    if (n < 1) throw DomainError("n must be >= 1");
    double y = orthant_projection(a, x);
    double rho = n - n * beta;
    return std::pow(t, rho - 1.0) * W(-beta, rho, -y / std::pow(t, beta));
}

double solution_g(double beta, const Direction& a, std::span<const double> x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    double y = std::fabs(a.dot(x));
    double th = std::pow(t, 0.5 * beta);
    return 0.5 * W(-0.5 * beta, 1.0 - 0.5 * beta, -y / th) / th;
}

double solution_g_subordinated(double beta, const Direction& a, std::span<const double> x, double t) {
    check_open_unit(beta, "beta");
    check_time(t);
    double y = std::fabs(a.dot(x));
    // s = w^2 removes the 1/sqrt(s) factor
    auto f = [&](double w) {
        if (w == 0.0) return y == 0.0 ? density_l(beta, 0.0, t) / std::sqrt(std::numbers::pi) : 0.0;
        double e = std::exp(-y * y / (4.0 * w * w));
        if (e == 0.0) return 0.0;
        return e / std::sqrt(std::numbers::pi) * density_l(beta, w * w, t);
    };
    double whi = std::sqrt(l_cutoff(beta) * std::pow(t, beta));
    double wlo = std::min(y / 60.0, whi);
    std::vector<double> pts{wlo, whi};
    for (double w : {std::sqrt(std::pow(t, beta)), 0.5 * y})
        if (w > wlo && w < whi) pts.push_back(w);
    return piecewise(f, pts, 1e-9, 1e-7, "Gaussian mixture");
}

std::complex<double> charfn_advdiff(const FracParams& params, const Direction& a, std::span<const double> xi,
                                    double t) {
    params.validate();
    check_time(t);
    if (xi.size() != a.dim()) throw DomainError("frequency and direction dimensions differ");
    std::complex<double> sym = laplacian_symbol(params.theta, xi) + dir_symbol(params.alpha, a, xi);
    std::complex<double> z = -std::pow(t, params.beta) * sym;
    return mittag_leffler({params.beta, 1.0}, z);
}

double pmf_frac_poisson(double beta, double lambda, int k, double t) {
    if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("beta must lie in (0,1]");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
    if (k < 0) throw DomainError("k must be >= 0");
    check_time(t);
    auto poisson = [&](double s) {
        if (s == 0.0) return k == 0 ? 1.0 : 0.0;
        return std::exp(k * std::log(lambda * s) - lambda * s - std::lgamma(k + 1.0));
    };
    if (beta == 1.0) return poisson(t);
    double tb = std::pow(t, beta);
    auto f = [&](double s) { return poisson(s) * density_l(beta, s, t); };
    double hi = l_cutoff(beta) * tb;
    std::vector<double> pts{0.0, hi};
    double peak = k / lambda, spread = (std::sqrt(k + 1.0) + 1.0) / lambda;
    for (double s : {tb, peak - 3.0 * spread, peak, peak + 3.0 * spread})
        if (s > 0.0 && s < hi) pts.push_back(s);
    return piecewise(f, pts, 1e-9, 1e-8, "fractional Poisson");
}

}  // namespace fw
