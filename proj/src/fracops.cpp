#include "fracwright/fracops.hpp"

#include "fracwright/errors.hpp"
#include "fracwright/specfun.hpp"
#include "quad.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>

namespace fw {

namespace {

using detail::QuadResult;

void check_caputo(const CaputoSpec& spec, double t) {
    if (!(spec.order > 0.0 && spec.order <= 1.0)) throw DomainError("Caputo order must lie in (0,1]");
    if (spec.node_count < 64) throw DomainError("node_count must be at least 64");
    if (!(spec.t_min > 0.0)) throw DomainError("t_min must be positive");
    if (!(t >= spec.t_min) || !std::isfinite(t)) throw DomainError("t must be finite and >= t_min");
}

// The initial tanh-sinh row has about 13 nodes and each refinement doubles it.
boost::math::quadrature::tanh_sinh<double>& rule_for_budget(int node_count) {
    static std::array<std::unique_ptr<boost::math::quadrature::tanh_sinh<double>>, 16> rules = [] {
        std::array<std::unique_ptr<boost::math::quadrature::tanh_sinh<double>>, 16> r;
        for (std::size_t k = 2; k < r.size(); ++k)
            r[k] = std::make_unique<boost::math::quadrature::tanh_sinh<double>>(k);
        return r;
    }();
    std::size_t levels = 2;
    while (levels + 1 < rules.size() && 13.0 * std::ldexp(1.0, int(levels + 1)) <= node_count) ++levels;
    return *rules[levels];
}

double central_diff(const TimeFn& f, double s) {
    double h = 1e-5 * std::min(1.0, s);
    if (h < 1e-290) return 0.0;
    return (f(s + h) - f(s - h)) / (2.0 * h);
}

}  // namespace

double caputo_derivative(const CaputoSpec& spec, const TimeFn& f, double t, const TimeFn& df) {
    check_caputo(spec, t);
    const double b = spec.order;
    if (b == 1.0) return df ? df(t) : central_diff(f, t);
    const double p = 1.0 / (1.0 - b);
    // s = t (1 - u^p) maps the weakly singular kernel onto a smooth one in u
    auto integrand = [&](double u, double uc) {
        double one_minus = u > 0.5 ? -std::expm1(p * std::log1p(-uc)) : 1.0 - std::pow(u, p);
        double s = t * one_minus;
        return df ? df(s) : central_diff(f, s);
    };
    double err = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    double val = rule_for_budget(spec.node_count).integrate(integrand, 0.0, 1.0, 1e-10, &err, &l1, &levels);
    double scale = std::pow(t, 1.0 - b) * p * rgamma(1.0 - b);
    val *= scale;
    err *= std::fabs(scale);
    if (!std::isfinite(val) || err > 1e-6 * std::max(1.0, std::fabs(val)))
        throw QuadratureError("Caputo quadrature did not converge");
    return val;
}

double rl_derivative(const CaputoSpec& spec, const TimeFn& f, double t, const TimeFn& df) {
    check_caputo(spec, t);
    double f0 = f(0.0);
    if (!std::isfinite(f0)) throw DomainError("f(0+) must be finite");
    return caputo_derivative(spec, f, t, df) + f0 * std::pow(t, -spec.order) * rgamma(1.0 - spec.order);
}

double frac_dir_derivative(const DirDerivSpec& spec, const FieldFn& f, std::span<const double> x) {
    const double alpha = spec.alpha;
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
    if (!(spec.tolerance >= 1e-12 && spec.tolerance <= 1e-4)) throw DomainError("tolerance must lie in [1e-12, 1e-4]");
    if (!(spec.s_max > 1.0) || !std::isfinite(spec.s_max)) throw DomainError("s_max must be finite and > 1");
    const Direction& a = spec.direction;
    if (x.size() != a.dim()) throw DomainError("point and direction dimensions differ");

    std::vector<double> buf(x.size());
    auto g = [&](double s) {
        for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = x[i] - s * a[i];
        return f(std::span<const double>(buf));
    };

    const double g0 = g(0.0);
    if (!std::isfinite(g0)) throw DomainError("f(x) is not finite");
    const double tol_abs = spec.tolerance * std::max(1.0, std::fabs(g0));
    const double rg = rgamma(1.0 - alpha);

    // (0,1): s = v^p with p = 1/(1-alpha) turns alpha s^{-alpha-1} ds into alpha p ds/s.
    const double p = 1.0 / (1.0 - alpha);
    const double h = 1e-4, s_taylor = 1e-5;
    const double d1 = (g(h) - g(-h)) / (2.0 * h);
    const double d2 = (g(h) - 2.0 * g0 + g(-h)) / (h * h);
    auto near = [&](double v) {
        double s = std::pow(v, p);
        double q = s < s_taylor ? -d1 - 0.5 * s * d2 : (g0 - g(s)) / s;
        return alpha * p * q;
    };
    QuadResult part = detail::gk(near, 0.0, 1.0, 0.1 * spec.tolerance, 15);

    // [1, s_max] in log s, against c = g(s_max) so the far field is only a bound
    const double c = g(spec.s_max);
    auto mid = [&](double y) { return (c - g(std::exp(y))) * alpha * std::exp(-alpha * y); };
    part += detail::gk(mid, 0.0, std::log(spec.s_max), 0.1 * spec.tolerance, 15);

    double value = (part.value + (g0 - c)) * rg;
    double err = part.error * rg;

    double sup = 0.0;
    for (int j = 0; j <= 48; ++j) {
        double gj = g(std::ldexp(spec.s_max, j));
        sup = std::max(sup, std::isfinite(gj) ? std::fabs(gj - c) : HUGE_VAL);
    }
    double tail = sup * std::pow(spec.s_max, -alpha) * rg;
    if (tail > tol_abs) throw TailError("truncation bound beyond s_max exceeds the tolerance");
    if (!std::isfinite(value) || err + tail > tol_abs)
        throw QuadratureError("directional derivative quadrature did not reach the tolerance");
    return value;
}

std::complex<double> dir_symbol(double alpha, const Direction& a, std::span<const double> xi) {
    double y = a.dot(xi);
    if (y == 0.0) return {0.0, 0.0};
    double mag = std::pow(std::fabs(y), alpha);
    double ph = -0.5 * std::numbers::pi * alpha * (y > 0 ? 1.0 : -1.0);
    return std::polar(mag, ph);
}

double laplacian_symbol(double theta, std::span<const double> xi) {
    double s = 0.0;
    for (double v : xi) s += v * v;
    if (s == 0.0) return 0.0;
    return std::pow(s, theta);
}

double homogeneous_plus(double eta, double z) {
    if (!(eta > -1.0)) throw DomainError("eta must exceed -1");
    if (!(z > 0.0)) return 0.0;
    return std::pow(z, eta) * rgamma(1.0 + eta);
}

double laplace_transform(const TimeFn& f, double lambda, Interval support) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    if (!(support.hi > support.lo) || !std::isfinite(support.lo))
        throw DomainError("support must be a nonempty interval with finite lower end");
    auto w = [&](double t) { return std::exp(-lambda * (t - support.lo)) * f(t); };
    QuadResult r;
    double split = support.lo + 1.0 / lambda;
    if (std::isfinite(support.hi) && support.hi <= split) {
        r = detail::ts(w, support.lo, support.hi, 1e-10);
    } else {
        r = detail::ts(w, support.lo, split, 1e-10);
        if (std::isfinite(support.hi))
            r += detail::ts(w, split, support.hi, 1e-10);
        else
            r += detail::es(w, split, 1e-10);
    }
    double scale = std::exp(-lambda * support.lo);
    if (!std::isfinite(r.value) || r.error * scale > 1e-7)
        throw QuadratureError("Laplace transform quadrature did not converge");
    return r.value * scale;
}

}  // namespace fw
