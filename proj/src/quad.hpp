#pragma once

// Thin wrappers over Boost.Math quadrature with a uniform result type.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace fw::detail {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        l1 += o.l1;
        return *this;
    }
};

// Globally adaptive 61-point Gauss-Kronrod. Boost's own adaptive driver is
// not used: in 1.74 it compares an error measured on [-1,1] against a
// tolerance measured on [a,b], which never converges on short intervals.
// Stops when the summed error is below tol * |value|, or after 2^depth panels.
template <class F>
QuadResult gk(F&& f, double a, double b, double tol, unsigned depth = 15) {
    using rule = boost::math::quadrature::gauss_kronrod<double, 61>;
    struct Panel {
        double a, b, value, error, l1;
        bool operator<(const Panel& o) const { return error < o.error; }
    };
    auto eval = [&](double lo, double hi) {
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        auto g = [&](double t) { return f(mid + half * t); };
        Panel p{lo, hi, 0.0, 0.0, 0.0};
        double err = 0.0, l1 = 0.0;
        p.value = half * rule::integrate(g, -1.0, 1.0, 0, 0.0, &err, &l1);
        p.error = half * err;
        p.l1 = half * l1;
        return p;
    };
    QuadResult r;
    if (!(b > a)) return r;
    const std::size_t max_panels = std::size_t(1) << std::min(depth, 14u);
    std::priority_queue<Panel> heap;
    Panel first = eval(a, b);
    heap.push(first);
    double value = first.value, error = first.error, l1 = first.l1;
    while (heap.size() < max_panels) {
        if (!(error > tol * std::fabs(value)) || !std::isfinite(value)) break;
        Panel p = heap.top();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) break;
        heap.pop();
        Panel left = eval(p.a, mid), right = eval(mid, p.b);
        value += left.value + right.value - p.value;
        error += left.error + right.error - p.error;
        l1 += left.l1 + right.l1 - p.l1;
        heap.push(left);
        heap.push(right);
    }
    // recompute the sums to shed accumulated cancellation from the updates
    r.value = r.error = r.l1 = 0.0;
    while (!heap.empty()) {
        r.value += heap.top().value;
        r.error += heap.top().error;
        r.l1 += heap.top().l1;
        heap.pop();
    }
    return r;
}

// The rules are shared and non-const: some Boost releases do not const-qualify
// the bounded integrate() overloads. Lazy refinement inside is mutex protected.
inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
    static boost::math::quadrature::tanh_sinh<double> rule(15);
    return rule;
}

inline boost::math::quadrature::exp_sinh<double>& exp_sinh_rule() {
    static boost::math::quadrature::exp_sinh<double> rule(12);
    return rule;
}

// f may take (x) or (x, distance-to-nearest-endpoint)
template <class F>
QuadResult ts(F&& f, double a, double b, double tol) {
    QuadResult r;
    if (!(b > a)) return r;
    std::size_t levels = 0;
    r.value = tanh_sinh_rule().integrate(f, a, b, tol, &r.error, &r.l1, &levels);
    return r;
}

// [a, inf)
template <class F>
QuadResult es(F&& f, double a, double tol) {
    QuadResult r;
    std::size_t levels = 0;
    r.value = exp_sinh_rule().integrate(f, a, std::numeric_limits<double>::infinity(), tol,
                                        &r.error, &r.l1, &levels);
    return r;
}

}  // namespace fw::detail
