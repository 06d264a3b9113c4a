#pragma once

#include "fracwright/types.hpp"

#include <complex>
#include <functional>
#include <limits>
#include <span>

namespace fw {

using TimeFn = std::function<double(double)>;
using FieldFn = std::function<double(std::span<const double>)>;

struct CaputoSpec {
    double order = 0.5;     // in (0,1]; order 1 is the ordinary derivative
    int node_count = 512;   // >= 64, caps the tanh-sinh node budget
    double t_min = 1e-10;   // smallest admissible t
};

struct DirDerivSpec {
    double alpha = 0.5;
    Direction direction{std::vector<double>{1.0}};
    double s_max = 1e3;
    double tolerance = 1e-8;  // in [1e-12, 1e-4], relative to max(1, |f(x)|)
};

// (1/Gamma(1-b)) int_0^t f'(s) (t-s)^{-b} ds.
// Without df, f' comes from central differences with step 1e-5 (scaled down
// near s = 0 so the stencil stays inside [0, t]).
double caputo_derivative(const CaputoSpec& spec, const TimeFn& f, double t, const TimeFn& df = {});

// Riemann-Liouville derivative of order in (0,1]: Caputo plus f(0+) t^{-b} / Gamma(1-b).
// DomainError when f(0+) is not finite.
double rl_derivative(const CaputoSpec& spec, const TimeFn& f, double t, const TimeFn& df = {});

// (a.grad)^alpha f(x) = int_0^inf (f(x) - f(x - s a)) alpha s^{-alpha-1} / Gamma(1-alpha) ds.
// f is sampled on both sides of x along a for the small-s Taylor limit.
// Throws TailError when the bound on the part beyond s_max exceeds the tolerance,
// QuadratureError when the remaining pieces do.
double frac_dir_derivative(const DirDerivSpec& spec, const FieldFn& f, std::span<const double> x);

// (-i a.xi)^alpha on the principal branch
std::complex<double> dir_symbol(double alpha, const Direction& a, std::span<const double> xi);

// ||xi||^{2 theta}
double laplacian_symbol(double theta, std::span<const double> xi);

// z^eta / Gamma(1+eta) for z > 0, else 0; eta > -1
double homogeneous_plus(double eta, double z);

struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

// int_support e^{-lambda t} f(t) dt; QuadratureError if the estimate exceeds 1e-7
double laplace_transform(const TimeFn& f, double lambda, Interval support = {});

}  // namespace fw
