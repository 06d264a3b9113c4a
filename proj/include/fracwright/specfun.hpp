#pragma once

#include <complex>

namespace fw {

struct WrightSpec {
    double mu = 0.0;
    double rho = 1.0;
    // relative error goal, must lie in [1e-14, 1e-4]
    double precision_target = 1e-12;
};

struct MLSpec {
    double beta = 1.0;
    double gamma = 1.0;
};

// integral: stable-density form, only for the M-Wright case rho = 1 + mu, mu < 0, z < 0
enum class WrightPath { automatic, series, integral, contour, multiprecision };
enum class MLPath { automatic, series, integral };

struct Estimate {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
};

// 1/Gamma(x); exactly zero at the poles of Gamma
double rgamma(double x);

// W_{mu,rho}(z) = sum_k z^k / (k! Gamma(mu k + rho)), mu > -1.
// Throws DomainError for mu <= -1 and AccuracyError when no evaluation
// path can certify precision_target.
double wright(const WrightSpec& spec, double z);

// Same as wright() but forcing a path, and reporting the error estimate.
// A forced path that cannot reach the target throws AccuracyError.
Estimate wright_estimate(const WrightSpec& spec, double z, WrightPath path = WrightPath::automatic);

// E_{beta,gamma}(z) for real z, relative error about 1e-12 where certified.
// The spectral integral path exists for z < 0, 0 < beta < 1 and gamma in {1, beta}.
double mittag_leffler(const MLSpec& spec, double z, MLPath path = MLPath::automatic);

// complex argument, power series in double and then in 50-digit arithmetic
std::complex<double> mittag_leffler(const MLSpec& spec, std::complex<double> z);

}  // namespace fw
