#pragma once

#include "fracwright/types.hpp"

#include <complex>
#include <span>

namespace fw {

// Wright evaluations inside the laws run at this relative target.
inline constexpr double kLawPrecision = 1e-10;

// density of the inverse stable subordinator, t^{-b} W_{-b,1-b}(-x/t^b)
double density_l(double beta, double x, double t);

// density of the stable subordinator at time t, via (alpha t/x) l_alpha(t, x); x > 0
double density_h(double alpha, double x, double t);

// int_0^inf h_alpha(x,s) l_beta(s,t) ds by adaptive quadrature in log s; x > 0
double density_U(double alpha, double beta, double x, double t);

// law of t H1/H2 for two independent beta-stable subordinators; x > 0, beta < 1
double density_lamperti(double beta, double x, double t);
double cdf_lamperti(double beta, double x, double t);

// t^nu W_{-b,nu+1}(-a.x/t^b) on the positive orthant
double solution_v(double beta, double nu, const Direction& a, std::span<const double> x, double t);

// a_1...a_n t^{-n b} W_{-b,1-n b}(-a.x/t^b), n = dim of a; needs every a_k > 0
double density_p_multivariate(double beta, const Direction& a, std::span<const double> x, double t);

// t^{n-n b-1} W_{-b,n-n b}(-a.x/t^b); the order n is independent of the dimension of a
double solution_Un(double beta, int n, const Direction& a, std::span<const double> x, double t);

// (1/2) t^{-b/2} W_{-b/2,1-b/2}(-|a.x|/t^{b/2}) on the whole space
double solution_g(double beta, const Direction& a, std::span<const double> x, double t);

// same law as the Gaussian mixture int_0^inf e^{-y^2/4s}/sqrt(4 pi s) l_beta(s,t) ds, y = a.x
double solution_g_subordinated(double beta, const Direction& a, std::span<const double> x, double t);

// E_b(-t^b ||xi||^{2 theta} - t^b (-i a.xi)^alpha)
std::complex<double> charfn_advdiff(const FracParams& params, const Direction& a, std::span<const double> xi,
                                    double t);

// P(N(L_t) = k) for a rate-lambda Poisson process on the inverse stable clock
double pmf_frac_poisson(double beta, double lambda, int k, double t);

}  // namespace fw
