#pragma once

#include "fracwright/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fw {

enum class ProcessTag { H_alpha, L_beta, S_2theta, W_advdiff, Y_fracpoisson, ratio_HH, B_driftless };

std::string to_string(ProcessTag tag);

struct BatchConfig {
    std::size_t n_samples = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 4;  // part of the reproducibility key
};

// n_samples rows of dim reals, stored row-major.
struct SampleBatch {
    ProcessTag process_tag = ProcessTag::H_alpha;
    double t = 1.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::size_t dim = 1;
    std::vector<double> values;

    std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
    double at(std::size_t i, std::size_t k = 0) const { return values[i * dim + k]; }
    // component k of every sample
    std::vector<double> column(std::size_t k = 0) const;
};

// H^alpha_t through Kanter's representation; alpha = 1 gives t
SampleBatch sample_stable_subordinator(double alpha, double t, const BatchConfig& cfg);

// L^beta_t = (t / H^beta_1)^beta
SampleBatch sample_inverse_subordinator(double beta, double t, const BatchConfig& cfg);

// sqrt(2 H^theta_t) Z with Z standard normal in R^dim; theta = 1 is tagged B_driftless
SampleBatch sample_isotropic_stable(double theta, double t, std::size_t dim, const BatchConfig& cfg);

// S_{2 theta}(L) + a H^alpha_L with one L = L^beta_t per sample
SampleBatch sample_advdiff(const FracParams& params, const Direction& a, double t, const BatchConfig& cfg);

// the drift time H^alpha_L alone, L = L^beta_t
SampleBatch sample_subordinated_drift(double alpha, double beta, double t, const BatchConfig& cfg);

// tau N(L/tau) (1,...,1) + a H^alpha_L with N a rate-lambda Poisson process and a shared L.
// With drift = false the subordinator term is dropped (the a = 0 case).
SampleBatch sample_frac_poisson_transport(const FracParams& params, const Direction& a, double t,
                                          const BatchConfig& cfg, bool drift = true);

// t H1/H2 for independent beta-stable subordinators at time 1
SampleBatch sample_ratio(double beta, double t, const BatchConfig& cfg);

}  // namespace fw
