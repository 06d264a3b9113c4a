#include "fracwright/montecarlo.hpp"

#include "fracwright/errors.hpp"
#include "fracwright/philox.hpp"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

namespace fw {

namespace {

using Draw = std::function<void(PhiloxEngine&, double*)>;

void check_time(double t) {
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("time must be positive and finite");
}

void check_open_exponent(double e, const char* name) {
    if (!(e > 0 && e < 1)) throw DomainError(std::string(name) + " must lie in (0,1)");
}

void check_exponent(double e, const char* name) {
    if (!(e > 0 && e <= 1)) throw DomainError(std::string(name) + " must lie in (0,1]");
}

// Sample i comes from stream i mod W at index i div W, so the output is fixed
// by (seed, W) whatever the thread timing.
SampleBatch run(ProcessTag tag, double t, std::size_t dim, const BatchConfig& cfg, const Draw& draw) {
    if (cfg.n_samples == 0) throw SeedError("zero-length batch");
    if (cfg.workers == 0) throw DomainError("worker count must be at least 1");
    SampleBatch b;
    b.process_tag = tag;
    b.t = t;
    b.n_samples = cfg.n_samples;
    b.seed = cfg.seed;
    b.workers = cfg.workers;
    b.dim = dim;
    b.values.resize(cfg.n_samples * dim);

    const std::size_t w_count = cfg.workers;
    auto work = [&](std::uint32_t w) {
        for (std::size_t i = w, j = 0; i < b.n_samples; i += w_count, ++j) {
            PhiloxEngine eng(cfg.seed, w, j);
            draw(eng, b.values.data() + i * dim);
        }
    };
    std::size_t active = std::min<std::size_t>(w_count, b.n_samples);
    if (active == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(active);
        for (std::size_t w = 0; w < active; ++w) pool.emplace_back(work, std::uint32_t(w));
    }
    return b;
}

double exponential(PhiloxEngine& eng) { return -std::log(eng.uniform()); }

double normal(PhiloxEngine& eng) {
    boost::random::normal_distribution<double> nd;
    return nd(eng);
}

// log H^alpha_1 from Kanter's formula with the exponents folded in:
// ((1-a)/a) log A(u) = log sin(a pi u) + ((1-a)/a) log sin((1-a) pi u) - log sin(pi u) / a
double log_stable_unit(double alpha, double u, double e) {
    constexpr double pi = std::numbers::pi;
    double r = (1 - alpha) / alpha;
    return std::log(std::sin(alpha * pi * u)) - std::log(std::sin(pi * u)) / alpha +
           r * (std::log(std::sin((1 - alpha) * pi * u)) - std::log(e));
}

double stable(PhiloxEngine& eng, double alpha, double t) {
    if (alpha == 1) return t;
    double u = eng.uniform();
    double e = exponential(eng);
    return std::exp(std::log(t) / alpha + log_stable_unit(alpha, u, e));
}

double inverse(PhiloxEngine& eng, double beta, double t) {
    if (beta == 1) return t;
    double u = eng.uniform();
    double e = exponential(eng);
    return std::exp(beta * (std::log(t) - log_stable_unit(beta, u, e)));
}

}  // namespace

std::string to_string(ProcessTag tag) {
    switch (tag) {
        case ProcessTag::H_alpha: return "H_alpha";
        case ProcessTag::L_beta: return "L_beta";
        case ProcessTag::S_2theta: return "S_2theta";
        case ProcessTag::W_advdiff: return "W_advdiff";
        case ProcessTag::Y_fracpoisson: return "Y_fracpoisson";
        case ProcessTag::ratio_HH: return "ratio_HH";
        case ProcessTag::B_driftless: return "B_driftless";
    }
    return "unknown";
}

std::vector<double> SampleBatch::column(std::size_t k) const {
    std::vector<double> out(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) out[i] = at(i, k);
    return out;
}

SampleBatch sample_stable_subordinator(double alpha, double t, const BatchConfig& cfg) {
    check_exponent(alpha, "alpha");
    check_time(t);
    return run(ProcessTag::H_alpha, t, 1, cfg, [=](PhiloxEngine& eng, double* out) { *out = stable(eng, alpha, t); });
}

SampleBatch sample_inverse_subordinator(double beta, double t, const BatchConfig& cfg) {
    check_exponent(beta, "beta");
    check_time(t);
    return run(ProcessTag::L_beta, t, 1, cfg, [=](PhiloxEngine& eng, double* out) { *out = inverse(eng, beta, t); });
}

SampleBatch sample_isotropic_stable(double theta, double t, std::size_t dim, const BatchConfig& cfg) {
    check_exponent(theta, "theta");
    check_time(t);
    if (dim == 0) throw DomainError("dimension must be at least 1");
    auto tag = theta == 1 ? ProcessTag::B_driftless : ProcessTag::S_2theta;
    return run(tag, t, dim, cfg, [=](PhiloxEngine& eng, double* out) {
        double scale = std::sqrt(2 * stable(eng, theta, t));
        for (std::size_t k = 0; k < dim; ++k) out[k] = scale * normal(eng);
    });
}

SampleBatch sample_advdiff(const FracParams& params, const Direction& a, double t, const BatchConfig& cfg) {
    params.validate();
    check_time(t);
    const auto p = params;
    const std::vector<double> dir = a.components();
    return run(ProcessTag::W_advdiff, t, dir.size(), cfg, [p, dir, t](PhiloxEngine& eng, double* out) {
        double l = inverse(eng, p.beta, t);
        double h = stable(eng, p.alpha, l);
        double scale = std::sqrt(2 * stable(eng, p.theta, l));
        for (std::size_t k = 0; k < dir.size(); ++k) out[k] = scale * normal(eng) + dir[k] * h;
    });
}

SampleBatch sample_subordinated_drift(double alpha, double beta, double t, const BatchConfig& cfg) {
    check_exponent(alpha, "alpha");
    check_exponent(beta, "beta");
    check_time(t);
    return run(ProcessTag::H_alpha, t, 1, cfg, [=](PhiloxEngine& eng, double* out) {
        double l = inverse(eng, beta, t);
        *out = stable(eng, alpha, l);
    });
}

SampleBatch sample_frac_poisson_transport(const FracParams& params, const Direction& a, double t,
                                          const BatchConfig& cfg, bool drift) {
    params.validate();
    if (!(params.lambda > 0)) throw DomainError("lambda must be positive");
    check_time(t);
    const auto p = params;
    const std::vector<double> dir = a.components();
    return run(ProcessTag::Y_fracpoisson, t, dir.size(), cfg, [p, dir, t, drift](PhiloxEngine& eng, double* out) {
        double l = inverse(eng, p.beta, t);
        boost::random::poisson_distribution<long long, double> pd(p.lambda * l / p.tau);
        double jumps = p.tau * double(pd(eng));
        double h = drift ? stable(eng, p.alpha, l) : 0.0;
        for (std::size_t k = 0; k < dir.size(); ++k) out[k] = jumps + dir[k] * h;
    });
}

SampleBatch sample_ratio(double beta, double t, const BatchConfig& cfg) {
    check_open_exponent(beta, "beta");
    check_time(t);
    return run(ProcessTag::ratio_HH, t, 1, cfg, [=](PhiloxEngine& eng, double* out) {
        double u1 = eng.uniform(), e1 = exponential(eng);
        double u2 = eng.uniform(), e2 = exponential(eng);
        *out = t * std::exp(log_stable_unit(beta, u1, e1) - log_stable_unit(beta, u2, e2));
    });
}

}  // namespace fw
