#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fw {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

// survival function of the Kolmogorov distribution, P(K > lambda)
double kolmogorov_q(double lambda);

// p-values from the asymptotic Kolmogorov law with Stephens' finite-n factor
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

// observed counts against cell probabilities (which should sum to 1); df = cells - 1
ChiSquareResult chi_square(std::span<const double> observed, std::span<const double> probs);

struct MeanEstimate {
    double mean = 0.0;
    double se = 0.0;
};

MeanEstimate mean_estimate(std::span<const double> x);

struct CharFnEstimate {
    std::complex<double> value;
    double se = 0.0;  // sqrt((var cos + var sin) / N)
};

// mean of exp(i xi . x) over rows of a row-major n x dim array
CharFnEstimate empirical_charfn(std::span<const double> rows, std::size_t dim, std::span<const double> xi);

// tabulated CDF of a density on [lo, hi]: exact segment integrals at the nodes,
// cubic Hermite in between (slopes are the density values)
class CdfTable {
public:
    CdfTable(const std::function<double(double)>& pdf, double lo, double hi, std::size_t nodes);
    double operator()(double x) const;
    // mass captured on [lo, hi]
    double total() const { return f_.back(); }

private:
    double lo_, h_;
    std::vector<double> f_, d_;
};

}  // namespace fw
