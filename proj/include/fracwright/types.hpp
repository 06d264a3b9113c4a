#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fw {

// Exponents of the fractional operators plus the Poisson rate and jump size.
struct FracParams {
    double alpha = 0.5;  // order of the directional derivative / drift subordinator
    double beta = 0.5;   // order of the time derivative / inverse subordinator
    double theta = 0.5;  // order of the fractional Laplacian
    double lambda = 1.0;
    double tau = 1.0;

    // throws DomainError unless exponents are in (0,1], lambda >= 0, tau > 0
    void validate() const;
};

// Unit vector a; components may be negative unless a law on the positive
// orthant asks for nonnegative().
class Direction {
public:
    // throws DomainError unless | ||a|| - 1 | <= 1e-12
    explicit Direction(std::vector<double> a);

    // rescales a vector whose norm is within `slack` of 1, rejects otherwise
    static Direction normalized(std::vector<double> a, double slack = 1e-6);

    std::size_t dim() const { return a_.size(); }
    const std::vector<double>& components() const { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }
    bool nonnegative() const;
    double dot(std::span<const double> x) const;

private:
    std::vector<double> a_;
};

}  // namespace fw
