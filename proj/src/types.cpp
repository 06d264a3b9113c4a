#include "fracwright/types.hpp"

#include "fracwright/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fw {

namespace {

double norm2(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

void check_exponent(double v, const char* name) {
    if (!(v > 0.0 && v <= 1.0)) throw DomainError(std::string(name) + " must lie in (0,1]");
}

}  // namespace

void FracParams::validate() const {
    check_exponent(alpha, "alpha");
    check_exponent(beta, "beta");
    check_exponent(theta, "theta");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be >= 0");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be > 0");
}

Direction::Direction(std::vector<double> a) : a_(std::move(a)) {
    if (a_.empty()) throw DomainError("direction needs at least one component");
    for (double v : a_)
        if (!std::isfinite(v)) throw DomainError("direction components must be finite");
    if (std::fabs(norm2(a_) - 1.0) > 1e-12) throw DomainError("direction must have unit norm");
}

Direction Direction::normalized(std::vector<double> a, double slack) {
    if (a.empty()) throw DomainError("direction needs at least one component");
    double n = norm2(a);
    if (!std::isfinite(n) || std::fabs(n - 1.0) > slack)
        throw DomainError("direction norm differs from 1 by more than the allowed slack");
    for (double& v : a) v /= n;
    return Direction(std::move(a));
}

bool Direction::nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return v >= 0.0; });
}

double Direction::dot(std::span<const double> x) const {
    if (x.size() != a_.size()) throw DomainError("point and direction dimensions differ");
    return std::inner_product(a_.begin(), a_.end(), x.begin(), 0.0);
}

}  // namespace fw
