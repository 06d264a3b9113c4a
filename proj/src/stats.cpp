#include "fracwright/stats.hpp"

#include "fracwright/errors.hpp"
#include "quad.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace fw {

double kolmogorov_q(double lambda) {
    if (!(lambda > 0)) return 1.0;
    constexpr double pi = 3.14159265358979323846;
    if (lambda < 1.0) {
        // Jacobi theta form, fast for small lambda
        double s = 0.0;
        for (int k = 1; k <= 20; ++k) {
            double e = (2 * k - 1) * (2 * k - 1) * pi * pi / (8 * lambda * lambda);
            s += std::exp(-e);
        }
        return 1.0 - std::sqrt(2 * pi) / lambda * s;
    }
    double s = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = std::exp(-2.0 * k * k * lambda * lambda);
        s += (k % 2 ? term : -term);
        if (term < 1e-17) break;
    }
    return std::clamp(2 * s, 0.0, 1.0);
}

namespace {

double stephens(double d, double n) {
    double rn = std::sqrt(n);
    return kolmogorov_q((rn + 0.12 + 0.11 / rn) * d);
}

}  // namespace

KsResult ks_test(std::vector<double> x, const std::function<double(double)>& cdf) {
    if (x.empty()) throw DomainError("KS test needs samples");
    std::sort(x.begin(), x.end());
    const double n = double(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double f = cdf(x[i]);
        d = std::max({d, double(i + 1) / n - f, f - double(i) / n});
    }
    return {d, stephens(d, n)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw DomainError("KS test needs samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = double(a.size()), nb = double(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        d = std::max(d, std::fabs(double(i) / na - double(j) / nb));
    }
    return {d, stephens(d, na * nb / (na + nb))};
}

ChiSquareResult chi_square(std::span<const double> observed, std::span<const double> probs) {
    if (observed.size() != probs.size() || observed.size() < 2) throw DomainError("chi-square needs matching cells");
    double n = 0.0;
    for (double o : observed) n += o;
    double stat = 0.0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        double e = n * probs[k];
        if (!(e > 0)) throw DomainError("chi-square cell with zero expectation");
        stat += (observed[k] - e) * (observed[k] - e) / e;
    }
    int df = int(observed.size()) - 1;
    return {stat, df, boost::math::gamma_q(0.5 * df, 0.5 * stat)};
}

MeanEstimate mean_estimate(std::span<const double> x) {
    if (x.size() < 2) throw DomainError("need at least two samples");
    double m = 0.0;
    for (double v : x) m += v;
    m /= double(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    double var = ss / double(x.size() - 1);
    return {m, std::sqrt(var / double(x.size()))};
}

CharFnEstimate empirical_charfn(std::span<const double> rows, std::size_t dim, std::span<const double> xi) {
    if (dim == 0 || xi.size() != dim || rows.size() % dim) throw DomainError("probe dimension mismatch");
    const std::size_t n = rows.size() / dim;
    if (n < 2) throw DomainError("need at least two samples");
    double sc = 0, ss = 0, qc = 0, qs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double ph = 0.0;
        for (std::size_t k = 0; k < dim; ++k) ph += xi[k] * rows[i * dim + k];
        double c = std::cos(ph), s = std::sin(ph);
        sc += c;
        ss += s;
        qc += c * c;
        qs += s * s;
    }
    double nn = double(n);
    double mc = sc / nn, ms = ss / nn;
    double vc = (qc - nn * mc * mc) / (nn - 1), vs = (qs - nn * ms * ms) / (nn - 1);
    return {{mc, ms}, std::sqrt(std::max(0.0, vc + vs) / nn)};
}

CdfTable::CdfTable(const std::function<double(double)>& pdf, double lo, double hi, std::size_t nodes)
    : lo_(lo), h_((hi - lo) / double(nodes - 1)), f_(nodes), d_(nodes) {
    if (nodes < 2 || !(hi > lo)) throw DomainError("CDF table needs an interval and two nodes");
    d_[0] = pdf(lo);
    f_[0] = 0.0;
    for (std::size_t i = 1; i < nodes; ++i) {
        double a = lo + double(i - 1) * h_, b = lo + double(i) * h_;
        f_[i] = f_[i - 1] + detail::gk(pdf, a, b, 1e-12, 6).value;
        d_[i] = pdf(b);
    }
}

double CdfTable::operator()(double x) const {
    if (x <= lo_) return 0.0;
    double u = (x - lo_) / h_;
    auto i = std::size_t(u);
    if (i + 1 >= f_.size()) return std::min(1.0, f_.back());
    double s = u - double(i);
    double s2 = s * s, s3 = s2 * s;
    double v = (2 * s3 - 3 * s2 + 1) * f_[i] + (s3 - 2 * s2 + s) * h_ * d_[i] + (-2 * s3 + 3 * s2) * f_[i + 1] +
               (s3 - s2) * h_ * d_[i + 1];
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace fw
