#include "fracwright/specfun.hpp"

#include "fracwright/errors.hpp"
#include "quad.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace fw {

namespace {

namespace bm = boost::math;
using bm::policies::ignore_error;
using quiet = bm::policies::policy<bm::policies::domain_error<ignore_error>,
                                   bm::policies::pole_error<ignore_error>,
                                   bm::policies::overflow_error<ignore_error>,
                                   bm::policies::underflow_error<ignore_error>,
                                   bm::policies::evaluation_error<ignore_error>>;
using mpf = boost::multiprecision::cpp_bin_float_50;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = bm::constants::pi<double>();
constexpr int kMaxTerms = 10000;
// relative precision we trust from the 50-digit path, with head room for
// the gamma evaluations
const mpf kMpEps = mpf("1e-46");

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

// log|1/Gamma(x)| and its sign; x must not be a pole
double log_rgamma(double x, int& sign) {
    int s = 1;
    double lg = bm::lgamma(x, &s, quiet());
    sign = s;
    return -lg;
}

// log of an upper bound on |1/Gamma(x)|; for x < 0 uses |1/Gamma(x)| <= Gamma(1-x)/pi
double log_rgamma_env(double x) {
    if (x > 0.0) return -bm::lgamma(x, quiet());
    return bm::lgamma(1.0 - x, quiet()) - std::log(kPi);
}

// Bound on sum_{j>k} |t_j| from a log-envelope that is concave in j past the
// stopping index, so the envelope ratio at k+1 bounds every later ratio.
template <class Env>
double tail_bound(Env&& env, long k) {
    double e1 = env(k + 1), e2 = env(k + 2), e3 = env(k + 3);
    if (e1 == -HUGE_VAL) return 0.0;
    double lr = std::max(e2 - e1, e3 - e2);
    if (!(lr < 0.0)) return HUGE_VAL;
    return std::exp(e1) / -std::expm1(lr);
}

struct Sum {
    double value = 0.0;
    double error = std::numeric_limits<double>::infinity();
    bool ok = false;
};

// Kahan summation with a running bound on the accumulated rounding error.
// term(k, relerr) returns the k-th term and its relative error in units of eps.
template <class Term, class Env>
Sum sum_series(Term&& term, Env&& env, long k_min, double target) {
    Sum out;
    if (k_min > kMaxTerms) return out;
    double s = 0.0, comp = 0.0, err = 0.0;
    int small = 0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        double rel = 0.0;
        double tk = term(k, rel);
        if (!std::isfinite(tk)) return out;
        double y = tk - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
        err += std::fabs(tk) * kEps * (rel + 2.0);
        if (k >= k_min && std::fabs(tk) <= target * 1e-2 * std::fabs(s)) {
            if (++small == 3) {
                out.value = s;
                out.error = err + 2.0 * kEps * std::fabs(s) + tail_bound(env, k);
                out.ok = true;
                return out;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

bool accepted(const Sum& r, double target) {
    if (!r.ok || !std::isfinite(r.value) || !std::isfinite(r.error)) return false;
    if (r.error <= target * std::fabs(r.value)) return true;
    return std::fabs(r.value) < 1e-300 && r.error < 1e-300;
}

// index beyond which the terms of sum z^k / Gamma(a k + b) / k!^c decrease
long peak_index(double az, double growth_exp, double c) {
    if (az == 0.0) return 0;
    double kp = std::pow(az * c, 1.0 / growth_exp);
    if (!(kp < 1e9)) return std::numeric_limits<long>::max() / 4;
    return static_cast<long>(std::ceil(kp)) + 1;
}

auto wright_env(double mu, double rho, double z) {
    double lz = z != 0.0 ? std::log(std::fabs(z)) : -HUGE_VAL;
    return [=](long k) { return k * lz - bm::lgamma(double(k) + 1.0, quiet()) + log_rgamma_env(mu * k + rho); };
}

auto ml_env(double beta, double gam, double az) {
    double lz = az != 0.0 ? std::log(az) : -HUGE_VAL;
    return [=](long k) { return k * lz + log_rgamma_env(beta * k + gam); };
}

Sum wright_series(double mu, double rho, double z, double target) {
    double az = std::fabs(z);
    double c = mu == 0.0 ? 1.0 : std::pow(std::fabs(mu), -mu);
    long kmin = peak_index(az, 1.0 + mu, c);
    double lz = az > 0 ? std::log(az) : 0.0;
    double pk = 1.0;  // z^k/k!
    auto term = [&](int k, double& rel) -> double {
        if (k > 0) pk *= z / k;
        double arg = mu * k + rho;
        if (is_pole(arg)) return 0.0;
        if (k < 150 && std::fabs(arg) < 160.0 && std::isfinite(pk) && pk != 0.0) {
            rel = 8.0 + k;
            return pk * rgamma(arg);
        }
        if (z == 0.0) return 0.0;
        int sg = 1;
        double lr = log_rgamma(arg, sg);
        double lfac = bm::lgamma(double(k) + 1.0, quiet());
        double lt = k * lz - lfac + lr;
        rel = 8.0 + std::fabs(k * lz) + std::fabs(lfac) + std::fabs(lr);
        double sign = (z < 0 && (k % 2)) ? -sg : sg;
        return sign * std::exp(lt);
    };
    return sum_series(term, wright_env(mu, rho, z), kmin, target);
}

struct MpSum {
    double value = 0.0;
    double error = std::numeric_limits<double>::infinity();
    bool ok = false;
};

MpSum wright_series_mp(double mu, double rho, double z, double target) {
    MpSum out;
    double az = std::fabs(z);
    double c = mu == 0.0 ? 1.0 : std::pow(std::fabs(mu), -mu);
    long kmin = peak_index(az, 1.0 + mu, c);
    if (kmin > kMaxTerms) return out;
    mpf zz = z, s = 0, abs_sum = 0, pk = 1;
    int small = 0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        if (k > 0) pk *= zz / k;
        mpf arg = mpf(mu) * k + mpf(rho);
        mpf tk = 0;
        if (!(arg <= 0 && arg == floor(arg))) tk = pk / bm::tgamma(arg, quiet());
        if (!boost::multiprecision::isfinite(tk)) return out;
        s += tk;
        abs_sum += abs(tk);
        if (k >= kmin && abs(tk) <= mpf(target) * mpf("1e-3") * abs(s)) {
            if (++small == 3) {
                out.value = static_cast<double>(s);
                mpf e = abs_sum * kMpEps;
                out.error = static_cast<double>(e) + kEps * std::fabs(out.value) +
                            tail_bound(wright_env(mu, rho, z), k);
                out.ok = true;
                return out;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

// Hankel-type contour for mu in (-1,0), x < 0. With m = -mu the path is
// the arc |zeta| = d through the real saddle point of zeta + x zeta^m,
// continued by the ray arg zeta = pi/(1+m). Everything is scaled by the
// integrand's value at the saddle so large arguments do not overflow.
Sum wright_contour(double mu, double rho, double x, double target) {
    Sum out;
    const double m = -mu, X = -x;
    const double log_zs = std::log(m * X) / (1.0 - m);
    const bool saddle = log_zs > 0.0;
    if (saddle && log_zs > 700.0) {
        out.value = 0.0;
        out.error = 0.0;
        out.ok = true;
        return out;
    }
    const double d = saddle ? std::exp(log_zs) : 1.0;
    const double c = X * std::pow(d, m);
    const double S = saddle ? -rho * log_zs + d * (1.0 - 1.0 / m) : 1.0 - X;
    if (saddle && S + std::log(d * kPi + 1.0) + 2.0 * std::fabs(rho) < -760.0) {
        out.value = 0.0;
        out.error = 0.0;
        out.ok = true;
        return out;
    }
    const double theta = kPi / (1.0 + m);
    const double tol = std::max(target * 0.05, 1e-13);

    auto arc = [&](double phi) {
        double sh = std::sin(0.5 * phi), shm = std::sin(0.5 * m * phi);
        double re = -2.0 * d * sh * sh + 2.0 * c * shm * shm;
        double im = d * std::sin(phi) - c * std::sin(m * phi) - rho * phi;
        return d * std::exp(re) * std::cos(phi + im);
    };
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cmt = std::cos(m * theta), smt = std::sin(m * theta);
    auto ray_re = [&](double r) {
        return -rho * std::log(r / d) + r * ct - d - X * std::pow(r, m) * cmt + c;
    };
    auto ray = [&](double r) {
        double rm = std::pow(r, m);
        double re = -rho * std::log(r / d) + r * ct - d - X * rm * cmt + c;
        double im = -rho * theta + r * st - X * rm * smt;
        return std::exp(re) * std::sin(im + theta);
    };

    detail::QuadResult ia = detail::gk(arc, 0.0, theta, tol);
    detail::QuadResult ir;
    double r0 = d;
    double step = 4.0;
    bool done = false;
    for (int seg = 0; seg < 4000; ++seg) {
        double r1 = r0 + step;
        detail::QuadResult piece = detail::gk(ray, r0, r1, tol, 12);
        ir += piece;
        r0 = r1;
        double env = std::exp(ray_re(r0));
        double slope = -rho / r0 + ct - m * X * std::pow(r0, m - 1.0) * cmt;
        double scale = std::max(std::fabs(ia.value), std::fabs(ir.value));
        if (slope < 0.0 && env / (-slope) < 1e-3 * tol * scale) {
            done = true;
            break;
        }
        step = std::min(step * 1.5, 64.0);
    }
    if (!done) return out;

    double total = ia.value + ir.value;
    double err = ia.error + ir.error + 16.0 * kEps * (ia.l1 + ir.l1);
    double scale = std::exp(S) / kPi;
    out.value = total * scale;
    out.error = err * scale;
    out.ok = std::isfinite(out.value) && std::isfinite(out.error);
    return out;
}

// log(sin(u)/u)
double lsinc(double u) {
    if (std::fabs(u) < 1e-4) {
        double u2 = u * u;
        return -u2 / 6.0 - u2 * u2 / 180.0;
    }
    return std::log(std::sin(u) / u);
}

// M-Wright case rho = 1 - m of the Wright function at -X, written through the
// one-sided stable density in Zolotarev's integral form:
//   W_{-m,1-m}(-X) = 1/((1-m) pi X) int_0^pi u e^{-u} dphi,  u = A(phi) X^{1/(1-m)},
// with A the Kanter function. The integrand is positive and bounded by 1/e,
// so there is no cancellation for any m in (0,1).
Sum mwright_integral(double m, double X, double target) {
    Sum out;
    const double q = 1.0 - m;
    const double logA0Y = (m * std::log(m) + q * std::log(q)) / q + std::log(X) / q;
    const double A0Y = std::exp(logA0Y);
    // u e^{-u} <= A0Y e^{-A0Y} when A0Y >= 1, because u >= A0Y
    if (A0Y >= 1.0 && logA0Y - A0Y - std::log(q * X) < -760.0) {
        out.value = 0.0;
        out.error = 0.0;
        out.ok = true;
        return out;
    }
    // rounding in log u is amplified by 1/q; no point integrating when that alone misses the target
    const double floor_rel = kEps * (8.0 + std::fabs(logA0Y) + (4.0 * std::max(1.0, A0Y) + 40.0) / q);
    if (floor_rel > target) return out;

    // log u on [0, pi/2] in phi, increasing
    auto logu_lo = [&](double phi) {
        return logA0Y + (m * lsinc(m * phi) + q * lsinc(q * phi) - lsinc(phi)) / q;
    };
    // log u on [pi/2, pi] in psi = pi - phi, decreasing in psi; sines are taken
    // of quantities known to full relative precision near phi = pi
    auto logu_hi = [&](double psi) {
        double phi = kPi - psi;
        double a = std::log(std::sin(q * kPi + m * psi) / (m * phi));
        double c = std::log(std::sin(psi) / phi);
        return logA0Y + (m * a + q * lsinc(q * phi) - c) / q;
    };
    auto weight = [](double l) { return l < 7.0 ? std::exp(l - std::exp(l)) : 0.0; };
    const double tol = std::max({target * 0.05, 2.0 * floor_rel, 1e-13});
    const double half = 0.5 * kPi;

    // integrates weight(logu(x)) over [0, pi/2] given logu monotone with the stated direction
    auto half_integral = [&](auto&& logu, bool increasing, std::vector<double> pts) {
        auto below = [&](double x, double level) { return (logu(x) < level) == increasing; };
        auto crossing = [&](double level) {
            double a = 0.0, b = half;
            if (!below(a, level)) return a;
            if (below(b, level)) return b;
            for (int i = 0; i < 200 && b - a > 1e-16 * half; ++i) {
                double c = 0.5 * (a + b);
                (below(c, level) ? a : b) = c;
            }
            return 0.5 * (a + b);
        };
        // weight < e^{-50} below log u = -50, underflows above 7
        double l0 = crossing(increasing ? -50.0 : 7.0), l1 = crossing(increasing ? 7.0 : -50.0);
        pts.push_back(l0);
        pts.push_back(l1);
        for (double lv : {-10.0, -3.0, -1.0, 0.0, 1.0, 2.0, 4.0}) pts.push_back(crossing(lv));
        std::sort(pts.begin(), pts.end());
        auto f = [&](double x) { return weight(logu(x)); };
        detail::QuadResult r;
        double lo = l0;
        for (double bp : pts) {
            if (bp <= lo || bp > l1) continue;
            r += detail::gk(f, lo, bp, tol, 12);
            lo = bp;
        }
        // the cut below log u = -50 only matters if it removed anything
        if (increasing ? l0 > 0.0 : l1 < half) r.error += half * std::exp(-50.0);
        return r;
    };

    // for large A0Y the mass sits near phi = 0 with width ~ (m A0Y / 2)^{-1/2}
    const double w = A0Y > 1.0 ? 1.0 / std::sqrt(0.5 * m * A0Y) : half;
    detail::QuadResult r = half_integral(logu_lo, true, {3.0 * w, 10.0 * w, 30.0 * w});
    r += half_integral(logu_hi, false, {});
    const double pref = 1.0 / (q * kPi * X);
    out.value = pref * r.value;
    out.error = pref * (r.error + 16.0 * kEps * r.l1) + std::fabs(out.value) * floor_rel;
    out.ok = std::isfinite(out.value) && std::isfinite(out.error);
    return out;
}

void check_wright_spec(const WrightSpec& spec) {
    if (!(spec.mu > -1.0) || !std::isfinite(spec.mu))
        throw DomainError("wright: mu must satisfy mu > -1");
    if (!std::isfinite(spec.rho)) throw DomainError("wright: rho must be finite");
    if (!(spec.precision_target >= 1e-14 && spec.precision_target <= 1e-4))
        throw DomainError("wright: precision_target must lie in [1e-14, 1e-4]");
}

[[noreturn]] void accuracy_fail(const char* what, double a, double b, double z) {
    throw AccuracyError(std::string(what) + ": cannot certify accuracy at parameters (" +
                        std::to_string(a) + ", " + std::to_string(b) + ") and argument " +
                        std::to_string(z));
}

// ---- Mittag-Leffler ----

Sum ml_series(double beta, double gam, double z, double target) {
    double az = std::fabs(z);
    long kmin = peak_index(az, beta, std::pow(beta, -beta));
    double lz = az > 0 ? std::log(az) : 0.0;
    double pk = 1.0;
    auto term = [&](int k, double& rel) -> double {
        if (k > 0) pk *= z;
        double arg = beta * k + gam;
        if (is_pole(arg)) return 0.0;
        if (std::fabs(arg) < 160.0 && std::isfinite(pk) && (pk != 0.0 || z == 0.0)) {
            rel = 8.0 + k;
            return pk * rgamma(arg);
        }
        if (z == 0.0) return 0.0;
        int sg = 1;
        double lr = log_rgamma(arg, sg);
        double lt = k * lz + lr;
        rel = 8.0 + std::fabs(k * lz) + std::fabs(lr);
        double sign = (z < 0 && (k % 2)) ? -sg : sg;
        return sign * std::exp(lt);
    };
    return sum_series(term, ml_env(beta, gam, az), kmin, target);
}

MpSum ml_series_mp(double beta, double gam, double z, double target) {
    MpSum out;
    double az = std::fabs(z);
    long kmin = peak_index(az, beta, std::pow(beta, -beta));
    if (kmin > kMaxTerms) return out;
    mpf zz = z, s = 0, abs_sum = 0, pk = 1;
    int small = 0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        if (k > 0) pk *= zz;
        mpf arg = mpf(beta) * k + mpf(gam);
        mpf tk = 0;
        if (!(arg <= 0 && arg == floor(arg))) tk = pk / bm::tgamma(arg, quiet());
        if (!boost::multiprecision::isfinite(tk)) return out;
        s += tk;
        abs_sum += abs(tk);
        if (k >= kmin && abs(tk) <= mpf(target) * mpf("1e-3") * abs(s)) {
            if (++small == 3) {
                out.value = static_cast<double>(s);
                mpf e = abs_sum * kMpEps;
                out.error = static_cast<double>(e) + kEps * std::fabs(out.value) +
                            tail_bound(ml_env(beta, gam, az), k);
                out.ok = true;
                return out;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

// E_beta(-x) and E_{beta,beta}(-x), x > 0, 0 < beta < 1, via the spectral
// representation after the substitution v = (r/x)^beta, which leaves a
// bounded integrand on (0, inf).
Sum ml_integral(double beta, double gam, double x, double target) {
    Sum out;
    const double sb = std::sin(beta * kPi), cb = std::cos(beta * kPi);
    const double p = 1.0 / beta;
    const bool two_param = gam != 1.0;
    auto g = [&](double v) {
        if (v <= 0.0) return 0.0;
        double w = std::pow(x * v, p);
        double num = std::exp(-w);
        if (two_param) num *= std::pow(v, p);
        return num / (v * v + 2.0 * v * cb + 1.0);
    };
    const double tol = std::max(target * 0.05, 1e-13);
    const double b = std::min(0.5, 1.0 / x);
    detail::QuadResult r = detail::ts(g, 0.0, b, tol);
    r += detail::gk(g, b, 1.0, tol);
    r += detail::es(g, 1.0, tol);
    double pref = sb / (beta * kPi);
    if (two_param) pref *= std::pow(x, p - 1.0);
    out.value = pref * r.value;
    out.error = pref * (r.error + 16.0 * kEps * r.l1);
    out.ok = std::isfinite(out.value);
    return out;
}

bool integral_applies(double beta, double gam, double z) {
    return z < 0.0 && beta > 0.0 && beta < 1.0 && (gam == 1.0 || gam == beta);
}

using cplx = std::complex<double>;

struct CSum {
    cplx value{};
    bool ok = false;
};

CSum ml_series_complex(double beta, double gam, cplx z, double target) {
    CSum out;
    double az = std::abs(z);
    long kmin = peak_index(az, beta, std::pow(beta, -beta));
    if (kmin > kMaxTerms) return out;
    cplx s = 0, comp = 0, pk = 1;
    double err = 0.0;
    cplx lz = az > 0 ? std::log(z) : cplx(0);
    int small = 0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        if (k > 0) pk *= z;
        double arg = beta * k + gam;
        cplx tk = 0;
        double rel = 0.0;
        if (!is_pole(arg)) {
            if (std::fabs(arg) < 160.0 && std::isfinite(pk.real()) && std::isfinite(pk.imag()) &&
                (pk != cplx(0) || az == 0.0)) {
                tk = pk * rgamma(arg);
                rel = 8.0 + 2.0 * k;
            } else if (az > 0) {
                int sg = 1;
                double lr = log_rgamma(arg, sg);
                tk = double(sg) * std::exp(double(k) * lz + lr);
                rel = 8.0 + std::fabs(k * lz.real()) + std::fabs(k * lz.imag()) + std::fabs(lr);
            }
        }
        if (!std::isfinite(tk.real()) || !std::isfinite(tk.imag())) return out;
        cplx y = tk - comp;
        cplx t = s + y;
        comp = (t - s) - y;
        s = t;
        err += std::abs(tk) * kEps * (rel + 2.0);
        if (k >= kmin && std::abs(tk) <= target * 1e-2 * std::abs(s)) {
            if (++small == 3) {
                err += 2.0 * kEps * std::abs(s) + tail_bound(ml_env(beta, gam, az), k);
                out.value = s;
                out.ok = err <= target * std::abs(s);
                return out;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

CSum ml_series_complex_mp(double beta, double gam, cplx z, double target) {
    CSum out;
    double az = std::abs(z);
    long kmin = peak_index(az, beta, std::pow(beta, -beta));
    if (kmin > kMaxTerms) return out;
    mpf zr = z.real(), zi = z.imag();
    mpf sr = 0, si = 0, pr = 1, pi = 0, abs_sum = 0;
    int small = 0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        if (k > 0) {
            mpf nr = pr * zr - pi * zi;
            mpf ni = pr * zi + pi * zr;
            pr = nr;
            pi = ni;
        }
        mpf arg = mpf(beta) * k + mpf(gam);
        if (arg <= 0 && arg == floor(arg)) continue;
        mpf rg = 1 / bm::tgamma(arg, quiet());
        if (!boost::multiprecision::isfinite(rg)) return out;
        mpf tr = pr * rg, ti = pi * rg;
        sr += tr;
        si += ti;
        mpf mag = sqrt(tr * tr + ti * ti);
        mpf smag = sqrt(sr * sr + si * si);
        abs_sum += mag;
        if (k >= kmin && mag <= mpf(target) * mpf("1e-3") * smag) {
            if (++small == 3) {
                mpf e = abs_sum * kMpEps;
                out.value = cplx(static_cast<double>(sr), static_cast<double>(si));
                double bound = static_cast<double>(e) + tail_bound(ml_env(beta, gam, az), k);
                out.ok = bound <= target * std::abs(out.value);
                return out;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

}  // namespace

double rgamma(double x) {
    if (std::isnan(x)) return x;
    if (is_pole(x)) return 0.0;
    if (x > 0.0) {
        if (x > 171.0) return std::exp(-bm::lgamma(x, quiet()));
        return 1.0 / bm::tgamma(x, quiet());
    }
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    double s = bm::sin_pi(x, quiet());
    double y = 1.0 - x;
    if (y < 171.0) return s * bm::tgamma(y, quiet()) / kPi;
    double l = bm::lgamma(y, quiet()) + std::log(std::fabs(s)) - std::log(kPi);
    double mag = std::exp(l);
    return s < 0 ? -mag : mag;
}

Estimate wright_estimate(const WrightSpec& spec, double z, WrightPath path) {
    check_wright_spec(spec);
    if (!std::isfinite(z)) throw DomainError("wright: argument must be finite");
    const double mu = spec.mu, rho = spec.rho, tgt = spec.precision_target;
    if (z == 0.0) return {rgamma(rho), 0.0};

    const bool contour_ok = mu < 0.0 && z < 0.0;
    const bool mwright = contour_ok && std::fabs(rho - (1.0 + mu)) <= 4.0 * kEps;
    if (path == WrightPath::integral && !mwright)
        throw DomainError("wright: integral path needs rho = 1 + mu, mu < 0 and z < 0");
    if (path == WrightPath::contour && !contour_ok)
        throw DomainError("wright: contour path needs mu < 0 and z < 0");
    auto try_integral = [&](Estimate& e) {
        Sum r = mwright_integral(-mu, -z, tgt);
        if (accepted(r, tgt)) e = {r.value, r.error};
        else if (path == WrightPath::integral) accuracy_fail("wright integral", mu, rho, z);
        return accepted(r, tgt);
    };
    auto try_contour = [&](Estimate& e) {
        Sum r = wright_contour(mu, rho, z, tgt);
        if (accepted(r, tgt)) e = {r.value, r.error};
        else if (path == WrightPath::contour) accuracy_fail("wright contour", mu, rho, z);
        return accepted(r, tgt);
    };
    Estimate e;
    // near mu = -1 the series terms decay too slowly to be useful
    if (path == WrightPath::automatic && mwright && mu < -0.95 && try_integral(e)) return e;
    if (path == WrightPath::automatic || path == WrightPath::series) {
        Sum r = wright_series(mu, rho, z, tgt);
        if (accepted(r, tgt)) return {r.value, r.error};
        if (path == WrightPath::series) accuracy_fail("wright series", mu, rho, z);
    }
    if (path == WrightPath::integral) {
        try_integral(e);
        return e;
    }
    if (path == WrightPath::contour) {
        try_contour(e);
        return e;
    }
    if (path == WrightPath::automatic && contour_ok) {
        if (try_contour(e)) return e;
        if (mwright && mu >= -0.95 && try_integral(e)) return e;
    }
    MpSum r = wright_series_mp(mu, rho, z, tgt);
    if (r.ok && std::isfinite(r.value) && (r.error <= tgt * std::fabs(r.value) || (std::fabs(r.value) < 1e-300 && r.error < 1e-300)))
        return {r.value, r.error};
    accuracy_fail("wright", mu, rho, z);
}

double wright(const WrightSpec& spec, double z) { return wright_estimate(spec, z).value; }

double mittag_leffler(const MLSpec& spec, double z, MLPath path) {
    const double beta = spec.beta, gam = spec.gamma;
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("mittag_leffler: beta must be > 0");
    if (!std::isfinite(gam)) throw DomainError("mittag_leffler: gamma must be finite");
    if (!std::isfinite(z)) throw DomainError("mittag_leffler: argument must be finite");
    constexpr double tgt = 1e-12;

    if (path == MLPath::automatic && beta == 1.0 && gam == 1.0) return std::exp(z);
    if (z == 0.0) return rgamma(gam);

    const bool integ = integral_applies(beta, gam, z);
    if (path == MLPath::integral) {
        if (!integ) throw DomainError("mittag_leffler: no integral representation for these parameters");
        Sum r = ml_integral(beta, gam, -z, tgt);
        if (!accepted(r, tgt)) accuracy_fail("mittag_leffler integral", beta, gam, z);
        return r.value;
    }
    if (path == MLPath::automatic && integ && z < -5.0) {
        Sum r = ml_integral(beta, gam, -z, tgt);
        if (accepted(r, tgt)) return r.value;
    }
    Sum s = ml_series(beta, gam, z, tgt);
    if (accepted(s, tgt)) return s.value;
    if (integ && path == MLPath::automatic) {
        Sum r = ml_integral(beta, gam, -z, tgt);
        if (accepted(r, tgt)) return r.value;
    }
    MpSum m = ml_series_mp(beta, gam, z, tgt);
    if (m.ok && std::isfinite(m.value) && (m.error <= tgt * std::fabs(m.value) || (std::fabs(m.value) < 1e-300 && m.error < 1e-300)))
        return m.value;
    accuracy_fail("mittag_leffler", beta, gam, z);
}

std::complex<double> mittag_leffler(const MLSpec& spec, std::complex<double> z) {
    const double beta = spec.beta, gam = spec.gamma;
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("mittag_leffler: beta must be > 0");
    if (!std::isfinite(gam)) throw DomainError("mittag_leffler: gamma must be finite");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("mittag_leffler: argument must be finite");
    constexpr double tgt = 1e-11;
    if (beta == 1.0 && gam == 1.0) return std::exp(z);
    if (z.imag() == 0.0) return mittag_leffler(spec, z.real());
    CSum s = ml_series_complex(beta, gam, z, tgt);
    if (s.ok) return s.value;
    CSum m = ml_series_complex_mp(beta, gam, z, tgt);
    if (m.ok) return m.value;
    throw AccuracyError("mittag_leffler: complex argument outside the certified series region");
}

}  // namespace fw
