// fracw: evaluate densities on grids, simulate processes, run verification suites.

#include "fracwright/csv.hpp"
#include "fracwright/errors.hpp"
#include "fracwright/laws.hpp"
#include "fracwright/montecarlo.hpp"
#include "fracwright/specfun.hpp"
#include "fracwright/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fw;

struct Options {
    std::uint64_t seed = 42;
    unsigned workers = 4;
    std::string out;
    std::string profile = "strict";

    double alpha = 0.5, beta = 0.5, theta = 0.5, lambda = 1.0, tau = 1.0, t = 1.0;
    double mu = 0.0, rho = 1.0, gamma = 1.0, nu = -0.5, x = 1.0;
    int n_order = 1;
    std::string a = "1";

    std::string function;
    std::string grid = "x:0:1:11";

    std::string process;
    std::size_t n = 1000;
    std::size_t dim = 1;
    bool no_drift = false;

    std::string suite;
    std::size_t samples = 0;
    unsigned threads = 0;
    bool no_wall_time = false;
};

struct Grid {
    std::string variable;
    double start = 0, stop = 0;
    long points = 0;

    double at(long i) const { return points == 1 ? start : start + (stop - start) * double(i) / double(points - 1); }
};

Grid parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 4) throw UsageError("grid must look like var:start:stop:points");
    Grid g;
    g.variable = parts[0];
    if (g.variable != "x" && g.variable != "t" && g.variable != "xi" && g.variable != "z")
        throw UsageError("grid variable must be x, t, xi or z");
    try {
        std::size_t used = 0;
        g.start = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        g.stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        g.points = std::stol(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::logic_error&) {
        throw UsageError("grid bounds and point count must be numbers");
    }
    if (!std::isfinite(g.start) || !std::isfinite(g.stop)) throw UsageError("grid bounds must be finite");
    if (g.points < 1 || g.points > 1000000) throw UsageError("grid points must lie in [1, 10^6]");
    if (g.points == 1 ? g.start != g.stop : !(g.start < g.stop))
        throw UsageError("grid needs start < stop, or start = stop with a single point");
    return g;
}

Direction parse_direction(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::logic_error&) {
            throw UsageError("direction components must be numbers: '" + text + "'");
        }
    }
    try {
        return Direction::normalized(v, 1e-6);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--a: ") + e.what());
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

bool open_unit(double v) { return v > 0 && v < 1; }
bool half_open_unit(double v) { return v > 0 && v <= 1; }

// single writer for the CSV/JSON payload: --out file or standard output
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw IoError("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    bool to_file() const { return file_.is_open(); }
    void finish(const std::string& path) {
        stream().flush();
        if (!stream()) throw IoError("write to '" + (path.empty() ? std::string("stdout") : path) + "' failed");
    }

private:
    std::ofstream file_;
};

int cmd_eval(const Options& o) {
    static const std::vector<std::string> known = {"wright", "ml", "l", "h", "U", "lamperti",
                                                   "v", "p", "Un", "g", "charfn", "fracpoisson-pmf"};
    const std::string& fn = o.function;
    require(std::find(known.begin(), known.end(), fn) != known.end(), "unknown function '" + fn + "'");
    Grid g = parse_grid(o.grid);
    const std::string& var = g.variable;
    const bool space = var == "x" || var == "z";
    if (fn == "charfn")
        require(var == "xi" || var == "t", "charfn takes a grid in xi or t");
    else
        require(var != "xi", fn + " takes a grid in x (or z) or t");
    if (fn == "wright" || fn == "ml") require(space, fn + " takes a grid in z (or x)");

    require(o.t > 0 && std::isfinite(o.t), "--t must be positive");
    Direction a = parse_direction(o.a);
    if (fn == "l" || fn == "lamperti" || fn == "fracpoisson-pmf" || fn == "v" || fn == "p" || fn == "Un" || fn == "g")
        require(open_unit(o.beta), "--beta must lie in (0,1)");
    if (fn == "h") require(open_unit(o.alpha), "--alpha must lie in (0,1)");
    if (fn == "U") require(open_unit(o.alpha) && open_unit(o.beta), "--alpha and --beta must lie in (0,1)");
    if (fn == "wright") require(o.mu > -1, "--mu must exceed -1");
    if (fn == "ml") require(o.beta > 0, "--beta must be positive");
    if (fn == "Un") require(o.n_order >= 1, "--n must be at least 1");
    if (fn == "fracpoisson-pmf") require(o.lambda >= 0, "--lambda must be nonnegative");
    if (fn == "v" || fn == "p" || fn == "Un") require(a.nonnegative(), "--a must be nonnegative for orthant laws");
    if (fn == "p") {
        bool positive = true;
        for (double c : a.components()) positive = positive && c > 0;
        require(positive, "--a must have positive components for p");
    }
    FracParams params{o.alpha, o.beta, o.theta, o.lambda, o.tau};
    if (fn == "charfn") {
        try {
            params.validate();
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }

    Sink sink(o.out);
    std::ostream& os = sink.stream();
    const bool complex_out = fn == "charfn";
    os << (complex_out ? "grid_value,result,result_imag\n" : "grid_value,result\n");
    for (long i = 0; i < g.points; ++i) {
        const double gv = g.at(i);
        const double s = space ? gv : o.x;  // projected coordinate a.x
        const double t = var == "t" ? gv : o.t;
        std::vector<double> xv(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) xv[k] = s * a[k];
        std::complex<double> r = NAN;
        try {
            if (fn == "wright") r = wright({o.mu, o.rho}, s);
            else if (fn == "ml") r = mittag_leffler({o.beta, o.gamma}, s);
            else if (fn == "l") r = density_l(o.beta, s, t);
            else if (fn == "h") r = density_h(o.alpha, s, t);
            else if (fn == "U") r = density_U(o.alpha, o.beta, s, t);
            else if (fn == "lamperti") r = density_lamperti(o.beta, s, t);
            else if (fn == "v") r = solution_v(o.beta, o.nu, a, xv, t);
            else if (fn == "p") r = density_p_multivariate(o.beta, a, xv, t);
            else if (fn == "Un") r = solution_Un(o.beta, o.n_order, a, xv, t);
            else if (fn == "g") r = solution_g(o.beta, a, xv, t);
            else if (fn == "fracpoisson-pmf") {
                if (s != std::floor(s) || s < 0) throw DomainError("count must be a nonnegative integer");
                r = pmf_frac_poisson(o.beta, o.lambda, int(s), t);
            } else if (fn == "charfn") {
                const double w = var == "xi" ? gv : o.x;
                std::vector<double> xi(a.dim());
                for (std::size_t k = 0; k < a.dim(); ++k) xi[k] = w * a[k];
                r = charfn_advdiff(params, a, xi, t);
            }
        } catch (const Error& e) {
            std::cerr << "warning: " << fn << " at " << var << "=" << format_double(gv) << ": " << e.what() << '\n';
            r = {NAN, NAN};
        }
        os << format_double(gv) << ',' << format_double(r.real());
        if (complex_out) os << ',' << format_double(r.imag());
        os << '\n';
    }
    sink.finish(o.out);
    return 0;
}

int cmd_simulate(const Options& o) {
    require(o.n >= 1, "-n must be at least 1");
    require(o.workers >= 1, "--workers must be at least 1");
    require(o.t > 0 && std::isfinite(o.t), "--t must be positive");
    BatchConfig cfg{o.n, o.seed, o.workers};
    FracParams params{o.alpha, o.beta, o.theta, o.lambda, o.tau};
    SampleBatch b;
    const std::string& p = o.process;
    if (p == "subordinator") {
        require(open_unit(o.alpha), "--alpha must lie in (0,1)");
        b = sample_stable_subordinator(o.alpha, o.t, cfg);
    } else if (p == "inverse") {
        require(open_unit(o.beta), "--beta must lie in (0,1)");
        b = sample_inverse_subordinator(o.beta, o.t, cfg);
    } else if (p == "stable") {
        require(half_open_unit(o.theta), "--theta must lie in (0,1]");
        require(o.dim >= 1, "--dim must be at least 1");
        b = sample_isotropic_stable(o.theta, o.t, o.dim, cfg);
    } else if (p == "advdiff" || p == "fracpoisson") {
        Direction a = parse_direction(o.a);
        try {
            params.validate();
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        if (p == "advdiff") {
            b = sample_advdiff(params, a, o.t, cfg);
        } else {
            require(o.lambda > 0, "--lambda must be positive");
            b = sample_frac_poisson_transport(params, a, o.t, cfg, !o.no_drift);
        }
    } else if (p == "ratio") {
        require(open_unit(o.beta), "--beta must lie in (0,1)");
        b = sample_ratio(o.beta, o.t, cfg);
    } else {
        throw UsageError("unknown process '" + p + "'");
    }

    Sink sink(o.out);
    write_batch_csv(sink.stream(), b);
    sink.finish(o.out);

    std::ostringstream line;
    line << to_string(b.process_tag) << " n=" << b.n_samples;
    for (std::size_t k = 0; k < b.dim; ++k) {
        double m = 0, q = 0;
        for (std::size_t i = 0; i < b.n_samples; ++i) m += b.at(i, k);
        m /= double(b.n_samples);
        for (std::size_t i = 0; i < b.n_samples; ++i) q += (b.at(i, k) - m) * (b.at(i, k) - m);
        double sd = b.n_samples > 1 ? std::sqrt(q / double(b.n_samples - 1)) : 0.0;
        line << " mean_" << k << '=' << format_double(m) << " std_" << k << '=' << format_double(sd);
    }
    (sink.to_file() ? std::cout : std::cerr) << line.str() << '\n';
    return 0;
}

int cmd_verify(const Options& o) {
    static const std::vector<std::string> suites = {"identities", "statistics", "residuals", "all"};
    require(std::find(suites.begin(), suites.end(), o.suite) != suites.end(), "unknown suite '" + o.suite + "'");
    require(o.workers >= 1, "--workers must be at least 1");
    VerifyConfig cfg;
    cfg.profile = parse_profile(o.profile);
    cfg.seed = o.seed;
    cfg.n_samples = o.samples;
    cfg.workers = o.workers;
    cfg.threads = o.threads;
    VerificationReport rep;
    try {
        rep = run_suite(o.suite, cfg);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    Sink sink(o.out);
    sink.stream() << to_json(rep, !o.no_wall_time);
    sink.finish(o.out);
    int failed = 0;
    for (const auto& r : rep.results) failed += !r.passed;
    std::cerr << rep.suite << ": " << rep.results.size() - failed << " of " << rep.results.size() << " checks passed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"fracw: fractional advection-diffusion toolkit\n"
                 "Defaults: t = 1, exponents alpha = beta = theta = 0.5, lambda = tau = 1."};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "64-bit seed; with --workers it fixes all stochastic output")->capture_default_str();
    app.add_option("--workers", o.workers, "sampler streams; part of the reproducibility key")->capture_default_str();
    app.add_option("--out", o.out, "write CSV/JSON here instead of standard output");
    app.add_option("--profile", o.profile, "verification tolerance profile")
        ->check(CLI::IsMember({"strict", "fast"}))
        ->capture_default_str();

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "order of the directional derivative")->capture_default_str();
        sub->add_option("--beta", o.beta, "order of the time derivative")->capture_default_str();
        sub->add_option("--theta", o.theta, "order of the fractional Laplacian")->capture_default_str();
        sub->add_option("--lambda", o.lambda, "Poisson rate")->capture_default_str();
        sub->add_option("--tau", o.tau, "Poisson jump size")->capture_default_str();
        sub->add_option("--t", o.t, "time")->capture_default_str();
        sub->add_option("--a", o.a, "unit direction, comma-separated; renormalized within 1e-6")->capture_default_str();
    };

    auto* eval = app.add_subcommand("eval", "evaluate a function on a grid, CSV grid_value,result[,result_imag]");
    eval->add_option("function", o.function, "wright, ml, l, h, U, lamperti, v, p, Un, g, charfn, fracpoisson-pmf")
        ->required();
    eval->add_option("--grid", o.grid,
                     "var:start:stop:points; var x (or z) is the projected point a.x, t is time, xi scales a")
        ->capture_default_str();
    add_params(eval);
    eval->add_option("--mu", o.mu, "Wright mu")->capture_default_str();
    eval->add_option("--rho", o.rho, "Wright rho")->capture_default_str();
    eval->add_option("--gamma", o.gamma, "second Mittag-Leffler parameter")->capture_default_str();
    eval->add_option("--nu", o.nu, "exponent nu of v")->capture_default_str();
    eval->add_option("--n", o.n_order, "order n of Un")->capture_default_str();
    eval->add_option("--x", o.x, "fixed a.x (or xi scale for charfn) when the grid runs over t")->capture_default_str();

    auto* sim = app.add_subcommand("simulate", "draw samples, CSV index,component_0..");
    sim->add_option("process", o.process, "subordinator, inverse, stable, advdiff, fracpoisson, ratio")->required();
    sim->add_option("-n", o.n, "number of samples")->capture_default_str();
    sim->add_option("--dim", o.dim, "dimension of the isotropic stable process")->capture_default_str();
    sim->add_flag("--no-drift", o.no_drift, "fracpoisson without the subordinator term (a = 0)");
    add_params(sim);

    auto* ver = app.add_subcommand("verify", "run a verification suite, JSON report; exit 1 on any failed check");
    ver->add_option("suite", o.suite, "identities, statistics, residuals or all")->required();
    ver->add_option("-n,--samples", o.samples, "samples per statistical check (default 10^5, fast 10^4)");
    ver->add_option("--threads", o.threads, "concurrent checks (default: hardware concurrency)");
    ver->add_flag("--no-wall-time", o.no_wall_time, "report wall_time_s as 0 for byte-comparable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (sim->parsed()) return cmd_simulate(o);
        return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
