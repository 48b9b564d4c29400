#include "lpdiff/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>

#include "lpdiff/csv.hpp"
#include "lpdiff/estimator.hpp"
#include "lpdiff/series.hpp"

namespace lpdiff::cli {

using csv::format_real;

void RunConfig::validate() const {
    params.validate();
    if (!std::isfinite(duration)) throw ParameterError("duration must be finite");
    for (auto kh : khats)
        if (kh < 1) throw ParameterError("khat must be at least 1");
}

int run_estimate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<DerivativeEstimate> est;
    csv::Series series;
    try {
        cfg.validate();
        series = csv::read_series(in);
        if (series.t.size() < 2) throw InputError("need at least two samples");
        const double T = cfg.params.T;
        for (std::size_t j = 1; j < series.t.size(); ++j) {
            const double dt = series.t[j] - series.t[j - 1];
            if (!(std::abs(dt - T) <= 1e-9 * T))
                throw InputError("sample " + std::to_string(j) + ": spacing " + format_real(dt) +
                                 " differs from T = " + format_real(T));
        }
        const auto khat = cfg.khats.empty() ? default_window(cfg.params) : cfg.khats.front();
        est = estimate_series(cfg.params, khat, series.m);
    } catch (const std::exception& e) {
        err << "lpdiff estimate: " << e.what() << '\n';
        return kExitUsage;
    }

    bool inconsistent = false;
    out << "k,t,m,f1_lower,f1_upper,f1_hat,width,status\n";
    for (const auto& e : est) {
        inconsistent |= !e.ok();
        out << e.k << ',' << format_real(series.t[e.k]) << ',' << format_real(series.m[e.k]) << ','
            << format_real(e.lower) << ',' << format_real(e.upper) << ','
            << format_real(e.estimate) << ',' << format_real(e.width) << ',' << to_string(e.status)
            << '\n';
    }
    if (inconsistent) {
        err << "lpdiff estimate: measurements inconsistent with (L, N, T) in some windows\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_worstcase(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    WorstCaseProfile p;
    double limit = 0.0;
    try {
        cfg.validate();
        p = worst_case_profile(cfg.params);
        limit = accuracy_lower_limit(cfg.params);
    } catch (const std::exception& e) {
        err << "lpdiff worstcase: " << e.what() << '\n';
        return kExitUsage;
    }
    out << "epsilon=" << format_real(p.epsilon) << '\n'
        << "Q=" << p.Q << '\n'
        << "K=" << p.K << '\n'
        << "hbar_K=" << format_real(p.hbar(p.K)) << '\n'
        << "lower_limit=" << format_real(limit) << '\n'
        << "l,hbar\n";
    for (std::size_t l = 1; l <= p.K; ++l) out << l << ',' << format_real(p.hbar(l)) << '\n';
    return kExitOk;
}

int run_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& summary,
                 std::ostream& err, std::ostream* measurements) {
    SimulationResult res;
    try {
        cfg.validate();
        SimulationConfig sc;
        sc.params = cfg.params;
        sc.duration = cfg.duration;
        sc.khats = cfg.khats;
        sc.scheme = cfg.scheme;
        sc.noise = cfg.noise;
        sc.seed = cfg.seed;
        res = simulate(sc);
    } catch (const std::exception& e) {
        err << "lpdiff simulate: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto& khats = res.config.khats;

    out << "t,eta,err_lp,bound_lp,err_hg,err_sm";
    for (std::size_t i = 1; i < khats.size(); ++i)
        out << ",err_lp_k" << khats[i] << ",bound_lp_k" << khats[i];
    out << '\n';
    for (const auto& r : res.rows) {
        out << format_real(r.t) << ',' << format_real(r.eta) << ',' << format_real(r.err_lp[0])
            << ',' << format_real(r.bound_lp[0]) << ',' << format_real(r.err_hg) << ','
            << format_real(r.err_sm);
        for (std::size_t i = 1; i < khats.size(); ++i)
            out << ',' << format_real(r.err_lp[i]) << ',' << format_real(r.bound_lp[i]);
        out << '\n';
    }

    if (measurements) {
        *measurements << "t,m\n";
        for (std::size_t k = 0; k < res.t.size(); ++k)
            *measurements << format_real(res.t[k]) << ',' << format_real(res.m[k]) << '\n';
    }

    const auto& s = res.summary;
    summary << "transient=" << format_real(s.transient) << '\n';
    for (std::size_t i = 0; i < khats.size(); ++i) {
        summary << "khat=" << khats[i] << " sup_err_lp=" << format_real(s.sup_err_lp[i])
                << " sup_bound_lp=" << format_real(s.sup_bound_lp[i]) << '\n';
    }
    summary << "sup_err_hg=" << format_real(s.sup_err_hg) << '\n'
            << "sup_err_sm=" << format_real(s.sup_err_sm) << " scheme=" << to_string(res.config.scheme)
            << '\n'
            << "inconsistent_windows=" << s.inconsistent << '\n';
    return kExitOk;
}

namespace {

// Runs `body` with an output stream bound to `path` (stdout if empty).
template <class Body>
int with_output(const std::string& path, const char* cmd, Body&& body) {
    if (path.empty()) return body(std::cout);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "lpdiff " << cmd << ": cannot open output '" << path << "'\n";
        return kExitUsage;
    }
    return body(file);
}

}  // namespace

int cmd_estimate(const RunConfig& cfg) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!cfg.input.empty()) {
        file.open(cfg.input, std::ios::binary);
        if (!file) {
            std::cerr << "lpdiff estimate: cannot open input '" << cfg.input << "'\n";
            return kExitUsage;
        }
        in = &file;
    }
    return with_output(cfg.output, "estimate",
                       [&](std::ostream& out) { return run_estimate(cfg, *in, out, std::cerr); });
}

int cmd_worstcase(const RunConfig& cfg) {
    return with_output(cfg.output, "worstcase",
                       [&](std::ostream& out) { return run_worstcase(cfg, out, std::cerr); });
}

int cmd_simulate(const RunConfig& cfg) {
    std::ofstream mfile;
    if (!cfg.measurements_output.empty()) {
        mfile.open(cfg.measurements_output, std::ios::binary);
        if (!mfile) {
            std::cerr << "lpdiff simulate: cannot open '" << cfg.measurements_output << "'\n";
            return kExitUsage;
        }
    }
    std::ostream& summary = cfg.output.empty() ? std::cerr : std::cout;
    return with_output(cfg.output, "simulate", [&](std::ostream& out) {
        return run_simulate(cfg, out, summary, std::cerr, mfile.is_open() ? &mfile : nullptr);
    });
}

}  // namespace lpdiff::cli
