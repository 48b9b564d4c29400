#include "lpdiff/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <string_view>

#include "lpdiff/series.hpp"

namespace lpdiff {

const char* to_string(NoiseModel n) noexcept { return n == NoiseModel::fig1 ? "fig1" : "uniform"; }

NoiseModel parse_noise(const char* name) {
    const std::string_view v(name);
    if (v == "fig1") return NoiseModel::fig1;
    if (v == "uniform") return NoiseModel::uniform;
    throw ParameterError("unknown noise model: " + std::string(v));
}

SimulationResult simulate(const SimulationConfig& config) {
    SimulationResult res;
    res.config = config;
    auto& cfg = res.config;
    const auto& p = cfg.params;
    p.validate();
    if (!(p.L > 0.0)) throw ParameterError("simulation needs L > 0");
    if (!(cfg.duration > 0.0) || !std::isfinite(cfg.duration))
        throw ParameterError("duration must be positive");
    if (cfg.khats.empty()) cfg.khats.push_back(default_window(p));
    for (auto kh : cfg.khats)
        if (kh < 1) throw ParameterError("khat must be at least 1");

    const auto n = static_cast<std::size_t>(std::floor(cfg.duration / p.T + 1e-9)) + 1;
    if (n < 2) throw ParameterError("duration shorter than one sampling period");

    std::mt19937_64 rng(cfg.seed);
    auto& t = res.t;
    auto& m = res.m;
    t.resize(n);
    m.resize(n);
    std::vector<double> eta(n);
    for (std::size_t k = 0; k < n; ++k) {
        t[k] = static_cast<double>(k) * p.T;
        if (cfg.noise == NoiseModel::fig1) {
            eta[k] = baselines::fig1_noise(t[k], p);
        } else {
            eta[k] = p.N == 0.0 ? 0.0 : std::uniform_real_distribution<double>(-p.N, p.N)(rng);
        }
        m[k] = p.L * t[k] * t[k] / 2.0 + eta[k];
    }

    std::vector<std::vector<DerivativeEstimate>> lp;
    lp.reserve(cfg.khats.size());
    for (auto kh : cfg.khats) lp.push_back(estimate_series(p, kh, m));

    baselines::HighGainState hg;
    hg.tau = p.N > 0.0 ? baselines::high_gain_default_tau(p) : p.T;
    hg.y1 = m[0];
    const auto gains = baselines::sliding_mode_defaults(p);
    baselines::SlidingModeState sm{m[0], 0.0, gains.k1, gains.k2};

    auto& sum = res.summary;
    sum.transient = static_cast<double>(default_window(p)) * p.T;
    sum.sup_err_lp.assign(cfg.khats.size(), 0.0);
    sum.sup_bound_lp.assign(cfg.khats.size(), 0.0);

    res.rows.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        hg = baselines::high_gain_step(hg, m[k], p.T);
        sm = baselines::sliding_mode_step(sm, m[k], p.T, cfg.scheme);
        const double truth = p.L * t[k];

        SimulationRow row;
        row.k = k;
        row.t = t[k];
        row.eta = eta[k];
        row.m = m[k];
        row.err_hg = hg.y2 - truth;
        row.err_sm = sm.y2 - truth;
        const bool steady = t[k] >= sum.transient - 1e-12 * p.T;
        for (std::size_t i = 0; i < cfg.khats.size(); ++i) {
            const auto& e = lp[i][k - 1];
            row.err_lp.push_back(e.estimate - truth);
            row.bound_lp.push_back(e.width / 2.0);
            row.status_lp.push_back(e.status);
            if (!e.ok()) ++sum.inconsistent;
            if (steady) {
                sum.sup_err_lp[i] = std::max(sum.sup_err_lp[i], std::abs(row.err_lp.back()));
                sum.sup_bound_lp[i] = std::max(sum.sup_bound_lp[i], row.bound_lp.back());
            }
        }
        if (steady) {
            sum.sup_err_hg = std::max(sum.sup_err_hg, std::abs(row.err_hg));
            sum.sup_err_sm = std::max(sum.sup_err_sm, std::abs(row.err_sm));
        }
        res.rows.push_back(std::move(row));
    }
    return res;
}

}  // namespace lpdiff
