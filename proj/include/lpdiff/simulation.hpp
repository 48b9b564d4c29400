#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpdiff/baselines.hpp"
#include "lpdiff/estimator.hpp"

namespace lpdiff {

enum class NoiseModel { fig1, uniform };

const char* to_string(NoiseModel n) noexcept;
NoiseModel parse_noise(const char* name);

/// Comparison run on f(t) = L t^2 / 2 sampled at t = kT for kT <= duration.
struct SimulationConfig {
    ProblemParams params{1.0, 0.01, 0.01};
    double duration = 1.1;
    /// Window caps for the LP differentiator; empty selects default_window().
    std::vector<std::size_t> khats;
    baselines::Scheme scheme = baselines::Scheme::semi_implicit;
    NoiseModel noise = NoiseModel::fig1;
    std::uint64_t seed = 0;
};

/// Per-sample trace. Errors are estimate minus true derivative L t.
struct SimulationRow {
    std::size_t k = 0;
    double t = 0.0;
    double eta = 0.0;
    double m = 0.0;
    std::vector<double> err_lp;    // per khat
    std::vector<double> bound_lp;  // half-width per khat
    std::vector<EstimateStatus> status_lp;
    double err_hg = 0.0;
    double err_sm = 0.0;
};

/// Sup-norm errors over t >= transient.
struct SimulationSummary {
    double transient = 0.0;
    std::vector<double> sup_err_lp;
    std::vector<double> sup_bound_lp;
    double sup_err_hg = 0.0;
    double sup_err_sm = 0.0;
    std::size_t inconsistent = 0;
};

struct SimulationResult {
    SimulationConfig config;  // khats resolved
    std::vector<double> t;  // every sample, k = 0, 1, ...
    std::vector<double> m;
    std::vector<SimulationRow> rows;  // k = 1, 2, ...
    SimulationSummary summary;
};

/// Throws ParameterError on invalid configuration.
SimulationResult simulate(const SimulationConfig& config);

}  // namespace lpdiff
