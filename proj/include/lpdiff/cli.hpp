#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpdiff/baselines.hpp"
#include "lpdiff/params.hpp"
#include "lpdiff/simulation.hpp"

namespace lpdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;

struct RunConfig {
    ProblemParams params{1.0, 0.01, 0.01};
    /// Window caps; estimate uses the first, simulate runs each.
    std::vector<std::size_t> khats;
    std::string input;   // empty: stdin
    std::string output;  // empty: stdout
    /// simulate only: also write the sampled `t,m` series here.
    std::string measurements_output;
    double duration = 1.1;
    std::uint64_t seed = 0;
    baselines::Scheme scheme = baselines::Scheme::semi_implicit;
    NoiseModel noise = NoiseModel::fig1;

    /// Throws ParameterError for non-finite options or khat < 1.
    void validate() const;
};

// Stream-level commands. Diagnostics go to `err`.

/// `t,m` in, `k,t,m,f1_lower,f1_upper,f1_hat,width,status` out.
int run_estimate(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_worstcase(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// CSV trace to `out`, summary to `summary`; writes `measurements` if non-null.
int run_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& summary,
                 std::ostream& err, std::ostream* measurements = nullptr);

// File-level commands: open cfg.input / cfg.output, falling back to std streams.
int cmd_estimate(const RunConfig& cfg);
int cmd_worstcase(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);

}  // namespace lpdiff::cli
