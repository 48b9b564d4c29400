#pragma once

#include "lpdiff/params.hpp"

namespace lpdiff::baselines {

/// Linear second-order differentiator with a double eigenvalue at -1/tau:
///   y1' = (2/tau)(m - y1) + y2,  y2' = (m - y1)/tau^2,  output y2.
struct HighGainState {
    double y1 = 0.0;
    double y2 = 0.0;
    double tau = 1.0;
};

/// tau = e^{-1/2} sqrt(N/L), which minimises the asymptotic error bound.
double high_gain_default_tau(const ProblemParams& params);

/// Asymptotic worst-case error of the tuned high-gain differentiator,
/// in units of sqrt(NL).
inline constexpr double kHighGainAccuracyFactor = 2.4261226388505;  // 4 e^{-1/2}

/// One implicit Euler step driven by the newest measurement m.
HighGainState high_gain_step(const HighGainState& state, double m, double T);

/// First-order robust exact (super-twisting) differentiator:
///   y1' = k1 |m - y1|^{1/2} sign(m - y1) + y2,  y2' = k2 sign(m - y1).
struct SlidingModeState {
    double y1 = 0.0;
    double y2 = 0.0;
    double k1 = 1.0;
    double k2 = 1.0;
};

struct SlidingModeGains {
    double k1;
    double k2;
};

/// r = 1.5 sqrt(L); k1 = 2r, k2 = r^2.
SlidingModeGains sliding_mode_defaults(const ProblemParams& params);

enum class Scheme {
    /// Forward Euler with the nonlinearity evaluated at the current state.
    explicit_euler,
    /// y2 first, using the sign of the current error; then y1 with the new y2.
    semi_implicit,
};

const char* to_string(Scheme s) noexcept;
/// Accepts "explicit" and "semi_implicit"; throws ParameterError otherwise.
Scheme parse_scheme(const char* name);

SlidingModeState sliding_mode_step(const SlidingModeState& state, double m, double T,
                                   Scheme scheme);

/// Periodic test noise: N - L s^2 clipped at -N for s < 2 sqrt(N/L) and N
/// afterwards, where s = t mod c and c = 6 sqrt(N/L). Zero when N = 0.
double fig1_noise(double t, const ProblemParams& params);

}  // namespace lpdiff::baselines
