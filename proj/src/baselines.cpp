#include "lpdiff/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpdiff::baselines {

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

void check_period(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("T must be positive");
}

}  // namespace

double high_gain_default_tau(const ProblemParams& params) {
    params.validate_strict();
    return std::exp(-0.5) * std::sqrt(params.N / params.L);
}

HighGainState high_gain_step(const HighGainState& state, double m, double T) {
    check_period(T);
    if (!(state.tau > 0.0)) throw ParameterError("tau must be positive");
    const double a = T / state.tau;
    // (I - T A) y+ = y + T B m, with det(I - T A) = (1 + T/tau)^2.
    const double r1 = state.y1 + 2.0 * a * m;
    const double r2 = state.y2 + a / state.tau * m;
    const double det = (1.0 + a) * (1.0 + a);
    if (det == 0.0) throw std::logic_error("singular implicit Euler system");

    HighGainState next = state;
    next.y1 = (r1 + T * r2) / det;
    next.y2 = ((1.0 + 2.0 * a) * r2 - a / state.tau * r1) / det;
    return next;
}

SlidingModeGains sliding_mode_defaults(const ProblemParams& params) {
    if (!(params.L > 0.0) || !std::isfinite(params.L)) throw ParameterError("L must be positive");
    const double r = 1.5 * std::sqrt(params.L);
    return {2.0 * r, r * r};
}

const char* to_string(Scheme s) noexcept {
    return s == Scheme::explicit_euler ? "explicit" : "semi_implicit";
}

Scheme parse_scheme(const char* name) {
    const std::string_view v(name);
    if (v == "explicit") return Scheme::explicit_euler;
    if (v == "semi_implicit") return Scheme::semi_implicit;
    throw ParameterError("unknown sliding-mode scheme: " + std::string(v));
}

SlidingModeState sliding_mode_step(const SlidingModeState& state, double m, double T,
                                   Scheme scheme) {
    check_period(T);
    const double e = m - state.y1;
    const double s = sign(e);
    const double root = state.k1 * std::sqrt(std::abs(e)) * s;

    SlidingModeState next = state;
    next.y2 = state.y2 + T * state.k2 * s;
    const double drift = scheme == Scheme::explicit_euler ? state.y2 : next.y2;
    next.y1 = state.y1 + T * (root + drift);
    return next;
}

double fig1_noise(double t, const ProblemParams& params) {
    if (params.N == 0.0) return 0.0;
    const double N = params.N, L = params.L;
    if (!(L > 0.0)) throw ParameterError("L must be positive");
    const double width = std::sqrt(N / L);
    const double c = 6.0 * width;
    const double s = t - c * std::floor(t / c);
    if (s < 2.0 * width) return std::max(-N, N - L * s * s);
    return N;
}

}  // namespace lpdiff::baselines
