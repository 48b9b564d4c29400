#pragma once

// Independent generators and verifiers used by the test suites: the
// worst-case signal that attains the accuracy bound at zero measurements,
// random admissible signals, the pinned-derivative counterexample, and a
// vertex-enumeration solver for tiny windows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lpdiff/constraints.hpp"
#include "lpdiff/params.hpp"

namespace lpdiff::oracles {

/// Exact samples of a signal together with noisy measurements of it.
struct SampledSignal {
    ProblemParams params;
    std::size_t k = 0;
    std::vector<double> f_samples;
    std::vector<double> f1_samples;
    std::vector<double> measurements;

    /// The stacked vector [f_0..f_k, f1_0..f1_k].
    DecisionVector samples() const { return {f_samples, f1_samples}; }
};

// Quantities in normalized units N = T = 1, L = 4/eps^2.

/// h(l) = 2l/eps^2 + 2/l.
double normalized_h(double epsilon, std::size_t l);
/// Horizon K for a given eps (floor(eps) or floor(eps) + 1).
std::size_t normalized_horizon(double epsilon);
/// min over l in 1..k of h(l), by enumeration.
double min_normalized_h(double epsilon, std::size_t k);

/// The piecewise-parabolic worst-case function on [0, k] in normalized units.
///
/// On [k - kw, k], with kw = min(k, K), it is the parabola
/// 2(t-k)^2/eps^2 + a(t-k) + 1 with a = h(kw). On each earlier unit interval
/// [l-1, l) it is s_l (t-l)^2 + s_l (t-l) - 1 where s_l is the right-limit
/// slope at l; the slopes alternate sign going backwards.
class WorstCaseFunction {
public:
    WorstCaseFunction(double epsilon, std::size_t k);

    double epsilon() const noexcept { return epsilon_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t horizon() const noexcept { return horizon_; }
    std::size_t window() const noexcept { return window_; }
    /// Slope at t = k, equal to h(window()).
    double terminal_slope() const noexcept { return terminal_slope_; }

    double value(double t) const;
    /// Right-limit derivative (left limit at t = k).
    double derivative(double t) const;
    double second_derivative(double t) const;
    /// Limit of value() from the left at t.
    double left_value(double t) const;
    /// Limit of derivative() from the left at t.
    double left_derivative(double t) const;

private:
    // Piece i covers [i, i+1) for i < k - window(); the terminal piece covers the rest.
    struct Parabola {
        double a2, a1, a0, origin;
        double value(double t) const { return (a2 * (t - origin) + a1) * (t - origin) + a0; }
        double slope(double t) const { return 2.0 * a2 * (t - origin) + a1; }
    };
    const Parabola& piece(double t) const;

    double epsilon_;
    std::size_t k_, horizon_, window_;
    double terminal_slope_;
    std::vector<Parabola> pieces_;
    Parabola terminal_;
};

/// f(t) = N * ftilde(t/T) sampled at t = jT, observed through zero measurements.
SampledSignal worst_case_signal(const ProblemParams& params, std::size_t k);

/// Signal with piecewise-constant f'' drawn from [-L, L] on each sampling
/// interval and uniform noise in [-N, N]. Deterministic in `seed`.
SampledSignal random_admissible_signal(const ProblemParams& params, std::size_t k,
                                       std::uint64_t seed);

struct VertexBounds {
    bool feasible = false;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t vertices = 0;
};

/// Extreme f1_k over C_k(m) by enumerating every basis of the one-sided
/// system. Only windows with k in {1, 2} are accepted.
VertexBounds brute_force_bounds(const ProblemParams& params, std::span<const double> m);

struct Counterexample {
    ProblemParams params;
    std::vector<double> m;
};

/// L = 2, T = 1, N = 0, m = [0, 0, 4]: C_2(m) is a nonempty segment with f1_2
/// pinned to 3, yet no admissible function produces these measurements.
Counterexample pinned_derivative_fixture();

}  // namespace lpdiff::oracles
