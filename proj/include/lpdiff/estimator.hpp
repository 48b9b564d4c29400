#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "lpdiff/constraints.hpp"
#include "lpdiff/lp.hpp"
#include "lpdiff/params.hpp"

namespace lpdiff {

/// Closed-form worst-case accuracy of the LP differentiator at zero measurements.
///
/// With eps = (2/T) sqrt(N/L) and Q = floor(eps), the horizon is K = Q when
/// Q^2 + Q >= 4N/(LT^2) and Q + 1 otherwise. A window of l steps guarantees
/// the half-width h_o(l) = LTl/2 + 2N/(Tl); the best value h_o(K) is reached
/// after K samples and held from then on.
struct WorstCaseProfile {
    ProblemParams params;
    double epsilon = 0.0;
    std::size_t Q = 0;
    std::size_t K = 0;

    double h_o(std::size_t l) const;
    /// Half-width bound after k steps: h_o(min(k, K)).
    double hbar(std::size_t k) const;
};

WorstCaseProfile worst_case_profile(const ProblemParams& params);

/// 2 sqrt(NL): no choice of T gives a worst-case half-width below this.
double accuracy_lower_limit(const ProblemParams& params);

/// Window cap used when none is given: K for L, N > 0 and 1 when N = 0.
/// Throws ParameterError when L = 0 < N, where no finite horizon exists.
std::size_t default_window(const ProblemParams& params);

enum class EstimateStatus { ok, inconsistent };

const char* to_string(EstimateStatus s) noexcept;

struct DerivativeEstimate {
    std::size_t k = 0;
    double lower = std::numeric_limits<double>::quiet_NaN();
    double upper = std::numeric_limits<double>::quiet_NaN();
    double estimate = std::numeric_limits<double>::quiet_NaN();
    double width = std::numeric_limits<double>::quiet_NaN();
    EstimateStatus status = EstimateStatus::ok;

    bool ok() const noexcept { return status == EstimateStatus::ok; }
};

/// Bounds on f1 at the newest sample of a window of measurements m[0..k].
///
/// Values are NaN when the window is inconsistent.
DerivativeEstimate estimate_window(const ConstraintSystem& cs, std::span<const double> m,
                                   const SimplexOptions& options = {});

/// Sliding-window LP differentiator for a single sample stream.
///
/// Keeps the newest min(k, khat) + 1 measurements. One instance per stream;
/// estimate() is const and may run alongside other const calls, but not
/// alongside push_measurement() or update().
class Estimator {
public:
    explicit Estimator(const ProblemParams& params);
    Estimator(const ProblemParams& params, std::size_t khat);

    const ProblemParams& params() const noexcept { return params_; }
    std::size_t khat() const noexcept { return khat_; }

    /// Index of the newest sample; only meaningful once a sample was pushed.
    std::size_t k() const noexcept { return count_ == 0 ? 0 : count_ - 1; }
    std::size_t samples() const noexcept { return count_; }
    const std::deque<double>& window() const noexcept { return window_; }

    /// Non-finite values are rejected with InputError.
    void push_measurement(double m);

    /// Solve both LPs over the current window. An inconsistent window yields
    /// status inconsistent with the bounds of the last consistent update().
    /// Throws NotReadyError before the second sample.
    DerivativeEstimate estimate() const;

    /// push_measurement followed by estimate(); remembers consistent results.
    /// Empty for the first sample.
    std::optional<DerivativeEstimate> update(double m);

private:

    ProblemParams params_;
    std::size_t khat_;
    std::size_t count_ = 0;
    std::deque<double> window_;
    ConstraintSystem full_;  // window of khat steps
    DerivativeEstimate held_;
};

}  // namespace lpdiff
