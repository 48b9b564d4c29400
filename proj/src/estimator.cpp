#include "lpdiff/estimator.hpp"

#include <cmath>
#include <vector>

namespace lpdiff {

double WorstCaseProfile::h_o(std::size_t l) const {
    if (l < 1) throw ParameterError("h_o is defined for windows of at least one step");
    const double dl = static_cast<double>(l);
    return params.L * params.T * dl / 2.0 + 2.0 * params.N / (params.T * dl);
}

double WorstCaseProfile::hbar(std::size_t k) const { return h_o(std::min(k, K)); }

WorstCaseProfile worst_case_profile(const ProblemParams& params) {
    params.validate_strict();
    WorstCaseProfile p;
    p.params = params;
    p.epsilon = 2.0 / params.T * std::sqrt(params.N / params.L);
    p.Q = static_cast<std::size_t>(std::floor(p.epsilon));
    const double q = static_cast<double>(p.Q);
    const double ratio = 4.0 * params.N / (params.L * params.T * params.T);
    p.K = q * q + q >= ratio ? p.Q : p.Q + 1;
    return p;
}

double accuracy_lower_limit(const ProblemParams& params) {
    params.validate_strict();
    return 2.0 * std::sqrt(params.N * params.L);
}

std::size_t default_window(const ProblemParams& params) {
    params.validate();
    if (params.N == 0.0) return 1;
    if (params.L == 0.0)
        throw ParameterError("no finite horizon for L = 0; pass an explicit window length");
    return worst_case_profile(params).K;
}

const char* to_string(EstimateStatus s) noexcept {
    return s == EstimateStatus::ok ? "ok" : "inconsistent";
}

DerivativeEstimate estimate_window(const ConstraintSystem& cs, std::span<const double> m,
                                   const SimplexOptions& options) {
    DerivativeEstimate out;
    const auto hi = solve(Direction::maximize, cs, m, options);
    if (!hi.optimal()) {
        out.status = EstimateStatus::inconsistent;
        return out;
    }
    const auto lo = solve(Direction::minimize, cs, m, options);
    if (!lo.optimal()) {
        out.status = EstimateStatus::inconsistent;
        return out;
    }
    out.upper = hi.value;
    // Roundoff can cross the bounds on pinned windows.
    out.lower = std::min(lo.value, hi.value);
    out.estimate = (out.upper + out.lower) / 2.0;
    out.width = out.upper - out.lower;
    return out;
}

Estimator::Estimator(const ProblemParams& params) : Estimator(params, default_window(params)) {}

Estimator::Estimator(const ProblemParams& params, std::size_t khat)
    : params_(params), khat_(khat) {
    params_.validate();
    if (khat_ < 1) throw ParameterError("window cap khat must be at least 1");
    full_ = build_constraint_system(params_, khat_);
}

void Estimator::push_measurement(double m) {
    if (!std::isfinite(m)) throw InputError("measurement is not finite");
    window_.push_back(m);
    if (window_.size() > khat_ + 1) window_.pop_front();
    ++count_;
}

DerivativeEstimate Estimator::estimate() const {
    if (count_ < 2) throw NotReadyError("an estimate needs at least two samples");
    const std::size_t k_window = window_.size() - 1;
    const std::vector<double> m(window_.begin(), window_.end());

    DerivativeEstimate out;
    if (k_window == khat_) {
        out = estimate_window(full_, m);
    } else {
        out = estimate_window(build_constraint_system(params_, k_window), m);
    }
    out.k = k();
    if (!out.ok()) {
        out.lower = held_.lower;
        out.upper = held_.upper;
        out.estimate = held_.estimate;
        out.width = held_.width;
    }
    return out;
}

std::optional<DerivativeEstimate> Estimator::update(double m) {
    push_measurement(m);
    if (count_ < 2) return std::nullopt;
    auto out = estimate();
    if (out.ok()) held_ = out;
    return out;
}

}  // namespace lpdiff
