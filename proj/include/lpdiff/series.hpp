#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpdiff/estimator.hpp"

namespace lpdiff {

/// Derivative estimates for samples 1..n-1 of a recorded series.
///
/// Windows are independent LPs and are solved in parallel with OpenMP; the
/// hold-last-consistent pass over inconsistent windows runs afterwards in
/// sample order. Output is identical to estimate_series_serial().
std::vector<DerivativeEstimate> estimate_series(const ProblemParams& params, std::size_t khat,
                                                std::span<const double> m);

/// Reference: feeds the series through one streaming Estimator.
std::vector<DerivativeEstimate> estimate_series_serial(const ProblemParams& params,
                                                       std::size_t khat,
                                                       std::span<const double> m);

/// Number of OpenMP threads available to estimate_series (1 without OpenMP).
int series_threads() noexcept;

}  // namespace lpdiff
