#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpdiff {

/// Thrown for invalid parameters or mismatched dimensions.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown for unusable input data (non-finite samples, malformed files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an estimate is requested before two samples exist.
class NotReadyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Signal class and sampling: |f''| <= L, |noise| <= N, sampling period T.
struct ProblemParams {
    double L = 0.0;
    double N = 0.0;
    double T = 1.0;

    /// Basic admissibility: L >= 0, N >= 0, T > 0, all finite.
    void validate() const {
        if (!std::isfinite(L) || !std::isfinite(N) || !std::isfinite(T))
            throw ParameterError("L, N and T must be finite");
        if (L < 0.0) throw ParameterError("L must be nonnegative");
        if (N < 0.0) throw ParameterError("N must be nonnegative");
        if (T <= 0.0) throw ParameterError("T must be positive");
    }

    /// The closed-form worst-case quantities need strictly positive L and N.
    void validate_strict() const {
        validate();
        if (L <= 0.0) throw ParameterError("L must be positive");
        if (N <= 0.0) throw ParameterError("N must be positive");
    }
};

}  // namespace lpdiff
