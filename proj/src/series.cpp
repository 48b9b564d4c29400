#include "lpdiff/series.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lpdiff {

namespace {

void check_finite(std::span<const double> m) {
    for (double v : m)
        if (!std::isfinite(v)) throw InputError("measurement is not finite");
}

}  // namespace

std::vector<DerivativeEstimate> estimate_series(const ProblemParams& params, std::size_t khat,
                                                std::span<const double> m) {
    params.validate();
    if (khat < 1) throw ParameterError("window cap khat must be at least 1");
    check_finite(m);
    if (m.size() < 2) return {};

    const std::size_t n = m.size();
    const auto full = build_constraint_system(params, khat);
    std::vector<DerivativeEstimate> out(n - 1);

    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(n - 1);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const auto k = static_cast<std::size_t>(i) + 1;
            const auto kw = std::min(k, khat);
            const auto window = m.subspan(k - kw, kw + 1);
            auto est = kw == khat ? estimate_window(full, window)
                                  : estimate_window(build_constraint_system(params, kw), window);
            est.k = k;
            out[static_cast<std::size_t>(i)] = est;
        } catch (...) {
#pragma omp critical(lpdiff_series_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    DerivativeEstimate held;
    for (auto& e : out) {
        if (e.ok()) {
            held = e;
            continue;
        }
        e.lower = held.lower;
        e.upper = held.upper;
        e.estimate = held.estimate;
        e.width = held.width;
    }
    return out;
}

std::vector<DerivativeEstimate> estimate_series_serial(const ProblemParams& params,
                                                       std::size_t khat,
                                                       std::span<const double> m) {
    check_finite(m);
    Estimator est(params, khat);
    std::vector<DerivativeEstimate> out;
    out.reserve(m.empty() ? 0 : m.size() - 1);
    for (double v : m)
        if (auto e = est.update(v)) out.push_back(*e);
    return out;
}

int series_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lpdiff
