#include "lpdiff/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace lpdiff::oracles {

double normalized_h(double epsilon, std::size_t l) {
    if (l < 1) throw ParameterError("h is defined for l >= 1");
    const double dl = static_cast<double>(l);
    return 2.0 * dl / (epsilon * epsilon) + 2.0 / dl;
}

std::size_t normalized_horizon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw ParameterError("epsilon must be positive and finite");
    const double q = std::floor(epsilon);
    const auto Q = static_cast<std::size_t>(q);
    return q * q + q >= epsilon * epsilon ? Q : Q + 1;
}

double min_normalized_h(double epsilon, std::size_t k) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t l = 1; l <= k; ++l) best = std::min(best, normalized_h(epsilon, l));
    return best;
}

WorstCaseFunction::WorstCaseFunction(double epsilon, std::size_t k)
    : epsilon_(epsilon), k_(k), horizon_(normalized_horizon(epsilon)) {
    if (k < 1) throw ParameterError("k must be at least 1");
    window_ = std::min(k_, horizon_);
    terminal_slope_ = normalized_h(epsilon_, window_);
    const double kd = static_cast<double>(k_);
    terminal_ = {2.0 / (epsilon_ * epsilon_), terminal_slope_, 1.0, kd};

    const std::size_t reflected = k_ - window_;
    pieces_.resize(reflected);
    double slope = terminal_.slope(static_cast<double>(reflected));
    for (std::size_t l = reflected; l >= 1; --l) {
        const double ld = static_cast<double>(l);
        pieces_[l - 1] = {slope, slope, -1.0, ld};
        slope = pieces_[l - 1].slope(ld - 1.0);
    }
}

const WorstCaseFunction::Parabola& WorstCaseFunction::piece(double t) const {
    const double reflected = static_cast<double>(pieces_.size());
    if (t >= reflected) return terminal_;
    const auto i = static_cast<std::size_t>(std::max(0.0, std::floor(t)));
    return pieces_[std::min(i, pieces_.size() - 1)];
}

double WorstCaseFunction::value(double t) const { return piece(t).value(t); }

double WorstCaseFunction::derivative(double t) const {
    if (t >= static_cast<double>(k_)) return terminal_.slope(t);
    return piece(t).slope(t);
}

double WorstCaseFunction::second_derivative(double t) const { return 2.0 * piece(t).a2; }

double WorstCaseFunction::left_value(double t) const {
    const double reflected = static_cast<double>(pieces_.size());
    if (t > 0.0 && t <= reflected) {
        const auto i = static_cast<std::size_t>(std::ceil(t)) - 1;
        return pieces_[i].value(t);
    }
    return value(t);
}

double WorstCaseFunction::left_derivative(double t) const {
    const double reflected = static_cast<double>(pieces_.size());
    if (t > 0.0 && t <= reflected) {
        const auto i = static_cast<std::size_t>(std::ceil(t)) - 1;
        return pieces_[i].slope(t);
    }
    return derivative(t);
}

SampledSignal worst_case_signal(const ProblemParams& params, std::size_t k) {
    params.validate_strict();
    if (k < 1) throw ParameterError("k must be at least 1");
    const double eps = 2.0 / params.T * std::sqrt(params.N / params.L);
    const WorstCaseFunction ft(eps, k);

    SampledSignal s;
    s.params = params;
    s.k = k;
    s.f_samples.resize(k + 1);
    s.f1_samples.resize(k + 1);
    s.measurements.assign(k + 1, 0.0);
    for (std::size_t j = 0; j <= k; ++j) {
        const double t = static_cast<double>(j);
        s.f_samples[j] = params.N * ft.value(t);
        s.f1_samples[j] = params.N / params.T * ft.derivative(t);
    }
    return s;
}

SampledSignal random_admissible_signal(const ProblemParams& params, std::size_t k,
                                       std::uint64_t seed) {
    params.validate();
    if (k < 1) throw ParameterError("k must be at least 1");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double half) {
        if (half == 0.0) return 0.0;
        return std::uniform_real_distribution<double>(-half, half)(rng);
    };

    const double T = params.T;
    SampledSignal s;
    s.params = params;
    s.k = k;
    s.f_samples.resize(k + 1);
    s.f1_samples.resize(k + 1);
    s.measurements.resize(k + 1);
    s.f_samples[0] = uniform(1.0);
    s.f1_samples[0] = uniform(1.0);
    for (std::size_t j = 1; j <= k; ++j) {
        const double accel = uniform(params.L);
        s.f1_samples[j] = s.f1_samples[j - 1] + accel * T;
        s.f_samples[j] = s.f_samples[j - 1] + s.f1_samples[j - 1] * T + accel * T * T / 2.0;
    }
    for (std::size_t j = 0; j <= k; ++j) s.measurements[j] = s.f_samples[j] + uniform(params.N);
    return s;
}

namespace {

// Visit every size-r subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t r, Visit&& visit) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        visit(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

VertexBounds brute_force_bounds(const ProblemParams& params, std::span<const double> m) {
    if (m.size() != 2 && m.size() != 3)
        throw ParameterError("vertex enumeration supports windows of 1 or 2 steps only");
    const std::size_t k = m.size() - 1;
    const auto cs = build_constraint_system(params, k);
    const std::size_t rows = cs.rows(), n = cs.variables();

    // -b - Mm <= A x <= b - Mm, as 2*rows one-sided inequalities G x <= h.
    Eigen::MatrixXd G(2 * rows, n);
    Eigen::VectorXd h(2 * rows);
    for (std::size_t r = 0; r < rows; ++r) {
        double mm = 0.0;
        for (std::size_t c = 0; c < k + 1; ++c) mm += cs.M(r, c) * m[c];
        for (std::size_t c = 0; c < n; ++c) {
            G(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cs.A(r, c);
            G(static_cast<Eigen::Index>(rows + r), static_cast<Eigen::Index>(c)) = -cs.A(r, c);
        }
        h(static_cast<Eigen::Index>(r)) = cs.b[r] - mm;
        h(static_cast<Eigen::Index>(rows + r)) = cs.b[r] + mm;
    }

    constexpr double kFeasTol = 1e-9;
    VertexBounds out;
    out.lower = std::numeric_limits<double>::infinity();
    out.upper = -std::numeric_limits<double>::infinity();
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd sub(dim, dim);
    Eigen::VectorXd rhs(dim);

    for_each_subset(2 * rows, n, [&](const std::vector<std::size_t>& idx) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto r = static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]);
            sub.row(i) = G.row(r);
            rhs(i) = h(r);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
        if (lu.rank() < dim) return;
        const Eigen::VectorXd x = lu.solve(rhs);
        const double scale = 1.0 + x.cwiseAbs().maxCoeff();
        if (((G * x - h).array() > kFeasTol * scale).any()) return;
        const double f1k = x(static_cast<Eigen::Index>(cs.objective_index()));
        out.lower = std::min(out.lower, f1k);
        out.upper = std::max(out.upper, f1k);
        ++out.vertices;
    });
    out.feasible = out.vertices > 0;
    if (!out.feasible) out.lower = out.upper = std::numeric_limits<double>::quiet_NaN();
    return out;
}

Counterexample pinned_derivative_fixture() {
    return {ProblemParams{2.0, 0.0, 1.0}, {0.0, 0.0, 4.0}};
}

}  // namespace lpdiff::oracles
