#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "lpdiff/constraints.hpp"
#include "lpdiff/matrix.hpp"

namespace lpdiff {

enum class Direction { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus s) noexcept;

struct SimplexOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    double pivot_tol = 1e-11;
    /// Phase-1 residual above which the program is declared infeasible.
    double infeasibility_threshold = 1e-7;
    /// Iterations without objective progress before switching to Bland's rule.
    std::size_t stall_limit = 50;
    /// 0 selects a limit proportional to the tableau size.
    std::size_t max_iterations = 0;
};

struct SimplexResult {
    LpStatus status = LpStatus::infeasible;
    double value = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> x;
    std::size_t iterations = 0;
    std::size_t bland_iterations = 0;
};

/// maximize c'x subject to A x <= b with x unrestricted in sign.
///
/// Dense two-phase primal simplex on a full tableau. Free variables are split
/// into differences of nonnegative parts. Pivoting is largest reduced cost;
/// after `stall_limit` iterations without progress Bland's rule takes over
/// until the objective moves again. Throws std::runtime_error if the
/// iteration limit is hit.
SimplexResult maximize(const Matrix& A, std::span<const double> b, std::span<const double> c,
                       const SimplexOptions& options = {});

/// One-sided form of C_k(m): A x <= b - M m stacked over -A x <= b + M m.
struct OneSidedSystem {
    Matrix A;
    std::vector<double> b;
};

OneSidedSystem expand_two_sided(const ConstraintSystem& cs, std::span<const double> m);

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    /// Optimal f1_k; NaN unless optimal.
    double value = std::numeric_limits<double>::quiet_NaN();
    /// Optimal point; empty unless optimal.
    DecisionVector point;
    std::size_t iterations = 0;

    bool optimal() const noexcept { return status == LpStatus::optimal; }
};

/// Extreme value of f1_k over C_k(m).
LpResult solve(Direction direction, const ConstraintSystem& cs, std::span<const double> m,
               const SimplexOptions& options = {});

}  // namespace lpdiff
