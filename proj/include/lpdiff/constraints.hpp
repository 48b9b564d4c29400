#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpdiff/matrix.hpp"
#include "lpdiff/params.hpp"

namespace lpdiff {

/// Hypothetical samples f_0..f_k and derivative samples f1_0..f1_k.
///
/// Flattened as [f_0..f_k, f1_0..f1_k], which is the column order of the
/// constraint matrix.
class DecisionVector {
public:
    DecisionVector() = default;
    DecisionVector(std::vector<double> f, std::vector<double> f1);

    /// Unflatten a vector of length 2(k+1).
    static DecisionVector from_flat(std::span<const double> x);

    std::size_t window() const noexcept { return f_.empty() ? 0 : f_.size() - 1; }
    const std::vector<double>& f() const noexcept { return f_; }
    const std::vector<double>& f1() const noexcept { return f1_; }

    std::vector<double> flat() const;

    /// Elementwise negation.
    DecisionVector operator-() const;

private:
    std::vector<double> f_;
    std::vector<double> f1_;
};

/// The polytope C_k(m) = { x : |A x + M m| <= b } for a window of k steps.
///
/// Rows come in three blocks: k rows bounding derivative increments by LT,
/// k rows bounding the Taylor remainder f_{j-1} - f_j + T f1_j by LT^2/2,
/// and k+1 rows bounding |f_j - m_j| by N.
struct ConstraintSystem {
    std::size_t k = 0;
    ProblemParams params;
    Matrix A;
    Matrix M;
    std::vector<double> b;

    std::size_t rows() const noexcept { return 3 * k + 1; }
    std::size_t variables() const noexcept { return 2 * k + 2; }
    std::size_t measurements() const noexcept { return k + 1; }
    /// Column of f1_k, the quantity being bounded.
    std::size_t objective_index() const noexcept { return 2 * k + 1; }
};

ConstraintSystem build_constraint_system(const ProblemParams& params, std::size_t k);

/// |A x + M m| - b, componentwise. x is in C_k(m) iff every entry is <= 0.
std::vector<double> residuals(const ConstraintSystem& cs, std::span<const double> x,
                              std::span<const double> m);
std::vector<double> residuals(const ConstraintSystem& cs, const DecisionVector& x,
                              std::span<const double> m);

inline constexpr double kMembershipTolerance = 1e-9;

bool is_member(const ConstraintSystem& cs, std::span<const double> x, std::span<const double> m,
               double tol = kMembershipTolerance);
bool is_member(const ConstraintSystem& cs, const DecisionVector& x, std::span<const double> m,
               double tol = kMembershipTolerance);

}  // namespace lpdiff
