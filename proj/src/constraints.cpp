#include "lpdiff/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lpdiff {

DecisionVector::DecisionVector(std::vector<double> f, std::vector<double> f1)
    : f_(std::move(f)), f1_(std::move(f1)) {
    if (f_.size() != f1_.size())
        throw ParameterError("sample and derivative sequences differ in length");
    if (f_.size() < 2) throw ParameterError("a decision vector needs at least two samples");
}

DecisionVector DecisionVector::from_flat(std::span<const double> x) {
    if (x.size() < 4 || x.size() % 2 != 0)
        throw ParameterError("flat decision vector must have even length >= 4");
    const auto half = x.size() / 2;
    return {std::vector<double>(x.begin(), x.begin() + half),
            std::vector<double>(x.begin() + half, x.end())};
}

std::vector<double> DecisionVector::flat() const {
    std::vector<double> out(f_);
    out.insert(out.end(), f1_.begin(), f1_.end());
    return out;
}

DecisionVector DecisionVector::operator-() const {
    auto neg = [](std::vector<double> v) {
        for (auto& e : v) e = -e;
        return v;
    };
    return {neg(f_), neg(f1_)};
}

ConstraintSystem build_constraint_system(const ProblemParams& params, std::size_t k) {
    params.validate();
    if (k < 1) throw ParameterError("window length k must be at least 1");

    ConstraintSystem cs;
    cs.k = k;
    cs.params = params;
    cs.A = Matrix(cs.rows(), cs.variables());
    cs.M = Matrix(cs.rows(), cs.measurements());
    cs.b.assign(cs.rows(), 0.0);

    const double L = params.L, N = params.N, T = params.T;
    const std::size_t d0 = k + 1;  // first derivative column

    for (std::size_t j = 1; j <= k; ++j) {
        // f1_j - f1_{j-1}
        const std::size_t r1 = j - 1;
        cs.A(r1, d0 + j - 1) = -1.0;
        cs.A(r1, d0 + j) = 1.0;
        cs.b[r1] = L * T;

        // f_j - f_{j-1} - T f1_j
        const std::size_t r2 = k + j - 1;
        cs.A(r2, j - 1) = -1.0;
        cs.A(r2, j) = 1.0;
        cs.A(r2, d0 + j) = -T;
        cs.b[r2] = L * T * T / 2.0;
    }
    for (std::size_t j = 0; j <= k; ++j) {
        // f_j - m_j
        const std::size_t r3 = 2 * k + j;
        cs.A(r3, j) = 1.0;
        cs.M(r3, j) = -1.0;
        cs.b[r3] = N;
    }
    return cs;
}

namespace {

void check_dims(const ConstraintSystem& cs, std::size_t nx, std::size_t nm) {
    if (nx != cs.variables())
        throw ParameterError("decision vector has length " + std::to_string(nx) + ", expected " +
                             std::to_string(cs.variables()));
    if (nm != cs.measurements())
        throw ParameterError("measurement vector has length " + std::to_string(nm) +
                             ", expected " + std::to_string(cs.measurements()));
}

}  // namespace

std::vector<double> residuals(const ConstraintSystem& cs, std::span<const double> x,
                              std::span<const double> m) {
    check_dims(cs, x.size(), m.size());
    std::vector<double> out(cs.rows());
    for (std::size_t r = 0; r < cs.rows(); ++r) {
        double s = 0.0;
        const auto a = cs.A.row(r);
        for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * x[c];
        const auto mr = cs.M.row(r);
        for (std::size_t c = 0; c < mr.size(); ++c) s += mr[c] * m[c];
        out[r] = std::abs(s) - cs.b[r];
    }
    return out;
}

std::vector<double> residuals(const ConstraintSystem& cs, const DecisionVector& x,
                              std::span<const double> m) {
    const auto flat = x.flat();
    return residuals(cs, flat, m);
}

bool is_member(const ConstraintSystem& cs, std::span<const double> x, std::span<const double> m,
               double tol) {
    if (tol < 0.0) throw ParameterError("membership tolerance must be nonnegative");
    const auto r = residuals(cs, x, m);
    return std::all_of(r.begin(), r.end(), [tol](double v) { return v <= tol; });
}

bool is_member(const ConstraintSystem& cs, const DecisionVector& x, std::span<const double> m,
               double tol) {
    const auto flat = x.flat();
    return is_member(cs, flat, m, tol);
}

}  // namespace lpdiff
