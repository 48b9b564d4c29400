#include "lpdiff/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpdiff {

const char* to_string(LpStatus s) noexcept {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Full tableau. Column layout: [x+ (n) | x- (n) | slack (m) | artificial (na) | rhs].
// The objective row stores -reduced costs, its rhs the current objective value.
class Tableau {
public:
    Tableau(const Matrix& A, std::span<const double> b, const SimplexOptions& opt)
        : opt_(opt), m_(A.rows()), n_(A.cols()) {
        std::size_t na = 0;
        for (double v : b) na += v < 0.0 ? 1 : 0;
        art_begin_ = 2 * n_ + m_;
        cols_ = art_begin_ + na;
        t_ = Matrix(m_, cols_ + 1);
        obj_.assign(cols_ + 1, 0.0);
        basis_.assign(m_, kNone);

        std::size_t a = art_begin_;
        for (std::size_t i = 0; i < m_; ++i) {
            const double sgn = b[i] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_; ++j) {
                t_(i, j) = sgn * A(i, j);
                t_(i, n_ + j) = -sgn * A(i, j);
            }
            t_(i, 2 * n_ + i) = sgn;
            t_(i, cols_) = sgn * b[i];
            if (sgn < 0.0) {
                t_(i, a) = 1.0;
                basis_[i] = a++;
            } else {
                basis_[i] = 2 * n_ + i;
            }
        }
        limit_ = opt.max_iterations ? opt.max_iterations : 50 * (m_ + cols_) + 1000;
    }

    bool has_artificials() const noexcept { return cols_ > art_begin_; }

    // Phase 1: maximize -sum(artificials). Returns the attained sum.
    double phase_one() {
        std::vector<double> cost(cols_, 0.0);
        for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = -1.0;
        set_objective(cost);
        const auto st = iterate(cols_);
        (void)st;  // bounded by construction
        return -obj_[cols_];
    }

    // Pivot remaining (zero-level) artificials out of the basis where possible.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < art_begin_) continue;
            std::size_t best = kNone;
            double best_abs = opt_.pivot_tol;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                const double v = std::abs(t_(i, j));
                if (v > best_abs) {
                    best_abs = v;
                    best = j;
                }
            }
            if (best != kNone) pivot(i, best);
        }
    }

    // Phase 2 over the structural and slack columns.
    LpStatus phase_two(std::span<const double> c) {
        std::vector<double> cost(cols_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) {
            cost[j] = c[j];
            cost[n_ + j] = -c[j];
        }
        set_objective(cost);
        return iterate(art_begin_);
    }

    std::vector<double> solution() const {
        std::vector<double> x(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            const auto j = basis_[i];
            if (j < n_)
                x[j] += t_(i, cols_);
            else if (j < 2 * n_)
                x[j - n_] -= t_(i, cols_);
        }
        return x;
    }

    std::size_t iterations() const noexcept { return iterations_; }
    std::size_t bland_iterations() const noexcept { return bland_iterations_; }

private:
    void set_objective(const std::vector<double>& cost) {
        std::fill(obj_.begin(), obj_.end(), 0.0);
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = -cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const double cb = cost[basis_[i]];
            if (cb == 0.0) continue;
            const auto row = t_.row(i);
            for (std::size_t j = 0; j <= cols_; ++j) obj_[j] += cb * row[j];
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        auto prow = t_.row(r);
        const double inv = 1.0 / prow[c];
        for (auto& v : prow) v *= inv;
        prow[c] = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            auto row = t_.row(i);
            const double f = row[c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) row[j] -= f * prow[j];
            row[c] = 0.0;
            if (std::abs(row[cols_]) < opt_.feasibility_tol * 1e-3 && row[cols_] < 0.0)
                row[cols_] = 0.0;
        }
        const double f = obj_[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= f * prow[j];
            obj_[c] = 0.0;
        }
        basis_[r] = c;
    }

    std::size_t entering(std::size_t ncols, bool bland) const {
        std::size_t best = kNone;
        double best_val = -opt_.optimality_tol;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (obj_[j] < best_val) {
                if (bland) return j;
                best_val = obj_[j];
                best = j;
            }
        }
        return best;
    }

    std::size_t leaving(std::size_t c, bool bland) const {
        std::size_t best = kNone;
        double best_ratio = 0.0;
        double best_piv = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            const double a = t_(i, c);
            if (a <= opt_.pivot_tol) continue;
            const double ratio = std::max(t_(i, cols_), 0.0) / a;
            if (best == kNone) {
                best = i;
                best_ratio = ratio;
                best_piv = a;
                continue;
            }
            const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
            if (ratio < best_ratio - tie) {
                best = i;
                best_ratio = ratio;
                best_piv = a;
            } else if (ratio <= best_ratio + tie) {
                const bool better = bland ? basis_[i] < basis_[best] : a > best_piv;
                if (better) {
                    best = i;
                    best_ratio = std::min(ratio, best_ratio);
                    best_piv = a;
                }
            }
        }
        return best;
    }

    LpStatus iterate(std::size_t ncols) {
        std::size_t stall = 0;
        bool bland = false;
        double best_obj = obj_[cols_];
        for (;;) {
            const auto c = entering(ncols, bland);
            if (c == kNone) return LpStatus::optimal;
            const auto r = leaving(c, bland);
            if (r == kNone) return LpStatus::unbounded;
            if (++iterations_ > limit_)
                throw std::runtime_error("simplex iteration limit exceeded");
            if (bland) ++bland_iterations_;
            pivot(r, c);

            const double z = obj_[cols_];
            if (z > best_obj + 1e-12 * (1.0 + std::abs(best_obj))) {
                best_obj = z;
                stall = 0;
                bland = false;
            } else if (++stall >= opt_.stall_limit) {
                bland = true;
            }
        }
    }

    const SimplexOptions& opt_;
    std::size_t m_, n_;
    std::size_t art_begin_ = 0, cols_ = 0;
    Matrix t_;
    std::vector<double> obj_;
    std::vector<std::size_t> basis_;
    std::size_t iterations_ = 0, bland_iterations_ = 0, limit_ = 0;
};

}  // namespace

SimplexResult maximize(const Matrix& A, std::span<const double> b, std::span<const double> c,
                       const SimplexOptions& options) {
    if (b.size() != A.rows()) throw ParameterError("rhs length does not match constraint rows");
    if (c.size() != A.cols()) throw ParameterError("cost length does not match variables");

    Tableau tab(A, b, options);
    SimplexResult res;
    if (tab.has_artificials()) {
        const double infeas = tab.phase_one();
        if (infeas > options.infeasibility_threshold) {
            res.status = LpStatus::infeasible;
            res.iterations = tab.iterations();
            res.bland_iterations = tab.bland_iterations();
            return res;
        }
        tab.expel_artificials();
    }
    res.status = tab.phase_two(c);
    res.iterations = tab.iterations();
    res.bland_iterations = tab.bland_iterations();
    if (res.status == LpStatus::optimal) {
        res.x = tab.solution();
        double v = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * res.x[j];
        res.value = v;
    }
    return res;
}

OneSidedSystem expand_two_sided(const ConstraintSystem& cs, std::span<const double> m) {
    if (m.size() != cs.measurements())
        throw ParameterError("measurement vector length does not match the constraint system");
    const std::size_t rows = cs.rows(), cols = cs.variables();
    OneSidedSystem out{Matrix(2 * rows, cols), std::vector<double>(2 * rows)};
    for (std::size_t r = 0; r < rows; ++r) {
        double mm = 0.0;
        const auto mr = cs.M.row(r);
        for (std::size_t c = 0; c < mr.size(); ++c) mm += mr[c] * m[c];
        for (std::size_t c = 0; c < cols; ++c) {
            out.A(r, c) = cs.A(r, c);
            out.A(rows + r, c) = -cs.A(r, c);
        }
        out.b[r] = cs.b[r] - mm;
        out.b[rows + r] = cs.b[r] + mm;
    }
    return out;
}

LpResult solve(Direction direction, const ConstraintSystem& cs, std::span<const double> m,
               const SimplexOptions& options) {
    const auto sys = expand_two_sided(cs, m);
    std::vector<double> cost(cs.variables(), 0.0);
    cost[cs.objective_index()] = direction == Direction::maximize ? 1.0 : -1.0;

    const auto sr = maximize(sys.A, sys.b, cost, options);
    LpResult out;
    out.status = sr.status;
    out.iterations = sr.iterations;
    if (sr.status == LpStatus::optimal) {
        out.value = sr.x[cs.objective_index()];
        out.point = DecisionVector::from_flat(sr.x);
    }
    return out;
}

}  // namespace lpdiff
