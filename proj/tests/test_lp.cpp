#include <doctest.h>

#include <cmath>
#include <random>

#include "lpdiff/lp.hpp"
#include "lpdiff/oracles.hpp"

using namespace lpdiff;

namespace {

// Rows of A x <= b with x >= 0 added as -x <= 0.
struct Program {
    Matrix A;
    std::vector<double> b;
};

Program with_nonnegativity(std::initializer_list<std::initializer_list<double>> rows,
                           std::vector<double> b) {
    const std::size_t n = rows.begin()->size();
    Program p{Matrix(rows.size() + n, n), std::move(b)};
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (double v : row) p.A(r, c++) = v;
        ++r;
    }
    for (std::size_t j = 0; j < n; ++j) {
        p.A(r + j, j) = -1.0;
        p.b.push_back(0.0);
    }
    return p;
}

}  // namespace

TEST_CASE("textbook program") {
    const auto p = with_nonnegativity({{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18});
    const std::vector<double> c{3, 5};
    const auto r = maximize(p.A, p.b, c);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(36.0));
    CHECK(r.x[0] == doctest::Approx(2.0));
    CHECK(r.x[1] == doctest::Approx(6.0));
}

TEST_CASE("classic cycling example terminates") {
    // Largest-coefficient pivoting cycles here without an anti-cycling rule.
    const auto p = with_nonnegativity(
        {{0.5, -5.5, -2.5, 9}, {0.5, -1.5, -0.5, 1}, {1, 0, 0, 0}}, {0, 0, 1});
    const std::vector<double> c{10, -57, -9, -24};
    SimplexOptions opt;
    opt.stall_limit = 5;
    const auto r = maximize(p.A, p.b, c, opt);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("infeasible and unbounded programs") {
    SUBCASE("x <= -1 and -x <= -1") {
        Matrix A(2, 1);
        A(0, 0) = 1;
        A(1, 0) = -1;
        const std::vector<double> b{-1, -1}, c{1};
        CHECK(maximize(A, b, c).status == LpStatus::infeasible);
    }
    SUBCASE("free x with only x >= 0") {
        Matrix A(1, 1);
        A(0, 0) = -1;
        const std::vector<double> b{0}, c{1};
        CHECK(maximize(A, b, c).status == LpStatus::unbounded);
    }
    SUBCASE("phase one with negative right-hand sides") {
        // 2 <= x <= 3, 1 <= y <= 4, maximize x - y.
        Matrix A(4, 2);
        A(0, 0) = 1;
        A(1, 0) = -1;
        A(2, 1) = 1;
        A(3, 1) = -1;
        const std::vector<double> b{3, -2, 4, -1}, c{1, -1};
        const auto r = maximize(A, b, c);
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(r.value == doctest::Approx(2.0));
    }
}

TEST_CASE("dimension errors") {
    Matrix A(2, 2);
    CHECK_THROWS_AS(maximize(A, std::vector<double>{1.0}, std::vector<double>{1.0, 1.0}),
                    ParameterError);
    const auto cs = build_constraint_system({1, 1, 1}, 1);
    CHECK_THROWS_AS(expand_two_sided(cs, std::vector<double>{0, 0, 0}), ParameterError);
    CHECK_THROWS_AS(solve(Direction::maximize, cs, std::vector<double>{0}), ParameterError);
}

TEST_CASE("one-sided expansion") {
    SUBCASE("zero measurements duplicate b") {
        const auto cs = build_constraint_system({1, 1, 1}, 1);
        const auto sys = expand_two_sided(cs, std::vector<double>{0, 0});
        CHECK(sys.b == std::vector<double>{1, 0.5, 1, 1, 1, 0.5, 1, 1});
        CHECK(sys.A.rows() == 8);
    }
    SUBCASE("pinned measurement appears as an equality pair") {
        const auto ce = oracles::pinned_derivative_fixture();
        const auto cs = build_constraint_system(ce.params, 2);
        const auto sys = expand_two_sided(cs, ce.m);
        const std::size_t rows = cs.rows();
        const std::size_t r = 2 * 2 + 2;  // noise row of f_2
        CHECK(sys.A(r, 2) == 1.0);
        CHECK(sys.b[r] == 4.0);
        CHECK(sys.A(rows + r, 2) == -1.0);
        CHECK(sys.b[rows + r] == -4.0);
    }
    SUBCASE("feasibility matches membership") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const ProblemParams p{1.0, 0.5, 0.5};
        const auto cs = build_constraint_system(p, 3);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<double> x(cs.variables()), m(cs.measurements());
            for (auto& v : x) v = u(rng);
            for (auto& v : m) v = u(rng);
            const auto sys = expand_two_sided(cs, m);
            bool feasible = true;
            for (std::size_t r = 0; r < sys.A.rows(); ++r) {
                double s = 0.0;
                for (std::size_t c = 0; c < x.size(); ++c) s += sys.A(r, c) * x[c];
                feasible &= s <= sys.b[r] + 1e-12;
            }
            CHECK(feasible == is_member(cs, x, m, 1e-12));
        }
    }
}

TEST_CASE("bounding programs") {
    SUBCASE("pinned derivative") {
        const auto ce = oracles::pinned_derivative_fixture();
        const auto cs = build_constraint_system(ce.params, 2);
        const auto hi = solve(Direction::maximize, cs, ce.m);
        const auto lo = solve(Direction::minimize, cs, ce.m);
        REQUIRE(hi.optimal());
        REQUIRE(lo.optimal());
        CHECK(hi.value == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(lo.value == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("single step at zero measurements") {
        for (const ProblemParams p : {ProblemParams{1.3, 0.7, 0.4}, ProblemParams{1, 1, 1},
                                      ProblemParams{0.2, 0.01, 0.05}}) {
            const auto cs = build_constraint_system(p, 1);
            const auto hi = solve(Direction::maximize, cs, std::vector<double>{0, 0});
            REQUIRE(hi.optimal());
            CHECK(hi.value == doctest::Approx(2 * p.N / p.T + p.L * p.T / 2).epsilon(1e-12));
        }
    }
    SUBCASE("long window reaches the horizon value") {
        const ProblemParams p{1.0, 0.01, 0.01};
        const auto cs = build_constraint_system(p, 25);
        const auto hi = solve(Direction::maximize, cs, std::vector<double>(26, 0.0));
        REQUIRE(hi.optimal());
        CHECK(std::abs(hi.value - 0.2) < 1e-9);
    }
    SUBCASE("inconsistent measurements") {
        const ProblemParams p{1.0, 0.01, 0.1};
        const auto cs = build_constraint_system(p, 2);
        const auto r = solve(Direction::maximize, cs, std::vector<double>{0, 0, 10});
        CHECK(r.status == LpStatus::infeasible);
        CHECK(std::isnan(r.value));
    }
}

TEST_CASE("zero-measurement symmetry and feasible optimal points") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const ProblemParams p{0.2 + 2 * u(rng), 0.01 + 0.2 * u(rng), 0.01 + 0.2 * u(rng)};
        const std::size_t k = 1 + static_cast<std::size_t>(trial % 12);
        const auto cs = build_constraint_system(p, k);
        const std::vector<double> zero(k + 1, 0.0);
        const auto hi = solve(Direction::maximize, cs, zero);
        const auto lo = solve(Direction::minimize, cs, zero);
        REQUIRE(hi.optimal());
        REQUIRE(lo.optimal());
        CHECK(std::abs(hi.value + lo.value) < 1e-9);
        CHECK(is_member(cs, hi.point, zero, 1e-7));
        CHECK(is_member(cs, lo.point, zero, 1e-7));
        CHECK(hi.point.f1().back() == hi.value);

        const auto s = oracles::random_admissible_signal(p, k, 1000 + trial);
        const auto r = solve(Direction::maximize, cs, s.measurements);
        REQUIRE(r.optimal());
        CHECK(is_member(cs, r.point, s.measurements, 1e-7));
    }
}

TEST_CASE("agrees with vertex enumeration on small windows") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const ProblemParams p{0.1 + 3 * u(rng), 0.01 + u(rng), 0.05 + u(rng)};
        const std::size_t k = 1 + trial % 2;
        const auto s = oracles::random_admissible_signal(p, k, 77 + trial);
        const auto bf = oracles::brute_force_bounds(p, s.measurements);
        REQUIRE(bf.feasible);
        const auto cs = build_constraint_system(p, k);
        const auto hi = solve(Direction::maximize, cs, s.measurements);
        const auto lo = solve(Direction::minimize, cs, s.measurements);
        CHECK(std::abs(hi.value - bf.upper) < 1e-7);
        CHECK(std::abs(lo.value - bf.lower) < 1e-7);
    }
}
