#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "lpdiff/cli.hpp"
#include "lpdiff/csv.hpp"

using namespace lpdiff;
using namespace lpdiff::cli;

namespace {

std::vector<std::vector<std::string>> parse_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) rows.push_back(csv::split(line));
    return rows;
}

std::string zeros_csv(std::size_t n, double T) {
    std::ostringstream s;
    s << "t,m\n";
    for (std::size_t k = 0; k < n; ++k) s << csv::format_real(k * T) << ",0\n";
    return s.str();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int run_tool(const std::string& args) {
    const std::string cmd = std::string(LPDIFF_TOOL) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("format_real round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, 0.0}) {
        CHECK(std::strtod(csv::format_real(v).c_str(), nullptr) == v);
    }
    CHECK(csv::format_real(0.01) == "0.01");
}

TEST_CASE("estimate on zero measurements") {
    RunConfig cfg;
    std::istringstream in(zeros_csv(30, 0.01));
    std::ostringstream out, err;
    REQUIRE(run_estimate(cfg, in, out, err) == kExitOk);
    const auto rows = parse_rows(out.str());
    REQUIRE(rows.size() == 30);
    CHECK(rows[0] == std::vector<std::string>{"k", "t", "m", "f1_lower", "f1_upper", "f1_hat",
                                              "width", "status"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto k = std::stoul(rows[i][0]);
        CHECK(k == i);
        CHECK(rows[i][7] == "ok");
        if (k >= 20) {
            CHECK(std::abs(std::stod(rows[i][3]) + 0.2) < 1e-9);
            CHECK(std::abs(std::stod(rows[i][4]) - 0.2) < 1e-9);
        }
    }
}

TEST_CASE("estimate with two samples in the one-step regime") {
    RunConfig cfg;
    cfg.params = {1.0, 0.1, 1.0};
    std::istringstream in("t,m\n0,0.25\n1,1.5\n");
    std::ostringstream out, err;
    REQUIRE(run_estimate(cfg, in, out, err) == kExitOk);
    const auto rows = parse_rows(out.str());
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][5]) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("estimate input errors") {
    RunConfig cfg;
    std::ostringstream out, err;
    SUBCASE("nonuniform spacing") {
        std::istringstream in("t,m\n0,0\n0.02,0\n0.04,0\n");
        CHECK(run_estimate(cfg, in, out, err) == kExitUsage);
        CHECK(err.str().find("spacing") != std::string::npos);
    }
    SUBCASE("bad header") {
        std::istringstream in("time,m\n0,0\n");
        CHECK(run_estimate(cfg, in, out, err) == kExitUsage);
    }
    SUBCASE("bad number") {
        std::istringstream in("t,m\n0,0\n0.01,abc\n");
        CHECK(run_estimate(cfg, in, out, err) == kExitUsage);
        CHECK(err.str().find("line 3") != std::string::npos);
    }
    SUBCASE("too few fields") {
        std::istringstream in("t,m\n0\n");
        CHECK(run_estimate(cfg, in, out, err) == kExitUsage);
    }
    SUBCASE("invalid params") {
        cfg.params.T = -1;
        std::istringstream in(zeros_csv(3, 0.01));
        CHECK(run_estimate(cfg, in, out, err) == kExitUsage);
    }
}

TEST_CASE("estimate flags inconsistent windows") {
    RunConfig cfg;
    cfg.params = {1.0, 0.01, 0.1};
    cfg.khats = {3};
    std::istringstream in("t,m\n0,0\n0.1,0\n0.2,0\n0.3,4\n0.4,0\n");
    std::ostringstream out, err;
    CHECK(run_estimate(cfg, in, out, err) == kExitInconsistent);
    const auto rows = parse_rows(out.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[3][7] == "inconsistent");
    CHECK(rows[3][5] == rows[2][5]);
}

TEST_CASE("worstcase tables") {
    std::ostringstream out, err;
    RunConfig cfg;
    REQUIRE(run_worstcase(cfg, out, err) == kExitOk);
    CHECK(out.str().find("K=20\n") != std::string::npos);
    CHECK(out.str().find("lower_limit=0.2") != std::string::npos);
    const auto rows = parse_rows(out.str());
    CHECK(std::abs(std::stod(rows.back()[1]) - 0.2) < 1e-12);
    CHECK(rows.back()[0] == "20");

    std::ostringstream out2;
    cfg.params = {1.0, 1.0, 1.0};
    REQUIRE(run_worstcase(cfg, out2, err) == kExitOk);
    CHECK(out2.str().find("K=2\nhbar_K=2\nlower_limit=2\nl,hbar\n1,2.5\n2,2\n") !=
          std::string::npos);

    std::ostringstream out3;
    cfg.params = {1.0, 0.1, 1.0};
    REQUIRE(run_worstcase(cfg, out3, err) == kExitOk);
    CHECK(out3.str().find("K=1\n") != std::string::npos);

    cfg.params = {0.0, 0.1, 1.0};
    CHECK(run_worstcase(cfg, out3, err) == kExitUsage);
}

TEST_CASE("simulate trace and round trip through estimate") {
    RunConfig cfg;
    std::ostringstream out, summary, err, meas;
    REQUIRE(run_simulate(cfg, out, summary, err, &meas) == kExitOk);
    const auto rows = parse_rows(out.str());
    REQUIRE(rows.size() == 111);
    CHECK(rows[0] == std::vector<std::string>{"t", "eta", "err_lp", "bound_lp", "err_hg", "err_sm"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double t = std::stod(rows[i][0]);
        if (t >= 0.2 - 1e-12) {
            CHECK(std::abs(std::stod(rows[i][2])) <= 0.2 + 1e-6);
            CHECK(std::stod(rows[i][3]) <= 0.2 + 1e-6);
        }
    }
    CHECK(summary.str().find("sup_err_hg=") != std::string::npos);

    // Feed the sampled series back into estimate.
    std::istringstream min(meas.str());
    std::ostringstream est, err2;
    REQUIRE(run_estimate(cfg, min, est, err2) == kExitOk);
    const auto erows = parse_rows(est.str());
    REQUIRE(erows.size() == rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double t = std::stod(erows[i][1]);
        const double err_lp = std::stod(erows[i][5]) - cfg.params.L * t;
        CHECK(std::abs(err_lp - std::stod(rows[i][2])) < 1e-9);
    }

    // Same route rebuilding m = L t^2/2 + eta from the trace columns.
    std::ostringstream rebuilt;
    rebuilt << "t,m\n0," << csv::format_real(cfg.params.N) << '\n';
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double t = std::stod(rows[i][0]);
        rebuilt << rows[i][0] << ','
                << csv::format_real(cfg.params.L * t * t / 2 + std::stod(rows[i][1])) << '\n';
    }
    std::istringstream rin(rebuilt.str());
    std::ostringstream est2;
    REQUIRE(run_estimate(cfg, rin, est2, err2) == kExitOk);
    const auto r2 = parse_rows(est2.str());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double err_lp = std::stod(r2[i][5]) - cfg.params.L * std::stod(r2[i][1]);
        CHECK(std::abs(err_lp - std::stod(rows[i][2])) < 1e-9);
    }
}

TEST_CASE("simulate noise-free and multi-window variants") {
    RunConfig cfg;
    cfg.params.N = 0.0;
    std::ostringstream out, summary, err;
    REQUIRE(run_simulate(cfg, out, summary, err) == kExitOk);
    const auto rows = parse_rows(out.str());
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(std::abs(std::stod(rows[i][2])) <= cfg.params.L * cfg.params.T / 2 + 1e-9);

    RunConfig multi;
    multi.khats = {20, 40};
    multi.duration = 0.5;
    std::ostringstream o2, s2;
    REQUIRE(run_simulate(multi, o2, s2, err) == kExitOk);
    const auto r2 = parse_rows(o2.str());
    CHECK(r2[0].size() == 8);
    CHECK(r2[0][6] == "err_lp_k40");

    RunConfig bad;
    bad.duration = -1.0;
    CHECK(run_simulate(bad, o2, s2, err) == kExitUsage);
}

TEST_CASE("command-line tool") {
    const std::string dir = LPDIFF_TMPDIR;
    const std::string in = dir + "/cli_in.csv";
    {
        std::ofstream f(in);
        f << zeros_csv(25, 0.01);
    }
    CHECK(run_tool("worstcase --L 1 --N 0.01 --T 0.01") == 0);
    CHECK(run_tool("worstcase --L 0 --N 0.01 --T 0.01") == 1);
    CHECK(run_tool("estimate --L 1 --N 0.01 --T 0.01 --in " + in + " --out " + dir + "/cli_out.csv") == 0);
    CHECK(slurp(dir + "/cli_out.csv").rfind("k,t,m,f1_lower,f1_upper,f1_hat,width,status\n", 0) == 0);
    CHECK(run_tool("estimate --L 1 --N 0.01 --T 0.02 --in " + in) == 1);
    CHECK(run_tool("estimate --in " + dir + "/missing.csv") == 1);
    CHECK(run_tool("frobnicate") == 1);
    CHECK(run_tool("simulate --scheme matching") == 1);

    // Determinism: identical invocations give identical bytes.
    const std::string a = dir + "/sim_a.csv", b = dir + "/sim_b.csv";
    REQUIRE(run_tool("simulate --duration 0.4 --out " + a) == 0);
    REQUIRE(run_tool("simulate --duration 0.4 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
    REQUIRE(run_tool("simulate --duration 0.4 --noise uniform --seed 3 --out " + a) == 0);
    REQUIRE(run_tool("simulate --duration 0.4 --noise uniform --seed 3 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}
