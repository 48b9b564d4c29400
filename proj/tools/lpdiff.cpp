// lpdiff: LP-based derivative estimation from sampled, noisy signals.
//
//   lpdiff estimate  --L 1 --N 0.01 --T 0.01 --in samples.csv --out est.csv
//   lpdiff worstcase --L 1 --N 0.01 --T 0.01
//   lpdiff simulate  --L 1 --N 0.01 --T 0.01 --duration 1.1 --out trace.csv

#include <CLI11.hpp>

#include <iostream>

#include "lpdiff/cli.hpp"

int main(int argc, char** argv) {
    using namespace lpdiff;
    cli::RunConfig cfg;
    std::string scheme = "semi_implicit";
    std::string noise = "fig1";

    CLI::App app{"Derivative bounds for sampled signals via linear programming"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--L", cfg.params.L, "bound on |f''|")->capture_default_str();
        sub->add_option("--N", cfg.params.N, "noise amplitude bound")->capture_default_str();
        sub->add_option("--T", cfg.params.T, "sampling period")->capture_default_str();
        sub->add_option("--out", cfg.output, "output file (default stdout)");
    };

    auto* est = app.add_subcommand("estimate", "estimate derivatives from a t,m CSV");
    add_params(est);
    est->add_option("--in", cfg.input, "input CSV with header t,m (default stdin)");
    est->add_option("--khat", cfg.khats, "window cap (default: horizon K)")->expected(1);

    auto* wc = app.add_subcommand("worstcase", "print the worst-case accuracy profile");
    add_params(wc);

    auto* sim = app.add_subcommand("simulate", "compare differentiators on f(t) = L t^2 / 2");
    add_params(sim);
    sim->add_option("--khat", cfg.khats, "window cap, repeatable (default: horizon K)")
        ->take_all();
    sim->add_option("--duration", cfg.duration, "simulated time span")->capture_default_str();
    sim->add_option("--seed", cfg.seed, "seed for --noise uniform")->capture_default_str();
    sim->add_option("--scheme", scheme, "sliding-mode discretization")
        ->check(CLI::IsMember({"explicit", "semi_implicit"}))
        ->capture_default_str();
    sim->add_option("--noise", noise, "noise model")
        ->check(CLI::IsMember({"fig1", "uniform"}))
        ->capture_default_str();
    sim->add_option("--measurements-out", cfg.measurements_output,
                    "also write the sampled t,m series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        cfg.scheme = baselines::parse_scheme(scheme.c_str());
        cfg.noise = parse_noise(noise.c_str());
    } catch (const std::exception& e) {
        std::cerr << "lpdiff: " << e.what() << '\n';
        return cli::kExitUsage;
    }

    if (est->parsed()) return cli::cmd_estimate(cfg);
    if (wc->parsed()) return cli::cmd_worstcase(cfg);
    return cli::cmd_simulate(cfg);
}
