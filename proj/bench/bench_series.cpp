// Serial streaming estimator vs the OpenMP series kernel on the Fig. 1 style
// scenario (f = t^2/2 plus periodic noise).

#include <benchmark/benchmark.h>

#include <vector>

#include "lpdiff/baselines.hpp"
#include "lpdiff/series.hpp"

namespace {

std::vector<double> scenario(const lpdiff::ProblemParams& p, std::size_t n) {
    std::vector<double> m(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * p.T;
        m[k] = p.L * t * t / 2 + lpdiff::baselines::fig1_noise(t, p);
    }
    return m;
}

const lpdiff::ProblemParams kParams{1.0, 0.01, 0.01};

void BM_Serial(benchmark::State& state) {
    const auto khat = static_cast<std::size_t>(state.range(0));
    const auto m = scenario(kParams, 200);
    for (auto _ : state) benchmark::DoNotOptimize(lpdiff::estimate_series_serial(kParams, khat, m));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m.size() - 1));
}

void BM_Parallel(benchmark::State& state) {
    const auto khat = static_cast<std::size_t>(state.range(0));
    const auto m = scenario(kParams, 200);
    for (auto _ : state) benchmark::DoNotOptimize(lpdiff::estimate_series(kParams, khat, m));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m.size() - 1));
    state.counters["threads"] = lpdiff::series_threads();
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(5)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(5)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
