#include "d2dbound/bounds.hpp"
#include "d2dbound/geometry.hpp"
#include "d2dbound/guard.hpp"
#include "d2dbound/mcsim.hpp"

#include <benchmark/benchmark.h>

using namespace d2d;

namespace {

RadioConfig quiet()
{
    RadioConfig r;
    r.noise_mode = NoiseMode::Zero;
    return r;
}

void BM_IntersectionArea(benchmark::State& state)
{
    double d = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersection_area(253.0, 90.0, d));
        d = d > 340.0 ? 0.1 : d + 0.37;
    }
}
BENCHMARK(BM_IntersectionArea);

void BM_SolveGuards(benchmark::State& state)
{
    auto radio = quiet();
    radio.p_due_mw = static_cast<double>(state.range(0)) / 10.0;
    const CellConfig cell;
    for (auto _ : state) benchmark::DoNotOptimize(solve_guards(radio, cell));
}
BENCHMARK(BM_SolveGuards)->Arg(7)->Arg(20)->Arg(60);

void BM_DeployableSweep(benchmark::State& state)
{
    const CellConfig cell;
    const auto gd = guard_distances(quiet(), cell);
    for (auto _ : state) {
        for (double d = 0.0; d <= 500.0; d += 5.0) benchmark::DoNotOptimize(deployable_area(d, gd, cell));
    }
}
BENCHMARK(BM_DeployableSweep);

void BM_SaturationTrial(benchmark::State& state)
{
    const CellConfig cell;
    const auto radio = quiet();
    const auto gd = guard_distances(radio, cell);
    TrialConfig cfg;
    cfg.d_cb_m = 250.0;
    std::uint64_t i = 0;
    for (auto _ : state) {
        cfg.seed = derive_seed(1, i++);
        benchmark::DoNotOptimize(run_saturation_trial(cfg, radio, cell, gd));
    }
}
BENCHMARK(BM_SaturationTrial)->Unit(benchmark::kMillisecond);

void BM_PppTrial(benchmark::State& state)
{
    const CellConfig cell;
    const auto radio = quiet();
    const auto gd = guard_distances(radio, cell);
    TrialConfig cfg;
    cfg.mode = PppMode{static_cast<double>(state.range(0)) * 1e-5};
    std::uint64_t i = 0;
    for (auto _ : state) {
        cfg.seed = derive_seed(2, i++);
        benchmark::DoNotOptimize(run_ppp_trial(cfg, radio, cell, gd));
    }
}
BENCHMARK(BM_PppTrial)->Arg(4)->Arg(12)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
