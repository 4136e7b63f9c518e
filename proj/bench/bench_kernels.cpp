// Serial reference kernels versus their OpenMP counterparts.
//
//   ./build/bench_kernels --benchmark_filter=UnitProduct

#include <benchmark/benchmark.h>

#include "supercong/kernels.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/report.hpp"
#include "supercong/variety.hpp"

namespace sc = supercong;

namespace {

// Gamma_p(1/4) mod p^4 for p = 83 walks roughly 3.5e7 integers.
constexpr std::uint64_t kP = 83;
constexpr std::uint64_t kModulus = kP * kP * kP * kP;

void BM_UnitProductSerial(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sc::kernels::serial::unit_product_mod(1, hi, kP, kModulus));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_UnitProductParallel(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sc::kernels::parallel::unit_product_mod(1, hi, kP, kModulus));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConvolutionSerial(benchmark::State& state) {
    const auto d = sc::fiber_counts(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sc::kernels::serial::cyclic_self_convolution(d.counts));
}

void BM_ConvolutionParallel(benchmark::State& state) {
    const auto d = sc::fiber_counts(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sc::kernels::parallel::cyclic_self_convolution(d.counts));
}

void BM_Suite(benchmark::State& state) {
    sc::SuiteConfig cfg;
    cfg.pmin = 3;
    cfg.pmax = 100;
    cfg.checks = {sc::CheckId::A3, sc::CheckId::A4, sc::CheckId::C5};
    cfg.workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sc::run_suite(cfg));
}

}  // namespace

BENCHMARK(BM_UnitProductSerial)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitProductParallel)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConvolutionSerial)->Arg(1009)->Arg(4001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolutionParallel)->Arg(1009)->Arg(4001)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Suite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);

BENCHMARK_MAIN();
