// Serial reference vs OpenMP kernels: polynomial product, modular fuzzing and
// grid verification.

#include <random>

#include <benchmark/benchmark.h>

#include "cbid/builders.hpp"
#include "cbid/grid.hpp"
#include "cbid/pit.hpp"
#include "support/random_instances.hpp"

namespace {

using namespace cbid;

std::pair<SparsePoly, SparsePoly> operands(std::size_t terms)
{
    std::mt19937_64 rng(42);
    return {testkit::random_nonzero_poly(rng, 4, 20, terms), testkit::random_nonzero_poly(rng, 4, 20, terms)};
}

void BM_MulSerial(benchmark::State& state)
{
    const auto [a, b] = operands(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_mul_serial(a, b));
}

void BM_MulParallel(benchmark::State& state)
{
    const auto [a, b] = operands(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_mul_parallel(a, b));
}

const Identity& fuzz_target()
{
    static const Identity id = build_inverse_n(std::vector<std::int64_t>{3, 3, 3, 3});
    return id;
}

void BM_FuzzSerial(benchmark::State& state)
{
    FuzzConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fuzz_verify_serial(fuzz_target(), cfg));
}

void BM_FuzzParallel(benchmark::State& state)
{
    FuzzConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fuzz_verify(fuzz_target(), cfg));
}

GridOptions grid_options()
{
    GridOptions opt;
    opt.bound = 6;
    return opt;
}

void BM_GridSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_grid_serial(Family::three_param, grid_options()));
}

void BM_GridParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_grid(Family::three_param, grid_options()));
}

} // namespace

BENCHMARK(BM_MulSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FuzzSerial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzParallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
