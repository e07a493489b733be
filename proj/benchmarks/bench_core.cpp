#include "drot/constraints.hpp"
#include "drot/dynamics.hpp"
#include "drot/partition.hpp"
#include "drot/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Step(benchmark::State& state) {
  const auto spec = drot::ParamSpec::exact(drot::Rational(137, 70));
  drot::LatticePoint p{-5, -5};
  for (auto _ : state) {
    p = step(spec, p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Step);

void BM_DetectCycle(benchmark::State& state) {
  const auto spec = drot::ParamSpec::exact(drot::Rational(78, 41));
  for (auto _ : state) {
    auto r = detect_cycle(spec, {10, 9});
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * 1802);
}
BENCHMARK(BM_DetectCycle);

void BM_IntervalForCycle(benchmark::State& state) {
  const auto cycle = *detect_cycle(drot::ParamSpec::exact(drot::Rational(78, 41)), {10, 9}).cycle;
  for (auto _ : state) {
    auto i = interval_for_cycle(cycle);
    benchmark::DoNotOptimize(i);
  }
}
BENCHMARK(BM_IntervalForCycle);

void BM_ComputeAtlas(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) {
    auto atlas = drot::compute_atlas(-m, -m - (m > 1 ? 1 : 0));
    benchmark::DoNotOptimize(atlas);
  }
}
BENCHMARK(BM_ComputeAtlas)->Arg(1)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_VerifyAtlas(benchmark::State& state) {
  const auto atlas = drot::compute_atlas(-5, -6);
  for (auto _ : state) {
    auto report = verify_atlas(atlas);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyAtlas)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
