#include <benchmark/benchmark.h>

#include "esdlab/sweep.hpp"

namespace {

using esdlab::DriveParams;
using esdlab::Family;
using esdlab::sweep::AxisRange;

const DriveParams kFig1{1.0, 0.5};
const AxisRange kTheta{0.0, 3.141592653589793, 181};
const AxisRange kTime{0.0, 25.132741228718345, 801};

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(esdlab::sweep::sweep_theta_time_serial(kFig1, Family::Psi, kTheta, kTime));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        esdlab::sweep::sweep_theta_time(kFig1, Family::Psi, kTheta, kTime, jobs));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

esdlab::sweep::PhaseMapSpec model2_spec() {
  esdlab::sweep::PhaseMapSpec spec;
  spec.model = 2;
  spec.ratio_a = spec.ratio_b = {0.25, 3.0, 12};
  return spec;
}

void BM_PhaseMapSerial(benchmark::State& state) {
  const auto spec = model2_spec();
  for (auto _ : state) benchmark::DoNotOptimize(esdlab::sweep::phase_map_serial(spec));
}
BENCHMARK(BM_PhaseMapSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PhaseMapParallel(benchmark::State& state) {
  const auto spec = model2_spec();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(esdlab::sweep::phase_map(spec, jobs));
}
BENCHMARK(BM_PhaseMapParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
