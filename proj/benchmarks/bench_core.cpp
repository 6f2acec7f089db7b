// Copyright 2026 The cavitytk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cavitytk/cavity_optics.hpp"
#include "cavitytk/ion_impact.hpp"
#include "cavitytk/quantities.hpp"
#include "cavitytk/ringdown.hpp"

using namespace cavitytk;

static void BM_FitRingdown(benchmark::State& state) {
  const auto trace = ringdown::synthesize_trace(1.0, 523e3, 3e-6, 2e8, 0.01, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ringdown::fit_ringdown(trace));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trace.size()));
}
BENCHMARK(BM_FitRingdown);

static void BM_PoolTraces(benchmark::State& state) {
  std::vector<ringdown::RingdownTrace> traces;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    traces.push_back(ringdown::synthesize_trace(1.0, 523e3, 3e-6, 2e8, 0.1, seed));
  }
  const auto mode = state.range(0) ? ringdown::PoolingMode::joint_v0 : ringdown::PoolingMode::per_trace;
  for (auto _ : state) benchmark::DoNotOptimize(ringdown::pool_traces(traces, mode));
}
BENCHMARK(BM_PoolTraces)->Arg(0)->Arg(1);

static void BM_MonteCarloFinesse(benchmark::State& state) {
  const UncertainQuantity lw(523e3, 9e3, dim::frequency);
  const UncertainQuantity fsr(7.41e9, 13e6, dim::frequency);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_monte_carlo(
        [](std::span<const double> x) { return x[1] / x[0]; }, {lw, fsr}, n, 0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloFinesse)->Arg(10'000)->Arg(100'000);

static void BM_ExtinctionFromFinesse(benchmark::State& state) {
  const UncertainQuantity f00(23340, 60), f01(14160, 250), h(30e-9, 2e-9, dim::length);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavity::extinction_from_finesse(f00, f01, h, 1650e-9, {100'000, 0}));
  }
}
BENCHMARK(BM_ExtinctionFromFinesse)->Unit(benchmark::kMillisecond);

static void BM_BesselJ0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(ion::bessel_j0(x));
}
BENCHMARK(BM_BesselJ0)->Arg(5)->Arg(100)->Arg(150);

static void BM_CoolingBudget(benchmark::State& state) {
  const auto trap = ion::ytterbium_example_trap();
  for (auto _ : state) benchmark::DoNotOptimize(ion::max_charge_for_cooling(trap, 200e-6, 0.5));
}
BENCHMARK(BM_CoolingBudget);
BENCHMARK_MAIN();
