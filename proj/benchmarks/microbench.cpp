// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "edasat/baselines.hpp"
#include "edasat/cnf.hpp"
#include "edasat/eda.hpp"
#include "edasat/landscape.hpp"
#include "edasat/profiler.hpp"

using namespace edasat;

namespace {

CnfFormula instance(int n) {
  return generate_random_ksat(n, 3 * n, 3, 12345);
}

void FullEvaluation(benchmark::State& state) {
  const CnfFormula f = instance(static_cast<int>(state.range(0)));
  Rng rng(1);
  const Assignment s = random_assignment(f.num_vars, rng);
  for (auto _ : state) benchmark::DoNotOptimize(satisfied_clauses(f, s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(FullEvaluation)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void IncrementalFlip(benchmark::State& state) {
  const CnfFormula f = instance(static_cast<int>(state.range(0)));
  const SatLandscape landscape(f);
  Rng rng(1);
  SatWalk walk(landscape, random_assignment(f.num_vars, rng));
  int v = 1;
  for (auto _ : state) {
    walk.flip(v);
    benchmark::DoNotOptimize(walk.energy());
    v = v % f.num_vars + 1;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(IncrementalFlip)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void EdaIterations(benchmark::State& state) {
  const CnfFormula f = instance(100);
  for (auto _ : state) {
    EdaConfig config;
    config.max_iterations = state.range(0);
    config.schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, state.range(0));
    config.seed = 7;
    benchmark::DoNotOptimize(run_eda(f, config));
  }
}
BENCHMARK(EdaIterations)->Arg(1000)->Arg(10000);

void SaIterations(benchmark::State& state) {
  const CnfFormula f = instance(100);
  for (auto _ : state) {
    BaselineConfig config;
    config.max_iterations = state.range(0);
    config.schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, state.range(0));
    config.seed = 7;
    benchmark::DoNotOptimize(run_sa(f, config));
  }
}
BENCHMARK(SaIterations)->Arg(1000)->Arg(10000);

void Enumeration(benchmark::State& state) {
  const CnfFormula f = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(f).count);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(Enumeration)->DenseRange(10, 18, 2)->Complexity(benchmark::o1);

void MinimaCensus(benchmark::State& state) {
  const CnfFormula f = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_local_minima(f).size());
}
BENCHMARK(MinimaCensus)->DenseRange(8, 14, 2);

}  // namespace

BENCHMARK_MAIN();
