// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "palrat/genesis.hpp"
#include "palrat/numerics.hpp"
#include "palrat/structural.hpp"

namespace {

using namespace palrat;

void BM_GeneralizedEigenvalues(benchmark::State& state) {
  const auto g = random_para_structured(state.range(0), 2, 1.0, ParaKind::hermitian, 1);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_eigenvalues(g.pencil));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneralizedEigenvalues)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_StrongMinimality(benchmark::State& state) {
  const auto g = random_para_structured(state.range(0), 2, 1.0, ParaKind::hermitian, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_strong_minimality(g.pencil));
}
BENCHMARK(BM_StrongMinimality)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
