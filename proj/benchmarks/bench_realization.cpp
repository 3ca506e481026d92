// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "palrat/decompose.hpp"
#include "palrat/genesis.hpp"
#include "palrat/realize.hpp"

namespace {

using namespace palrat;

RationalMatrix stable_part(Index n, Index m) {
  GeneratorOptions opts;
  opts.off_circle = true;
  return split_stability(random_para_structured(n, m, 1.0, ParaKind::hermitian, 3, opts).r).r_in;
}

void BM_MinimalRealization(benchmark::State& state) {
  const RationalMatrix r = stable_part(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_realization(r));
}
BENCHMARK(BM_MinimalRealization)->DenseRange(2, 16, 2);

void BM_SplitStability(benchmark::State& state) {
  GeneratorOptions opts;
  opts.off_circle = true;
  const auto g = random_para_structured(state.range(0), 2, 1.0, ParaKind::hermitian, 4, opts);
  for (auto _ : state) benchmark::DoNotOptimize(split_stability(g.r));
}
BENCHMARK(BM_SplitStability)->DenseRange(2, 16, 2);

}  // namespace

BENCHMARK_MAIN();
