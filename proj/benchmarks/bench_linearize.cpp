// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "palrat/genesis.hpp"
#include "palrat/linearize.hpp"

namespace {

using namespace palrat;

GeneratedInstance instance(Index n) {
  GeneratorOptions opts;
  opts.off_circle = true;
  return random_para_structured(n, 2, 1.0, ParaKind::hermitian, 5, opts);
}

void BM_Pfd(benchmark::State& state) {
  const auto g = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(linearize_pfd(g.r, ParaKind::hermitian));
}
BENCHMARK(BM_Pfd)->DenseRange(2, 16, 2);

void BM_StableSplit(benchmark::State& state) {
  const auto g = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(linearize_stable_split(g.r, ParaKind::hermitian));
}
BENCHMARK(BM_StableSplit)->DenseRange(2, 16, 2);

void BM_Taylor(benchmark::State& state) {
  const auto g = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(linearize_taylor(g.r, ParaKind::hermitian));
}
BENCHMARK(BM_Taylor)->DenseRange(2, 16, 2);

void BM_Compressed(benchmark::State& state) {
  const Index m = 3;
  PoleTerm t;
  t.lambda = 0.2;
  for (int j = 0; j < state.range(0); ++j) t.coeffs.push_back(CMatrix::Random(m, m));
  t.coeffs.back() = CMatrix::Random(m, 1) * CMatrix::Random(1, m);
  const CMatrix r0 = CMatrix::Identity(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(linearize_one_pole_compressed(t, r0, ParaKind::hermitian));
}
BENCHMARK(BM_Compressed)->DenseRange(1, 4);

void BM_Moebius(benchmark::State& state) {
  const auto g = random_para_structured(state.range(0), 2, Complex(0.6, 0.8), ParaKind::hermitian, 6);
  const MoebiusMap map = MoebiusMap::general(g.alpha);
  const Pencil s = pencil_preimage(g.pencil, map);
  for (auto _ : state) benchmark::DoNotOptimize(linearize_via_moebius(g.r, s, map));
}
BENCHMARK(BM_Moebius)->DenseRange(1, 9, 2);

}  // namespace

BENCHMARK_MAIN();
