// Copyright 2026 The gamecheck Authors
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


// Parallel kernels against their serial references, and the integral potential
// test against the cycle test. Thread count follows OMP_NUM_THREADS.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gamecheck/classifiers.h"
#include "gamecheck/game.h"
#include "gamecheck/kernels.h"
#include "gamecheck/reference.h"

namespace gamecheck {
namespace {

Tensor Random(const Shape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Tensor t(shape);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = dist(rng);
  return t;
}

Shape Cube(int extent, int rank) { return Shape(rank, extent); }

void BM_CenterAlongKernel(benchmark::State& state) {
  const Shape shape = Cube(static_cast<int>(state.range(0)), 3);
  const Tensor in = Random(shape, 1);
  Tensor out(shape);
  const std::vector<double> w(shape[1], 1.0);
  for (auto _ : state) {
    kernels::CenterAlong(in.data(), out.data(), shape, 1, w, shape[1]);
    benchmark::DoNotOptimize(out.data().data());
  }
  state.SetItemsProcessed(state.iterations() * in.size());
}

void BM_CenterAlongReference(benchmark::State& state) {
  const Shape shape = Cube(static_cast<int>(state.range(0)), 3);
  const Tensor in = Random(shape, 1);
  Tensor out(shape);
  const std::vector<double> w(shape[1], 1.0);
  for (auto _ : state) {
    reference::CenterAlong(in, out, 1, w, shape[1]);
    benchmark::DoNotOptimize(out.data().data());
  }
  state.SetItemsProcessed(state.iterations() * in.size());
}

void BM_CycleMaxKernel(benchmark::State& state) {
  const Shape shape = Cube(static_cast<int>(state.range(0)), 2);
  const Tensor a = Random(shape, 2), b = Random(shape, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::CycleMax(a, b, 0, 1));
}

void BM_CycleMaxReference(benchmark::State& state) {
  const Shape shape = Cube(static_cast<int>(state.range(0)), 2);
  const Tensor a = Random(shape, 2), b = Random(shape, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::CycleMax(a, b, 0, 1));
}

void BM_PathPotentialKernel(benchmark::State& state) {
  const Shape shape = Cube(static_cast<int>(state.range(0)), 3);
  const std::vector<Tensor> u = {Random(shape, 4), Random(shape, 5), Random(shape, 6)};
  Tensor out(shape);
  for (auto _ : state) {
    kernels::PathPotential(u, out.data());
    benchmark::DoNotOptimize(out.data().data());
  }
}

void BM_PathPotentialReference(benchmark::State& state) {
  const Shape shape = Cube(static_cast<int>(state.range(0)), 3);
  const std::vector<Tensor> u = {Random(shape, 4), Random(shape, 5), Random(shape, 6)};
  Tensor out(shape);
  for (auto _ : state) {
    reference::PathPotential(u, out);
    benchmark::DoNotOptimize(out.data().data());
  }
}

FiniteGame TwoPlayer(int extent) {
  const Shape shape = Cube(extent, 2);
  return NewGame(shape, {Random(shape, 7), Random(shape, 8)});
}

void BM_PotentialTest(benchmark::State& state) {
  const FiniteGame game = TwoPlayer(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(PotentialTest(game));
  state.SetComplexityN(state.range(0));
}

void BM_CycleTest(benchmark::State& state) {
  const FiniteGame game = TwoPlayer(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CycleTest(game));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_CenterAlongKernel)->Arg(32)->Arg(128);
BENCHMARK(BM_CenterAlongReference)->Arg(32)->Arg(128);
BENCHMARK(BM_CycleMaxKernel)->Arg(25)->Arg(50);
BENCHMARK(BM_CycleMaxReference)->Arg(25)->Arg(50);
BENCHMARK(BM_PathPotentialKernel)->Arg(32)->Arg(128);
BENCHMARK(BM_PathPotentialReference)->Arg(32)->Arg(128);
BENCHMARK(BM_PotentialTest)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_CycleTest)
    ->RangeMultiplier(2)
    ->Range(8, 64)
    ->Complexity([](benchmark::IterationCount n) {
      return static_cast<double>(n) * n * n * n;
    });

}  // namespace
}  // namespace gamecheck

BENCHMARK_MAIN();
