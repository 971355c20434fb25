// Copyright 2026 The zsgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "zsg/envelopes.hpp"
#include "zsg/matrix_game.hpp"
#include "zsg/parametric.hpp"
#include "zsg/solver.hpp"

namespace {

using namespace zsg;

const Polynomial kCubic{0, -1, 0, 1};

Game Cubic() {
  return Game(ActionSet::HalfLine(0), ActionSet::HalfLine(0), DifferenceForm{kCubic});
}

void BM_SolveMatrixGame(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(SolveMatrixGame(c).value);
}
BENCHMARK(BM_SolveMatrixGame)->RangeMultiplier(2)->Range(8, 128);

void BM_ExtremumOnRegion(benchmark::State& state) {
  const Polynomial p{1, -3, 0.5, 2, -1, 0.25, 0, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtremumOnRegion(p, {-5, 5}, Direction::kMin).value);
  }
}
BENCHMARK(BM_ExtremumOnRegion);

void BM_CSharpMixed(benchmark::State& state) {
  std::vector<Atom> atoms;
  for (int k = 0; k < 16; ++k) atoms.push_back({0.25 * k, 1.0 / 16});
  const FiniteSupportMeasure mu(atoms);
  const Game g = Cubic();
  for (auto _ : state) benchmark::DoNotOptimize(CSharp(g, mu).value);
}
BENCHMARK(BM_CSharpMixed);

void BM_SolveCubic(benchmark::State& state) {
  const Game g = Cubic();
  for (auto _ : state) benchmark::DoNotOptimize(SolveContinuous(g).value_estimate);
}
BENCHMARK(BM_SolveCubic)->Unit(benchmark::kMillisecond);

void BM_SineSweep(benchmark::State& state) {
  const GameFamily fam{ActionSet::HalfLine(0), ActionSet::HalfLine(0),
                       ShiftedDifference{ParameterFunction::Sine(), kCubic}};
  const auto grid = LinearGrid(-3.14159, 3.14159, 33);
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(fam, grid, {}).size());
}
BENCHMARK(BM_SineSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
