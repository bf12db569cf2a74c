// Copyright 2026 The qsep Authors
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

#include "qsep/discrimination.h"
#include "qsep/hermitian.h"
#include "qsep/minimax.h"
#include "qsep/random.h"
#include "qsep/states.h"

namespace qsep {
namespace {

ComplexMatrix RandomHermitian(int dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = 2.0 * rng.Uniform01() - 1.0;
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = Complex(2.0 * rng.Uniform01() - 1.0, 2.0 * rng.Uniform01() - 1.0);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix m = RandomHermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(HermitianEig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_TraceDistance(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const DensityMatrix rho = RandomDensity(dim, dim, 1);
  const DensityMatrix sigma = RandomDensity(dim, dim, 2);
  for (auto _ : state) benchmark::DoNotOptimize(TraceDistance(rho, sigma));
}
BENCHMARK(BM_TraceDistance)->Arg(2)->Arg(4)->Arg(8);

void BM_SolveSaddle(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int count = static_cast<int>(state.range(1));
  const StateSet s0 = RandomStateSet(dim, count, dim, 11);
  const StateSet s1 = RandomStateSet(dim, count, 1, 12);
  SolverConfig cfg;
  cfg.target_gap = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(SolveSaddle(s0, s1, cfg));
}
BENCHMARK(BM_SolveSaddle)
    ->Args({2, 2})
    ->Args({3, 3})
    ->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qsep

BENCHMARK_MAIN();
