// Copyright 2026 The QSeal Authors
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

// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "qseal/optimizer.hpp"
#include "qseal/seal.hpp"
#include "qseal/tradeoff.hpp"

namespace {

using qseal::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_MaximizeFidelity(benchmark::State& state) {
  const qseal::SealScheme s = qseal::make_stringent_scheme(0.6);
  qseal::OptimizerOptions o;
  o.restarts = static_cast<std::size_t>(state.range(1));
  o.seed = 1;
  o.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(qseal::maximize_fidelity(s, 0.3, o).best_fbar);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_MaximizeFidelity)->Args({0, 16})->Args({1, 16})->Unit(benchmark::kMillisecond);

void BM_TradeoffCurve(benchmark::State& state) {
  const qseal::SealScheme s = qseal::make_stringent_scheme(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(qseal::tradeoff_curve(s, 2000, mode(state)).back().fbar_sim);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_TradeoffCurve)->Args({0})->Args({1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
