// Copyright 2026 The coregap Authors
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

#include <vector>

#include "coregap/markov.hpp"

using namespace coregap;

namespace {

CircuitConfig config(std::size_t n_cores, TopologyKind kind) {
  CircuitConfig c;
  c.topology = kind;
  c.n_cores = n_cores;
  c.n_qubits_per_core = 2;
  c.p_single = 0.5;
  c.intracore_steps = 3;
  return c;
}

void BM_BuildTotal(benchmark::State& state) {
  const CircuitConfig c = config(static_cast<std::size_t>(state.range(0)), TopologyKind::Linear);
  for (auto _ : state) benchmark::DoNotOptimize(build_total_operator(c));
}
BENCHMARK(BM_BuildTotal)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// Matvec of M_total; range(1) selects the dense intra block threshold.
void BM_TotalApply(benchmark::State& state) {
  MarkovOptions opts;
  opts.kron_dense_threshold = static_cast<std::size_t>(state.range(1));
  const ReducedOperator op =
      build_total_operator(config(static_cast<std::size_t>(state.range(0)), TopologyKind::Ring), opts);
  std::vector<double> x(op.dim(), 1.0);
  std::vector<double> y(op.dim());
  for (auto _ : state) {
    op.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(op.dim()));
}
BENCHMARK(BM_TotalApply)->Args({4, 729})->Args({4, 0})->Args({5, 729})->Unit(benchmark::kMicrosecond);

void BM_TotalApplyThreads(benchmark::State& state) {
  const ReducedOperator op = build_total_operator(config(5, TopologyKind::Full));
  const auto threads = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(op.dim(), 1.0);
  std::vector<double> y(op.dim());
  for (auto _ : state) {
    op.apply(x, y, threads);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_TotalApplyThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
