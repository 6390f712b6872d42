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

#include "coregap/markov.hpp"
#include "coregap/spectrum.hpp"

using namespace coregap;

namespace {

ReducedOperator total(std::size_t n_cores) {
  CircuitConfig c;
  c.topology = TopologyKind::Linear;
  c.n_cores = n_cores;
  c.n_qubits_per_core = 2;
  c.p_single = 0.5;
  c.intracore_steps = 2;
  return build_total_operator(c);
}

void BM_SubleadingDense(benchmark::State& state) {
  const ReducedOperator op = total(static_cast<std::size_t>(state.range(0)));
  EigenOptions opts;
  opts.method = EigenMethod::Dense;
  for (auto _ : state) benchmark::DoNotOptimize(subleading_eigenvalue(op, opts));
}
BENCHMARK(BM_SubleadingDense)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SubleadingIterative(benchmark::State& state) {
  const ReducedOperator op = total(static_cast<std::size_t>(state.range(0)));
  EigenOptions opts;
  opts.method = EigenMethod::Iterative;
  std::size_t matvecs = 0;
  for (auto _ : state) {
    const SpectrumResult r = subleading_eigenvalue(op, opts);
    matvecs = r.matvecs;
    benchmark::DoNotOptimize(r);
  }
  state.counters["matvecs"] = static_cast<double>(matvecs);
}
BENCHMARK(BM_SubleadingIterative)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
