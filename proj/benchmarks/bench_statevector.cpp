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

#include "coregap/statevector.hpp"

using namespace coregap;

namespace {

void BM_RunCircuit(benchmark::State& state) {
  CircuitConfig c;
  c.topology = TopologyKind::Ring;
  c.n_cores = static_cast<std::size_t>(state.range(0));
  c.n_qubits_per_core = 3;
  c.p_single = 0.5;
  c.intracore_steps = 4;
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_circuit(c, i++));
}
BENCHMARK(BM_RunCircuit)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ExactReducedMoments(benchmark::State& state) {
  const auto nq = static_cast<std::size_t>(state.range(0));
  CircuitConfig c;
  c.n_cores = 2;
  c.n_qubits_per_core = nq;
  c.p_single = nq == 1 ? 1.0 : 0.5;
  const Statevector s = run_circuit_state(c, 0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_reduced_moments(s, 2, nq));
}
BENCHMARK(BM_ExactReducedMoments)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
