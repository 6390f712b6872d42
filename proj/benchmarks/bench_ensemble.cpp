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

#include "coregap/gap_analysis.hpp"
#include "coregap/haar_reference.hpp"
#include "coregap/statevector.hpp"

using namespace coregap;

namespace {

void BM_HaarSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    RngStream rng(1, i++);
    benchmark::DoNotOptimize(sample_haar_state_probs(rng, n));
  }
}
BENCHMARK(BM_HaarSample)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_HaarReference(benchmark::State& state) {
  HaarReferenceOptions opts;
  opts.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(haar_reference(8, 2000, 7, opts));
}
BENCHMARK(BM_HaarReference)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ScanIdh(benchmark::State& state) {
  CircuitConfig c;
  c.topology = TopologyKind::Linear;
  c.n_cores = 2;
  c.n_qubits_per_core = 2;
  c.p_single = 0.5;
  const EnsembleStats haar = haar_reference(4, 1000, 3);
  const std::vector<std::size_t> is{1, 2, 3, 4};
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_idh(c, is, 1000, haar, threads));
}
BENCHMARK(BM_ScanIdh)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
