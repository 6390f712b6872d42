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

#include "coregap/circuit.hpp"

#include "coregap/error.hpp"

namespace coregap {

GateEvent sample_intracore_gate(RngStream& rng, std::size_t n_qubits_per_core, double p_single,
                                std::size_t core_index) {
  const std::size_t nq = n_qubits_per_core;
  if (nq == 0) fail(Errc::InvalidConfig, "n_qubits_per_core must be >= 1");
  if (nq == 1 && p_single < 1.0) {
    fail(Errc::DegenerateCore, "core with one qubit cannot host a two-qubit gate (p_single < 1)");
  }
  const std::size_t offset = core_index * nq;
  if (rng.uniform01() < p_single) {
    const std::size_t q = rng.uniform_index(nq);
    return SingleQubitGate{offset + q, sample_haar_single_qubit(rng)};
  }
  const std::size_t pair = rng.uniform_index(nq * (nq - 1));
  const std::size_t i = pair / (nq - 1);
  std::size_t j = pair % (nq - 1);
  if (j >= i) ++j;
  return IntraCZ{offset + i, offset + j};
}

GateEvent sample_intercore_gate(RngStream& rng, const Link& link, std::size_t n_qubits_per_core) {
  const std::size_t nq = n_qubits_per_core;
  if (nq == 0) fail(Errc::InvalidConfig, "n_qubits_per_core must be >= 1");
  if (link.first == link.second) fail(Errc::InvalidLink, "link joins a core to itself");
  const std::size_t k = rng.uniform_index(2 * nq * nq);
  const bool first_controls = k < nq * nq;
  const std::size_t rem = k % (nq * nq);
  const std::size_t qa = link.first * nq + rem / nq;
  const std::size_t qb = link.second * nq + rem % nq;
  return first_controls ? InterCZ{qa, qb} : InterCZ{qb, qa};
}

CircuitRealization sample_circuit(const CircuitConfig& config, std::uint64_t circuit_index) {
  validate(config);
  const LinkSet links = build_topology(config.topology, config.n_cores);
  RngStream rng(config.master_seed, circuit_index);
  CircuitRealization events;
  events.reserve(config.n_layers * depth_per_layer(config));
  for (std::size_t layer = 0; layer < config.n_layers; ++layer) {
    for (std::size_t core = 0; core < config.n_cores; ++core)
      for (std::size_t step = 0; step < config.intracore_steps; ++step)
        events.push_back(sample_intracore_gate(rng, config.n_qubits_per_core, config.p_single, core));
    for (const Link& link : links.links())
      events.push_back(sample_intercore_gate(rng, link, config.n_qubits_per_core));
  }
  return events;
}

std::size_t depth_per_layer(const CircuitConfig& config) {
  return config.n_cores * config.intracore_steps + expected_link_count(config.topology, config.n_cores);
}

}  // namespace coregap
