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

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "coregap/config.hpp"
#include "coregap/rng.hpp"
#include "coregap/topology.hpp"
#include "coregap/unitary.hpp"

namespace coregap {

// Qubit q of core c has global index c * Nq + q.

struct SingleQubitGate {
  std::size_t qubit = 0;
  Unitary2 unitary;
  friend bool operator==(const SingleQubitGate&, const SingleQubitGate&) = default;
};

struct IntraCZ {
  std::size_t q1 = 0;
  std::size_t q2 = 0;
  friend bool operator==(const IntraCZ&, const IntraCZ&) = default;
};

struct InterCZ {
  std::size_t control = 0;
  std::size_t target = 0;
  friend bool operator==(const InterCZ&, const InterCZ&) = default;
};

using GateEvent = std::variant<SingleQubitGate, IntraCZ, InterCZ>;

/// Ordered gate list of one sampled circuit.
using CircuitRealization = std::vector<GateEvent>;

/// One intracore step. With probability p_single a Haar rotation lands on a
/// uniformly chosen qubit; otherwise a CZ on one of the Nq(Nq-1) ordered
/// pairs, uniformly. One uniform variate decides the branch on every call.
/// Throws Error(DegenerateCore) if Nq == 1 and p_single < 1.
GateEvent sample_intracore_gate(RngStream& rng, std::size_t n_qubits_per_core, double p_single,
                                std::size_t core_index);

/// One inter-core CZ on `link`, uniform over the 2*Nq^2 (control core,
/// control qubit, target qubit) configurations.
GateEvent sample_intercore_gate(RngStream& rng, const Link& link, std::size_t n_qubits_per_core);

/// Samples circuit `circuit_index` of the ensemble: per layer, I steps for
/// core 0, then I steps for core 1, ..., then one InterCZ per link in
/// canonical LinkSet order. The stream is RngStream(master_seed, circuit_index).
CircuitRealization sample_circuit(const CircuitConfig& config, std::uint64_t circuit_index);

/// Gates per layer: D = Nc * I + n_links.
std::size_t depth_per_layer(const CircuitConfig& config);

}  // namespace coregap
