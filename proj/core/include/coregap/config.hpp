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
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "coregap/topology.hpp"

namespace coregap {

/// Full parametrization of one multicore architecture and its circuit ensemble.
struct CircuitConfig {
  std::size_t n_cores = 2;
  std::size_t n_qubits_per_core = 1;
  std::size_t intracore_steps = 1;  ///< I; zero means an inter-core-only layer
  std::size_t n_layers = 1;         ///< L
  TopologyKind topology = TopologyKind::Linear;
  double p_single = 0.5;            ///< probability of a single-qubit intracore gate
  double c_rand = 1.0 / 3.0;        ///< R(c) randomization parameter; 1/3 is Haar
  std::uint64_t master_seed = 0;
  std::size_t ensemble_size = 5000;

  std::size_t n_qubits() const noexcept { return n_cores * n_qubits_per_core; }

  friend bool operator==(const CircuitConfig&, const CircuitConfig&) = default;
};

/// Resource limits shared by both engines.
struct Caps {
  std::size_t max_statevector_qubits = 14;
  std::size_t max_moment_qubits = 6;     ///< exact Pauli moments cost 4^n * 2^n
  std::size_t max_markov_dim = 177147;   ///< 3^11
};

/// Checks field ranges and topology/core-count compatibility.
/// Throws Error(InvalidConfig), Error(InvalidCoreCount) or Error(DegenerateCore).
void validate(const CircuitConfig& config);

/// Throws Error(CapExceeded) when n = Nc*Nq exceeds the statevector cap.
void check_statevector_cap(const CircuitConfig& config, const Caps& caps);

/// Throws Error(CapExceeded) when 3^n exceeds the Markov dimension cap.
void check_markov_cap(const CircuitConfig& config, const Caps& caps);

/// Raw key/value pairs of a flat "key = value" config file.
using ConfigValues = std::map<std::string, std::string, std::less<>>;

/// Parses UTF-8 "key = value" text. '#' starts a comment that runs to the
/// end of the line; blank lines are ignored. Throws Error(ParseError) naming the offending line.
ConfigValues parse_config_text(std::string_view text);

/// Reads and parses a config file. Throws Error(Io) or Error(ParseError).
ConfigValues read_config_file(const std::string& path);

/// Applies values on top of `base`. Keys must be CircuitConfig field names.
/// Every key in `required` must be present. Throws Error(InvalidConfig) for a
/// missing required key or unknown key, Error(ParseError) for bad values.
CircuitConfig config_from_values(const ConfigValues& values, std::span<const std::string_view> required = {},
                                 CircuitConfig base = {});

/// Serializes every field as "key = value" lines in declaration order.
std::string format_config_text(const CircuitConfig& config);

/// Locale-independent shortest round-trip formatting of a double.
std::string format_double(double value);

}  // namespace coregap
