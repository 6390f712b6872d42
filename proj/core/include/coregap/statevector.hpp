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
#include <span>
#include <vector>

#include "coregap/circuit.hpp"
#include "coregap/config.hpp"
#include "coregap/reduced_space.hpp"
#include "coregap/rng.hpp"
#include "coregap/unitary.hpp"

namespace coregap {

/// Pure state on n qubits. Amplitude index bit q is qubit q (little-endian).
class Statevector {
 public:
  Statevector() = default;
  Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  double norm() const;

  friend bool operator==(const Statevector&, const Statevector&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Computational-basis outcome probabilities, same index order as Statevector.
struct ProbVector {
  std::vector<double> probs;

  std::size_t size() const noexcept { return probs.size(); }
  friend bool operator==(const ProbVector&, const ProbVector&) = default;
};

/// Throws Error(NotNormalized) if an entry is negative or the sum is off by > tol.
void check_normalized(const ProbVector& p, double tol = 1e-10);

/// |0...0>. Throws Error(CapExceeded) when n_qubits > cap.
Statevector new_zero_state(std::size_t n_qubits, std::size_t cap = Caps{}.max_statevector_qubits);

/// In-place 2x2 update of each amplitude pair differing in `qubit`.
void apply_single_qubit(Statevector& state, std::size_t qubit, const Unitary2& u);

/// Negates amplitudes where both qubits are 1. Symmetric in (q1, q2).
void apply_cz(Statevector& state, std::size_t q1, std::size_t q2);

void apply_event(Statevector& state, const GateEvent& event);

/// Executes circuit `circuit_index` of the ensemble on |0...0>.
Statevector run_circuit_state(const CircuitConfig& config, std::uint64_t circuit_index, const Caps& caps = {});

/// |amplitude|^2 of run_circuit_state.
ProbVector run_circuit(const CircuitConfig& config, std::uint64_t circuit_index, const Caps& caps = {});

ProbVector probabilities(const Statevector& state);

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
Statevector sample_haar_state(RngStream& rng, std::size_t n_qubits, std::size_t cap = Caps{}.max_statevector_qubits);

ProbVector sample_haar_state_probs(RngStream& rng, std::size_t n_qubits,
                                   std::size_t cap = Caps{}.max_statevector_qubits);

/// Exact reduced second moments of a pure state: r_P = <psi|P|psi> for all
/// 4^n Pauli strings, squared, summed into the 3^n reduced classes (X and Y
/// of each qubit both count toward Eps). Cost O(n 4^n). The cores only fix
/// the digit layout (core c owns digits c*Nq .. c*Nq+Nq-1), which coincides
/// with the global qubit order. Throws Error(CapExceeded) if n > cap.
MomentVector exact_reduced_moments(const Statevector& state, std::size_t n_cores, std::size_t n_qubits_per_core,
                                   std::size_t cap = Caps{}.max_moment_qubits);

/// Pauli expectation values r_P for all 4^n strings. Index = (x_mask, z_mask)
/// packed as x_mask * 2^n + z_mask, where qubit q has X if bit q of x_mask is
/// set, Z if bit q of z_mask is set, and Y if both.
std::vector<double> pauli_expectations(const Statevector& state);

}  // namespace coregap
