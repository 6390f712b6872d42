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

#include "coregap/statevector.hpp"

#include <cmath>
#include <string>

#include "coregap/error.hpp"

namespace coregap {
namespace {

void check_qubit(const Statevector& state, std::size_t qubit) {
  if (qubit >= state.n_qubits()) {
    fail(Errc::IndexOutOfRange,
         "qubit " + std::to_string(qubit) + " out of range for " + std::to_string(state.n_qubits()) + " qubits");
  }
}

void check_cap(std::size_t n_qubits, std::size_t cap) {
  if (n_qubits > cap) {
    fail(Errc::CapExceeded, std::to_string(n_qubits) + " qubits exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits_)) {
    fail(Errc::LengthMismatch, "statevector needs 2^n amplitudes");
  }
}

double Statevector::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void check_normalized(const ProbVector& p, double tol) {
  double sum = 0.0;
  for (double v : p.probs) {
    if (v < 0.0) fail(Errc::NotNormalized, "negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) fail(Errc::NotNormalized, "probabilities sum to " + std::to_string(sum));
}

Statevector new_zero_state(std::size_t n_qubits, std::size_t cap) {
  check_cap(n_qubits, cap);
  std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{0.0});
  amps[0] = 1.0;
  return Statevector(n_qubits, std::move(amps));
}

void apply_single_qubit(Statevector& state, std::size_t qubit, const Unitary2& u) {
  check_qubit(state, qubit);
  auto amps = state.amplitudes();
  const std::size_t stride = std::size_t{1} << qubit;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i + stride] = u10 * a0 + u11 * a1;
    }
  }
}

void apply_cz(Statevector& state, std::size_t q1, std::size_t q2) {
  check_qubit(state, q1);
  check_qubit(state, q2);
  if (q1 == q2) fail(Errc::EqualQubits, "CZ needs two distinct qubits");
  const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i)
    if ((i & mask) == mask) amps[i] = -amps[i];
}

void apply_event(Statevector& state, const GateEvent& event) {
  std::visit(
      [&state](const auto& gate) {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, SingleQubitGate>) {
          apply_single_qubit(state, gate.qubit, gate.unitary);
        } else if constexpr (std::is_same_v<T, IntraCZ>) {
          apply_cz(state, gate.q1, gate.q2);
        } else {
          apply_cz(state, gate.control, gate.target);
        }
      },
      event);
}

Statevector run_circuit_state(const CircuitConfig& config, std::uint64_t circuit_index, const Caps& caps) {
  validate(config);
  check_statevector_cap(config, caps);
  Statevector state = new_zero_state(config.n_qubits(), caps.max_statevector_qubits);
  for (const GateEvent& event : sample_circuit(config, circuit_index)) apply_event(state, event);
  return state;
}

ProbVector run_circuit(const CircuitConfig& config, std::uint64_t circuit_index, const Caps& caps) {
  return probabilities(run_circuit_state(config, circuit_index, caps));
}

ProbVector probabilities(const Statevector& state) {
  ProbVector p;
  p.probs.reserve(state.size());
  for (const Complex& a : state.amplitudes()) p.probs.push_back(std::norm(a));
  return p;
}

Statevector sample_haar_state(RngStream& rng, std::size_t n_qubits, std::size_t cap) {
  check_cap(n_qubits, cap);
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  double s = 0.0;
  for (Complex& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = Complex(re, im);
    s += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(s);
  for (Complex& a : amps) a *= inv;
  return Statevector(n_qubits, std::move(amps));
}

ProbVector sample_haar_state_probs(RngStream& rng, std::size_t n_qubits, std::size_t cap) {
  return probabilities(sample_haar_state(rng, n_qubits, cap));
}

}  // namespace coregap
