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

#include <bit>
#include <string>

#include "coregap/error.hpp"
#include "coregap/reduced_space.hpp"
#include "coregap/statevector.hpp"

namespace coregap {
namespace {

// In-place unnormalized Walsh-Hadamard transform:
// out[z] = sum_j (-1)^popcount(j & z) in[j].
void walsh_hadamard(std::vector<Complex>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex a = v[j];
        const Complex b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// Real part of i^k * z.
double real_of_ipow(unsigned k, Complex z) {
  switch (k & 3U) {
    case 0: return z.real();
    case 1: return -z.imag();
    case 2: return -z.real();
    default: return z.imag();
  }
}

}  // namespace

std::string reduced_label(std::size_t index, std::size_t n_qubits) {
  std::string label;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    switch (digit_of(index, q)) {
      case Symbol::One: label.push_back('1'); break;
      case Symbol::Z: label.push_back('z'); break;
      case Symbol::Eps: label.push_back('e'); break;
    }
  }
  return label;
}

std::vector<double> pauli_expectations(const Statevector& state) {
  // P|j> = i^popcount(x&z) (-1)^popcount(j&z) |j ^ x>, so for fixed x the
  // expectations over all z are one Walsh-Hadamard transform of
  // t_j = conj(psi[j ^ x]) psi[j].
  const std::size_t dim = state.size();
  const auto psi = state.amplitudes();
  std::vector<double> out(dim * dim);
  std::vector<Complex> t(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t j = 0; j < dim; ++j) t[j] = std::conj(psi[j ^ x]) * psi[j];
    walsh_hadamard(t);
    for (std::size_t z = 0; z < dim; ++z) {
      const auto n_y = static_cast<unsigned>(std::popcount(x & z));
      out[x * dim + z] = real_of_ipow(n_y, t[z]);
    }
  }
  return out;
}

MomentVector exact_reduced_moments(const Statevector& state, std::size_t n_cores, std::size_t n_qubits_per_core,
                                   std::size_t cap) {
  const std::size_t n = state.n_qubits();
  if (n != n_cores * n_qubits_per_core) {
    fail(Errc::LengthMismatch, "state has " + std::to_string(n) + " qubits, expected Nc*Nq = " +
                                   std::to_string(n_cores * n_qubits_per_core));
  }
  if (n > cap) fail(Errc::CapExceeded, std::to_string(n) + " qubits exceeds moment cap " + std::to_string(cap));

  const std::size_t dim = state.size();
  // ternary[m] = sum over set bits q of m of 3^q.
  std::vector<std::size_t> ternary(dim, 0);
  for (std::size_t m = 1; m < dim; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    ternary[m] = ternary[m & (m - 1)] + pow3(low);
  }
  const std::vector<double> r = pauli_expectations(state);
  MomentVector moments(pow3(n), 0.0);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t z = 0; z < dim; ++z) {
      const double v = r[x * dim + z];
      moments[2 * ternary[x] + ternary[z & ~x]] += v * v;
    }
  }
  return moments;
}

}  // namespace coregap
