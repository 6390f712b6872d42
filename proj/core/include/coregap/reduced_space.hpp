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
#include <string>
#include <vector>

namespace coregap {

/// Per-qubit symbol of the reduced second-moment space. X and Y are merged
/// into Eps; the weight of an Eps class is the SUM of its members' r_P^2.
enum class Symbol : std::uint8_t { One = 0, Z = 1, Eps = 2 };

/// Reduced second moments E[r_P^2], indexed by base-3 strings with qubit q
/// on digit q (little-endian, same qubit order as the statevector).
using MomentVector = std::vector<double>;

constexpr std::size_t pow3(std::size_t n) noexcept {
  std::size_t d = 1;
  for (std::size_t i = 0; i < n; ++i) d *= 3;
  return d;
}

constexpr Symbol digit_of(std::size_t index, std::size_t qubit) noexcept {
  return static_cast<Symbol>((index / pow3(qubit)) % 3);
}

constexpr std::size_t with_digit(std::size_t index, std::size_t qubit, Symbol s) noexcept {
  const std::size_t p = pow3(qubit);
  const std::size_t old = (index / p) % 3;
  return index - old * p + static_cast<std::size_t>(s) * p;
}

/// Human-readable label, qubit 0 first, e.g. "1ze".
std::string reduced_label(std::size_t index, std::size_t n_qubits);

}  // namespace coregap
