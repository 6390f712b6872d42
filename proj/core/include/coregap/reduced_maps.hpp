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

#include <array>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "coregap/reduced_space.hpp"

namespace coregap {

/// Single-qubit reduced transition matrix on (1, z, eps), column = source:
///   [[1, 0,     0        ],
///    [0, c,     (1 - c)/2],
///    [0, 1 - c, (1 + c)/2]]
/// c = 1/3 is a Haar-random rotation, c = 1 the identity.
/// Throws Error(OutOfRange) unless c lies in [-1, 1].
Eigen::Matrix3d reduced_single_qubit_matrix(double c_rand);

/// Index of a two-qubit reduced class: digit of the first qubit + 3 * digit of the second.
constexpr std::size_t pair_index(Symbol first, Symbol second) noexcept {
  return static_cast<std::size_t>(first) + 3 * static_cast<std::size_t>(second);
}

/// Image of each of the 9 two-qubit reduced classes under CZ conjugation.
using PairPermutation = std::array<std::uint8_t, 9>;

/// CZ action on reduced classes, derived from the Clifford update of Pauli
/// (x|z) bits, (x1, z1, x2, z2) -> (x1, z1 ^ x2, x2, z2 ^ x1), applied to
/// every member of each class. Throws std::logic_error if two members of a
/// class land in different classes.
PairPermutation reduced_cz_map();

/// Single-qubit Pauli label: 0 = I, 1 = X, 2 = Y, 3 = Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr Symbol symbol_of(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return Symbol::One;
    case Pauli::Z: return Symbol::Z;
    default: return Symbol::Eps;
  }
}

/// Two-qubit Pauli product index: p_first + 4 * p_second, where the first
/// qubit is the least significant bit of the 4x4 matrix index.
using PauliPairTable = std::array<std::array<double, 16>, 16>;

Eigen::Matrix2cd pauli_matrix(Pauli p);

/// P_first (x) P_second as a 4x4 matrix in little-endian basis order.
Eigen::Matrix4cd pauli_pair_matrix(std::size_t pair);

/// Brute-force conjugation: table[P][Q] = |tr(Q U P U^dagger) / 4|^2, i.e.
/// the squared Pauli coefficients of U P U^dagger. Each row sums to 1.
/// Throws Error(NotUnitary) if ||U^dagger U - 1|| > 1e-10.
PauliPairTable brute_force_pauli_conjugation_oracle(const Eigen::Matrix4cd& gate);

/// Reduces a conjugation table to a class permutation when every row is a
/// point mass (within 1e-12) and all members of a class share a target
/// class; nullopt otherwise.
std::optional<PairPermutation> classify_point_masses(const PauliPairTable& table);

/// diag(1, 1, 1, -1).
Eigen::Matrix4cd cz_gate();

}  // namespace coregap
