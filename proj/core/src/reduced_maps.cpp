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

#include "coregap/reduced_maps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "coregap/error.hpp"

namespace coregap {
namespace {

struct PauliBits {
  bool x = false;
  bool z = false;
};

constexpr PauliBits bits_of(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return {false, false};
    case Pauli::X: return {true, false};
    case Pauli::Y: return {true, true};
    case Pauli::Z: return {false, true};
  }
  return {};
}

constexpr Pauli pauli_of(PauliBits b) noexcept {
  if (b.x) return b.z ? Pauli::Y : Pauli::X;
  return b.z ? Pauli::Z : Pauli::I;
}

}  // namespace

Eigen::Matrix3d reduced_single_qubit_matrix(double c) {
  if (!(c >= -1.0 && c <= 1.0)) fail(Errc::OutOfRange, "c_rand must lie in [-1, 1], got " + std::to_string(c));
  // Each column is written as (a, 1 - a) so it sums to exactly 1.0.
  const double y = 1.0 - c;
  Eigen::Matrix3d r = Eigen::Matrix3d::Zero();
  r(0, 0) = 1.0;
  r(1, 1) = 1.0 - y;
  r(2, 1) = y;
  r(1, 2) = y / 2.0;
  r(2, 2) = 1.0 - y / 2.0;
  return r;
}

PairPermutation reduced_cz_map() {
  std::array<int, 9> image;
  image.fill(-1);
  for (std::uint8_t a = 0; a < 4; ++a) {
    for (std::uint8_t b = 0; b < 4; ++b) {
      const PauliBits pa = bits_of(static_cast<Pauli>(a));
      const PauliBits pb = bits_of(static_cast<Pauli>(b));
      const PauliBits qa{pa.x, pa.z != pb.x};
      const PauliBits qb{pb.x, pb.z != pa.x};
      const std::size_t from = pair_index(symbol_of(static_cast<Pauli>(a)), symbol_of(static_cast<Pauli>(b)));
      const auto to = static_cast<int>(pair_index(symbol_of(pauli_of(qa)), symbol_of(pauli_of(qb))));
      if (image[from] >= 0 && image[from] != to) {
        throw std::logic_error("CZ does not act consistently on reduced class " + std::to_string(from));
      }
      image[from] = to;
    }
  }
  PairPermutation perm{};
  for (std::size_t i = 0; i < 9; ++i) perm[i] = static_cast<std::uint8_t>(image[i]);
  return perm;
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::Matrix4cd pauli_pair_matrix(std::size_t pair) {
  const Eigen::Matrix2cd first = pauli_matrix(static_cast<Pauli>(pair % 4));
  const Eigen::Matrix2cd second = pauli_matrix(static_cast<Pauli>(pair / 4));
  // Basis index = bit_first + 2 * bit_second, so the second qubit is the
  // outer Kronecker factor.
  Eigen::Matrix4cd m;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r0 = 0; r0 < 2; ++r0)
        for (int c0 = 0; c0 < 2; ++c0) m(2 * r1 + r0, 2 * c1 + c0) = second(r1, c1) * first(r0, c0);
  return m;
}

PauliPairTable brute_force_pauli_conjugation_oracle(const Eigen::Matrix4cd& gate) {
  const double err = (gate.adjoint() * gate - Eigen::Matrix4cd::Identity()).norm();
  if (err > 1e-10) fail(Errc::NotUnitary, "gate deviates from unitarity by " + std::to_string(err));
  PauliPairTable table{};
  for (std::size_t p = 0; p < 16; ++p) {
    const Eigen::Matrix4cd conj = gate * pauli_pair_matrix(p) * gate.adjoint();
    for (std::size_t q = 0; q < 16; ++q) {
      const std::complex<double> coeff = (pauli_pair_matrix(q) * conj).trace() / 4.0;
      table[p][q] = std::norm(coeff);
    }
  }
  return table;
}

std::optional<PairPermutation> classify_point_masses(const PauliPairTable& table) {
  std::array<int, 9> image;
  image.fill(-1);
  for (std::size_t p = 0; p < 16; ++p) {
    int target = -1;
    for (std::size_t q = 0; q < 16; ++q) {
      const double w = table[p][q];
      if (std::abs(w - 1.0) <= 1e-12) {
        if (target >= 0) return std::nullopt;
        target = static_cast<int>(q);
      } else if (std::abs(w) > 1e-12) {
        return std::nullopt;
      }
    }
    if (target < 0) return std::nullopt;
    const std::size_t from = pair_index(symbol_of(static_cast<Pauli>(p % 4)), symbol_of(static_cast<Pauli>(p / 4)));
    const auto q = static_cast<std::size_t>(target);
    const auto to = static_cast<int>(pair_index(symbol_of(static_cast<Pauli>(q % 4)), symbol_of(static_cast<Pauli>(q / 4))));
    if (image[from] >= 0 && image[from] != to) return std::nullopt;
    image[from] = to;
  }
  PairPermutation perm{};
  for (std::size_t i = 0; i < 9; ++i) perm[i] = static_cast<std::uint8_t>(image[i]);
  return perm;
}

Eigen::Matrix4cd cz_gate() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1.0;
  return m;
}

}  // namespace coregap
