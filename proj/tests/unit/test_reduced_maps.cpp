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

#include <gtest/gtest.h>

#include <cmath>

#include "coregap/error.hpp"
#include "oracles.hpp"

using namespace coregap;

TEST(reduced_maps, r_matrix_values) {
  ASSERT_EQ(reduced_single_qubit_matrix(1.0), Eigen::Matrix3d::Identity());
  const Eigen::Matrix3d r = reduced_single_qubit_matrix(1.0 / 3.0);
  Eigen::Matrix3d expect;
  expect << 1, 0, 0, 0, 1.0 / 3, 1.0 / 3, 0, 2.0 / 3, 2.0 / 3;
  ASSERT_LT((r - expect).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_THROW(reduced_single_qubit_matrix(1.5), Error);
  ASSERT_THROW(reduced_single_qubit_matrix(std::nan("")), Error);
}

TEST(reduced_maps, r_matrix_spectrum) {
  std::vector<double> mods;
  for (const auto& v : oracle::eigenvalues(reduced_single_qubit_matrix(1.0 / 3.0))) mods.push_back(std::abs(v));
  ASSERT_NEAR(mods[0], 1.0, 1e-12);
  ASSERT_NEAR(mods[1], 1.0, 1e-12);
  ASSERT_NEAR(mods[2], 0.0, 1e-12);
}

TEST(reduced_maps, cz_map) {
  const PairPermutation p = reduced_cz_map();
  const auto idx = [](Symbol a, Symbol b) { return pair_index(a, b); };
  ASSERT_EQ(p[idx(Symbol::One, Symbol::One)], idx(Symbol::One, Symbol::One));
  ASSERT_EQ(p[idx(Symbol::Eps, Symbol::One)], idx(Symbol::Eps, Symbol::Z));
  ASSERT_EQ(p[idx(Symbol::Eps, Symbol::Z)], idx(Symbol::Eps, Symbol::One));
  ASSERT_EQ(p[idx(Symbol::One, Symbol::Eps)], idx(Symbol::Z, Symbol::Eps));
  ASSERT_EQ(p[idx(Symbol::Z, Symbol::Z)], idx(Symbol::Z, Symbol::Z));
  ASSERT_EQ(p[idx(Symbol::Eps, Symbol::Eps)], idx(Symbol::Eps, Symbol::Eps));
  for (std::size_t i = 0; i < 9; ++i) ASSERT_EQ(p[p[i]], i);
}

TEST(reduced_maps, oracle_cz_point_masses) {
  const PauliPairTable t = brute_force_pauli_conjugation_oracle(cz_gate());
  const std::size_t xi = static_cast<std::size_t>(Pauli::X) + 4 * static_cast<std::size_t>(Pauli::I);
  const std::size_t xz = static_cast<std::size_t>(Pauli::X) + 4 * static_cast<std::size_t>(Pauli::Z);
  const std::size_t zz = static_cast<std::size_t>(Pauli::Z) + 4 * static_cast<std::size_t>(Pauli::Z);
  ASSERT_NEAR(t[xi][xz], 1.0, 1e-15);
  ASSERT_NEAR(t[zz][zz], 1.0, 1e-15);
  for (const auto& row : t) {
    double s = 0.0;
    for (double v : row) s += v;
    ASSERT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(reduced_maps, oracle_identity_gate) {
  const PauliPairTable t = brute_force_pauli_conjugation_oracle(Eigen::Matrix4cd::Identity());
  for (std::size_t p = 0; p < 16; ++p)
    for (std::size_t q = 0; q < 16; ++q) ASSERT_NEAR(t[p][q], p == q ? 1.0 : 0.0, 1e-15);
}

TEST(reduced_maps, oracle_classification_equals_symbolic_map) {
  const auto classified = classify_point_masses(brute_force_pauli_conjugation_oracle(cz_gate()));
  ASSERT_TRUE(classified.has_value());
  ASSERT_EQ(*classified, reduced_cz_map());
}

TEST(reduced_maps, oracle_rejects_non_unitary) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(0, 0) = 2.0;
  try {
    brute_force_pauli_conjugation_oracle(m);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::NotUnitary);
  }
}

TEST(reduced_maps, non_clifford_is_not_a_permutation) {
  // sqrt(SWAP)-like entangler spreads Pauli weight.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const std::complex<double> a(0.5, 0.5);
  const std::complex<double> b(0.5, -0.5);
  m(0, 0) = 1.0;
  m(3, 3) = 1.0;
  m(1, 1) = a;
  m(1, 2) = b;
  m(2, 1) = b;
  m(2, 2) = a;
  ASSERT_FALSE(classify_point_masses(brute_force_pauli_conjugation_oracle(m)).has_value());
}
