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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "coregap/error.hpp"
#include "coregap/statevector.hpp"
#include "oracles.hpp"

using namespace coregap;

TEST(pauli_moments, expectations_match_dense_matrices) {
  RngStream rng(20);
  const std::size_t n = 3;
  const Statevector s = sample_haar_state(rng, n);
  const std::vector<double> r = pauli_expectations(s);
  ASSERT_EQ(r.size(), 64u);
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t z = 0; z < 8; ++z) {
      std::vector<int> paulis(n);
      for (std::size_t q = 0; q < n; ++q) {
        const bool bx = ((x >> q) & 1U) != 0;
        const bool bz = ((z >> q) & 1U) != 0;
        paulis[q] = bx ? (bz ? 2 : 1) : (bz ? 3 : 0);
      }
      ASSERT_NEAR(r[x * 8 + z], oracle::pauli_expectation(s, paulis), 1e-12);
    }
  }
}

TEST(pauli_moments, reduced_moments_match_oracle) {
  RngStream rng(21);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Statevector s = sample_haar_state(rng, n);
    const MomentVector m = exact_reduced_moments(s, 1, n);
    const std::vector<double> expect = oracle::reduced_moments(s);
    ASSERT_EQ(m.size(), expect.size());
    for (std::size_t i = 0; i < m.size(); ++i) ASSERT_NEAR(m[i], expect[i], 1e-12);
  }
}

TEST(pauli_moments, zero_state) {
  const std::size_t n = 4;
  const MomentVector m = exact_reduced_moments(new_zero_state(n), 2, 2);
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool has_eps = false;
    for (std::size_t q = 0; q < n; ++q) has_eps |= digit_of(i, q) == Symbol::Eps;
    ASSERT_EQ(m[i], has_eps ? 0.0 : 1.0);
  }
}

TEST(pauli_moments, purity_sum) {
  RngStream rng(22);
  for (std::size_t n = 1; n <= 6; ++n) {
    const MomentVector m = exact_reduced_moments(sample_haar_state(rng, n), 1, n);
    double sum = 0.0;
    for (double v : m) sum += v;
    ASSERT_NEAR(sum, std::ldexp(1.0, static_cast<int>(n)), 1e-9);
  }
}

TEST(pauli_moments, plus_state) {
  const double h = 1.0 / std::numbers::sqrt2;
  const Statevector plus(1, {h, h});
  const MomentVector m = exact_reduced_moments(plus, 1, 1);
  ASSERT_NEAR(m[0], 1.0, 1e-15);
  ASSERT_NEAR(m[1], 0.0, 1e-15);
  ASSERT_NEAR(m[2], 1.0, 1e-15);
}

TEST(pauli_moments, caps_and_layout) {
  RngStream rng(23);
  ASSERT_THROW(exact_reduced_moments(sample_haar_state(rng, 7), 1, 7), Error);
  ASSERT_THROW(exact_reduced_moments(sample_haar_state(rng, 4), 3, 2), Error);
  ASSERT_EQ(reduced_label(5, 3), "ez1");
}
