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


#include "coregap/unitary.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "coregap/reduced_maps.hpp"
#include "oracles.hpp"

using namespace coregap;

TEST(unitary, haar_draws_are_unitary) {
  RngStream rng(10);
  for (int i = 0; i < 10000; ++i) ASSERT_LT(sample_haar_single_qubit(rng).unitarity_error(), 1e-12);
}

TEST(unitary, haar_first_moment) {
  RngStream rng(11);
  double s = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) s += std::norm(sample_haar_single_qubit(rng)(0, 0));
  ASSERT_NEAR(s / n, 0.5, 0.01);
}

TEST(unitary, haar_second_moment) {
  // For Haar U(2), |U00|^2 is uniform on [0, 1], so E|U00|^4 = 1/3.
  RngStream rng(12);
  double s = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) s += std::pow(std::norm(sample_haar_single_qubit(rng)(0, 0)), 2);
  ASSERT_NEAR(s / n, 1.0 / 3.0, 0.005);
}

TEST(unitary, induced_reduced_action_is_r_one_third) {
  RngStream rng(13);
  const int n = 20000;
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(3, 3);
  for (int i = 0; i < n; ++i) {
    const Unitary2 u = sample_haar_single_qubit(rng);
    Eigen::MatrixXcd m(2, 2);
    m << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
    avg += oracle::lump_to_reduced(oracle::pauli_transfer_squared(m, 1), 1);
  }
  avg /= n;
  const Eigen::Matrix3d r = reduced_single_qubit_matrix(1.0 / 3.0);
  ASSERT_LT((avg - r).cwiseAbs().maxCoeff(), 0.01);
}

TEST(unitary, euler_angles_reconstruct) {
  RngStream rng(14);
  for (int i = 0; i < 100; ++i) {
    const Unitary2 u = sample_haar_single_qubit(rng);
    const auto [theta, phi, lambda] = u.euler_angles();
    const Complex eph = std::polar(1.0, phi / 2);
    const Complex elam = std::polar(1.0, lambda / 2);
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Unitary2 r;
    r.m = {std::conj(eph) * c * std::conj(elam), -std::conj(eph) * s * elam, eph * s * std::conj(elam), eph * c * elam};
    // Equal up to a global phase: |tr(r^dagger u)| = 2.
    const Unitary2 p = r.adjoint() * u;
    ASSERT_NEAR(std::abs(p(0, 0) + p(1, 1)), 2.0, 1e-9);
  }
}

TEST(unitary, adjoint_inverts) {
  RngStream rng(15);
  const Unitary2 u = sample_haar_single_qubit(rng);
  const Unitary2 p = u * u.adjoint();
  ASSERT_NEAR(std::abs(p(0, 0) - 1.0), 0.0, 1e-12);
  ASSERT_NEAR(std::abs(p(0, 1)), 0.0, 1e-12);
}
