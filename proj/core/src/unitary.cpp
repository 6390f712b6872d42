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

#include <algorithm>
#include <cmath>

namespace coregap {

Unitary2 Unitary2::adjoint() const {
  return Unitary2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
  Unitary2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[static_cast<std::size_t>(2 * i + j)] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

double Unitary2::unitarity_error() const {
  const Unitary2 p = adjoint() * *this;
  double err = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) err = std::max(err, std::abs(p(i, j) - Complex(i == j ? 1.0 : 0.0)));
  return err;
}

std::array<double, 3> Unitary2::euler_angles() const {
  // |u00| = cos(theta/2), |u10| = sin(theta/2). Phase differences between
  // neighbouring entries give phi and lambda directly.
  const double theta = 2.0 * std::atan2(std::abs(m[2]), std::abs(m[0]));
  const bool a_zero = std::abs(m[0]) < 1e-14;
  const bool c_zero = std::abs(m[2]) < 1e-14;
  double phi = 0.0;
  double lambda = 0.0;
  if (c_zero) {
    phi = std::arg(m[3]) - std::arg(m[0]);
  } else if (a_zero) {
    phi = std::arg(m[2]) - std::arg(-m[1]);
  } else {
    phi = std::arg(m[2]) - std::arg(m[0]);
    lambda = std::arg(m[3]) - std::arg(m[2]);
  }
  return {theta, phi, lambda};
}

Unitary2 sample_haar_single_qubit(RngStream& rng) {
  std::array<Complex, 4> z;
  for (auto& v : z) {
    const double re = rng.normal();
    const double im = rng.normal();
    v = Complex(re, im);
  }
  // Columns (z0, z2) and (z1, z3).
  Complex a0 = z[0], a1 = z[2];
  const double n0 = std::sqrt(std::norm(a0) + std::norm(a1));
  a0 /= n0;
  a1 /= n0;
  Complex b0 = z[1], b1 = z[3];
  const Complex proj = std::conj(a0) * b0 + std::conj(a1) * b1;
  b0 -= proj * a0;
  b1 -= proj * a1;
  const double n1 = std::sqrt(std::norm(b0) + std::norm(b1));
  b0 /= n1;
  b1 /= n1;
  return Unitary2{{a0, b0, a1, b1}};
}

}  // namespace coregap
