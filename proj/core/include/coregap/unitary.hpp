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
#include <complex>

#include "coregap/rng.hpp"

namespace coregap {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {u00, u01, u10, u11}.
struct Unitary2 {
  std::array<Complex, 4> m{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}};

  Complex operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }

  Unitary2 adjoint() const;
  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b);
  friend bool operator==(const Unitary2&, const Unitary2&) = default;

  /// Max-abs deviation of U^dagger U from the identity.
  double unitarity_error() const;

  /// ZYZ Euler angles (theta, phi, lambda) such that, up to global phase,
  /// U = Rz(phi) Ry(theta) Rz(lambda).
  std::array<double, 3> euler_angles() const;
};

/// Haar-random single-qubit unitary. A 2x2 complex Gaussian matrix is
/// orthonormalized column by column (Gram-Schmidt); the implied R factor has
/// a positive real diagonal, which fixes the phase ambiguity of QR and makes
/// the result exactly Haar distributed on U(2).
Unitary2 sample_haar_single_qubit(RngStream& rng);

}  // namespace coregap
