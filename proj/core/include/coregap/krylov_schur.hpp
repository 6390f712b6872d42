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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace coregap {

struct KrylovSchurOptions {
  std::size_t n_wanted = 6;
  std::size_t krylov_dim = 40;
  double tolerance = 1e-12;          ///< |residual_i| <= tolerance * |theta_i|
  std::size_t max_restarts = 2000;
  double unit_modulus = 1.0 - 1e-8;  ///< Ritz values at or above this modulus are units
};

struct KrylovSchurResult {
  /// Converged Ritz values, descending modulus, leading units included.
  std::vector<std::complex<double>> ritz;
  std::size_t matvecs = 0;
  std::size_t restarts = 0;
};

using RealOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

/// Restarted Arnoldi (Krylov-Schur) for the largest-modulus eigenvalues of a
/// real operator, in complex arithmetic. `project` (optional) maps vectors
/// into the invariant subspace the iteration is confined to; `op` must keep
/// that subspace invariant. Stops once the leading Ritz values up to and
/// including the first non-unit one, and at least n_wanted overall, have
/// converged; n_wanted is doubled when every converged value is a unit.
/// Throws Error(NoConvergence) when max_restarts is exhausted before the
/// first non-unit value converges and Error(NoSubleadingEigenvalue) when the
/// subspace holds only unit eigenvalues.
KrylovSchurResult krylov_schur(std::size_t dim, const RealOperator& op, const RealOperator& project,
                               std::span<const double> start, const KrylovSchurOptions& options = {});

}  // namespace coregap
