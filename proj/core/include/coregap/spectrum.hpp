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
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "coregap/reduced_operator.hpp"

namespace coregap {

enum class EigenMethod { Auto, Dense, Iterative };

std::string_view to_string(EigenMethod method) noexcept;

struct EigenOptions {
  double unit_tolerance = 1e-8;
  std::size_t dense_threshold = 2187;  ///< 3^7
  EigenMethod method = EigenMethod::Auto;
  std::size_t krylov_dim = 40;
  std::size_t n_wanted = 6;
  double tolerance = 1e-12;
  std::size_t max_restarts = 2000;
  std::size_t threads = 1;             ///< matvec workers
  std::uint64_t start_seed = 0x636f726567617031ULL;
};

struct SpectrumResult {
  double lambda = 0.0;                           ///< modulus of the subleading eigenvalue
  std::complex<double> eigenvalue;               ///< the eigenvalue itself
  bool complex_flag = false;                     ///< |Im| > 1e-6 |lambda|
  std::vector<std::complex<double>> leading;     ///< up to 5 non-unit eigenvalues, descending modulus
  std::size_t unit_count = 0;                    ///< eigenvalues within unit_tolerance of modulus 1
  EigenMethod method = EigenMethod::Dense;
  std::size_t matvecs = 0;
};

/// All eigenvalues of a real square matrix, descending modulus.
std::vector<std::complex<double>> dense_eigenvalues(const Eigen::MatrixXd& matrix);

/// Largest eigenvalue modulus strictly below 1 - unit_tolerance.
///
/// The operator must be column stochastic and fix the identity string (row 0
/// equal to e_0^T). Both unit eigenvalues these imply are removed by
/// restricting to the invariant subspace {x_0 = 0, sum x = 0}; any further
/// unit eigenvalues are skipped. Dense LAPACK for dim <= dense_threshold,
/// Krylov-Schur otherwise.
/// Throws Error(SpectrumAnomaly), Error(NoSubleadingEigenvalue),
/// Error(NoConvergence).
SpectrumResult subleading_eigenvalue(const ReducedOperator& op, const EigenOptions& options = {});

/// Delta = 1 - lambda^(1/D). Throws Error(OutOfRange) unless lambda in [0, 1] and D >= 1.
double normalized_gap(double lambda, std::size_t depth);

/// 1 - lambda.
double spectral_gap(double lambda);

}  // namespace coregap
