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
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace coregap {

/// Linear operator on reduced moment vectors, stored as an ordered list of
/// factors applied first to last (the product is factor_n ... factor_1).
///
/// A single dense factor is a dense operator and a single sparse factor a
/// sparse one; anything else is a matrix-free composite. Every factor kind
/// supports both y = A x and y = A^T x, so column sums (1^T A) are available
/// without materializing the product.
class ReducedOperator {
 public:
  using DenseMatrix = Eigen::MatrixXd;
  using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  /// block (x) block (x) ... (x) block, n_blocks copies; copy b acts on the
  /// digits [b * block_digits, (b + 1) * block_digits).
  struct KroneckerPower {
    DenseMatrix block;
    std::size_t block_digits = 0;
    std::size_t n_blocks = 0;
  };

  /// y[j] = sum_t weights[t] * x[sources[t][j]]; sources[t] is the inverse
  /// of permutation t.
  struct PermutationMixture {
    std::vector<std::vector<std::uint32_t>> sources;
    std::vector<double> weights;
  };

  using FactorOp = std::variant<DenseMatrix, SparseMatrix, KroneckerPower, PermutationMixture>;

  struct Factor {
    FactorOp op;
    std::size_t repeat = 1;
  };

  enum class Representation { Dense, Sparse, Composite };

  ReducedOperator() = default;
  ReducedOperator(std::size_t dim, std::vector<Factor> factors);

  static ReducedOperator dense(DenseMatrix matrix);
  static ReducedOperator sparse(SparseMatrix matrix);
  static ReducedOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Representation representation() const noexcept;
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  /// y = A x. Parallelizes over index blocks when threads > 1 and the
  /// dimension is large; the result does not depend on `threads`.
  void apply(std::span<const double> x, std::span<double> y, std::size_t threads = 1) const;
  std::vector<double> apply(std::span<const double> x, std::size_t threads = 1) const;

  /// y = A^T x.
  void apply_transpose(std::span<const double> x, std::span<double> y) const;

  /// This operator followed by `next` (matrix product next * this).
  ReducedOperator then(const ReducedOperator& next) const;

  /// A^k; k = 0 gives the identity.
  ReducedOperator power(std::size_t k) const;

  DenseMatrix to_dense() const;
  SparseMatrix to_sparse() const;

  /// Column sums 1^T A.
  std::vector<double> column_sums() const;

  /// max_j |1 - column_sum_j|.
  double column_stochastic_error() const;

  /// Smallest entry over all factors (factors with negative entries make the
  /// product suspicious even if it happens to be nonnegative).
  double min_factor_entry() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Factor> factors_;
};

/// Inverse of a permutation given as image[i] = destination of i.
std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> image);

}  // namespace coregap
