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


#include "coregap/reduced_operator.hpp"

#include <gtest/gtest.h>

#include "coregap/error.hpp"
#include "coregap/rng.hpp"
#include "oracles.hpp"

using namespace coregap;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

Eigen::MatrixXd random_stochastic(Eigen::Index n, std::uint64_t seed) {
  RngStream rng(seed);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = rng.uniform01();
    m.col(j) /= m.col(j).sum();
  }
  return m;
}

double max_diff(const std::vector<double>& a, const Eigen::VectorXd& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
  return d;
}

}  // namespace

TEST(reduced_operator, kronecker_power_matches_dense) {
  const Eigen::MatrixXd block = random_stochastic(9, 1);
  const ReducedOperator op(729, {{ReducedOperator::KroneckerPower{block, 2, 3}, 1}});
  const Eigen::MatrixXd dense = oracle::kron(block, oracle::kron(block, block));
  const auto x = random_vector(729, 2);
  const Eigen::VectorXd expect = dense * Eigen::Map<const Eigen::VectorXd>(x.data(), 729);
  ASSERT_LT(max_diff(op.apply(x), expect), 1e-12);
  ASSERT_LT(max_diff(op.apply(x, 4), expect), 1e-12);
  ASSERT_LT((op.to_dense() - dense).cwiseAbs().maxCoeff(), 1e-12);

  std::vector<double> yt(729);
  op.apply_transpose(x, yt);
  const Eigen::VectorXd expect_t = dense.transpose() * Eigen::Map<const Eigen::VectorXd>(x.data(), 729);
  ASSERT_LT(max_diff(yt, expect_t), 1e-12);
}

TEST(reduced_operator, permutation_mixture) {
  const std::vector<std::uint32_t> image{2, 0, 1, 3};
  ReducedOperator::PermutationMixture mix;
  mix.sources.push_back(invert_permutation(image));
  mix.sources.push_back({0, 1, 2, 3});
  mix.weights = {0.25, 0.75};
  const ReducedOperator op(4, {{mix, 1}});
  Eigen::MatrixXd expect = 0.75 * Eigen::MatrixXd::Identity(4, 4);
  for (std::size_t i = 0; i < 4; ++i) expect(image[i], static_cast<Eigen::Index>(i)) += 0.25;
  ASSERT_LT((op.to_dense() - expect).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_LT((op.to_sparse().toDense() - expect).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_LT(op.column_stochastic_error(), 1e-15);
  std::vector<double> yt(4);
  const std::vector<double> x{1, 2, 3, 4};
  op.apply_transpose(x, yt);
  ASSERT_LT(max_diff(yt, expect.transpose() * Eigen::Vector4d(1, 2, 3, 4)), 1e-15);
}

TEST(reduced_operator, composition_order) {
  const Eigen::MatrixXd a = random_stochastic(5, 3);
  const Eigen::MatrixXd b = random_stochastic(5, 4);
  const ReducedOperator op = ReducedOperator::dense(a).then(ReducedOperator::dense(b));
  ASSERT_LT((op.to_dense() - b * a).cwiseAbs().maxCoeff(), 1e-14);
  const ReducedOperator p = op.power(3);
  ASSERT_LT((p.to_dense() - (b * a) * (b * a) * (b * a)).cwiseAbs().maxCoeff(), 1e-14);
  ASSERT_LT((ReducedOperator::dense(a).power(4).to_dense() - a * a * a * a).cwiseAbs().maxCoeff(), 1e-14);
  ASSERT_EQ(op.power(0).to_dense(), Eigen::MatrixXd::Identity(5, 5));
  ASSERT_EQ(op.representation(), ReducedOperator::Representation::Composite);
  ASSERT_EQ(ReducedOperator::dense(a).representation(), ReducedOperator::Representation::Dense);
}

TEST(reduced_operator, sparse_factor) {
  const Eigen::MatrixXd a = random_stochastic(6, 5);
  ReducedOperator::SparseMatrix s = a.sparseView();
  const ReducedOperator op = ReducedOperator::sparse(s);
  ASSERT_EQ(op.representation(), ReducedOperator::Representation::Sparse);
  ASSERT_LT((op.to_dense() - a).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_NEAR(op.min_factor_entry(), a.minCoeff(), 0.0);
}

TEST(reduced_operator, dimension_checks) {
  ASSERT_THROW(ReducedOperator(4, {{Eigen::MatrixXd::Identity(3, 3), 1}}), Error);
  const ReducedOperator op = ReducedOperator::identity(3);
  std::vector<double> y(4);
  ASSERT_THROW(op.apply(std::vector<double>(3), y), Error);
  ASSERT_THROW(op.then(ReducedOperator::identity(4)), Error);
  ASSERT_THROW(ReducedOperator(9, {{ReducedOperator::KroneckerPower{Eigen::MatrixXd::Identity(4, 4), 1, 2}, 1}}),
               Error);
}

TEST(reduced_operator, invert_permutation) {
  const std::vector<std::uint32_t> image{3, 0, 2, 1};
  const auto inv = invert_permutation(image);
  for (std::size_t i = 0; i < 4; ++i) ASSERT_EQ(inv[image[i]], i);
  ASSERT_THROW(invert_permutation(std::vector<std::uint32_t>{0, 0}), Error);
}
