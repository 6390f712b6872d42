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


#include "coregap/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "coregap/error.hpp"
#include "coregap/krylov_schur.hpp"
#include "coregap/markov.hpp"
#include "coregap/reduced_maps.hpp"
#include "coregap/rng.hpp"
#include "oracles.hpp"

using namespace coregap;

namespace {

ReducedOperator total(std::size_t nc, std::size_t nq, std::size_t i, TopologyKind kind = TopologyKind::Linear,
                      bool inter = true) {
  CircuitConfig c;
  c.n_cores = nc;
  c.n_qubits_per_core = nq;
  c.intracore_steps = i;
  c.topology = kind;
  c.p_single = nq == 1 ? 1.0 : 0.5;
  MarkovOptions opts;
  opts.include_intercore = inter;
  return build_total_operator(c, opts);
}

// Row 0 = e_0^T, columns sum to 1, and the deflated block equals `b`.
Eigen::MatrixXd with_deflated_block(const Eigen::MatrixXd& b) {
  const Eigen::Index m = b.rows();
  const Eigen::Index n = m + 2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  a(0, 0) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) a(i, 1) = 1.0 / static_cast<double>(n - 1);
  for (Eigen::Index j = 2; j < n; ++j) {
    for (Eigen::Index i = 2; i < n; ++i) a(i, j) = b(i - 2, j - 2) + a(i, 1);
    a(1, j) = 1.0 - a.col(j).tail(m).sum();
  }
  return a;
}

}  // namespace

TEST(spectrum, r_one_third) {
  const SpectrumResult r = subleading_eigenvalue(ReducedOperator::dense(reduced_single_qubit_matrix(1.0 / 3.0)));
  ASSERT_NEAR(r.lambda, 0.0, 1e-12);
  ASSERT_EQ(r.unit_count, 2u);
}

TEST(spectrum, identity_has_no_subleading_eigenvalue) {
  try {
    subleading_eigenvalue(ReducedOperator::dense(Eigen::MatrixXd::Identity(9, 9)));
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::NoSubleadingEigenvalue);
  }
  EigenOptions it;
  it.method = EigenMethod::Iterative;
  ASSERT_THROW(subleading_eigenvalue(ReducedOperator::dense(Eigen::MatrixXd::Identity(9, 9)), it), Error);
}

TEST(spectrum, dense_matches_definition) {
  for (std::size_t i : {1, 2, 4}) {
    for (auto kind : {TopologyKind::Linear, TopologyKind::Full}) {
      const ReducedOperator op = total(3, 1, i, kind);
      const double expect = oracle::subleading_modulus(op.to_dense());
      ASSERT_NEAR(subleading_eigenvalue(op).lambda, expect, 1e-7);
    }
  }
  const ReducedOperator op = total(2, 2, 2);
  ASSERT_NEAR(subleading_eigenvalue(op).lambda, oracle::subleading_modulus(op.to_dense()), 1e-7);
}

TEST(spectrum, full_spectrum_sanity) {
  const auto values = dense_eigenvalues(total(2, 2, 2).to_dense());
  ASSERT_NEAR(std::abs(values.front() - 1.0), 0.0, 1e-10);
  for (const auto& v : values) ASSERT_LE(std::abs(v), 1.0 + 1e-8);
}

TEST(spectrum, dense_vs_iterative_small) {
  const ReducedOperator op = total(2, 2, 2);
  EigenOptions dense;
  dense.method = EigenMethod::Dense;
  EigenOptions iter;
  iter.method = EigenMethod::Iterative;
  const SpectrumResult a = subleading_eigenvalue(op, dense);
  const SpectrumResult b = subleading_eigenvalue(op, iter);
  ASSERT_EQ(a.method, EigenMethod::Dense);
  ASSERT_EQ(b.method, EigenMethod::Iterative);
  ASSERT_LT(std::abs(a.lambda - b.lambda), 1e-8);
}

TEST(spectrum, dense_vs_iterative_three_cores) {
  const ReducedOperator op = total(3, 2, 3, TopologyKind::Ring);
  EigenOptions iter;
  iter.method = EigenMethod::Iterative;
  ASSERT_LT(std::abs(subleading_eigenvalue(op).lambda - subleading_eigenvalue(op, iter).lambda), 1e-8);
}

TEST(spectrum, iterative_skips_extra_unit_eigenvalues) {
  // Three uncoupled cores: the fixed space is 2^3 dimensional.
  const ReducedOperator op = total(3, 2, 2, TopologyKind::Linear, false);
  EigenOptions iter;
  iter.method = EigenMethod::Iterative;
  iter.n_wanted = 2;
  const SpectrumResult a = subleading_eigenvalue(op);
  const SpectrumResult b = subleading_eigenvalue(op, iter);
  ASSERT_EQ(a.unit_count, 8u);
  ASSERT_LT(std::abs(a.lambda - b.lambda), 1e-8);
}

TEST(spectrum, iterative_is_deterministic) {
  const ReducedOperator op = total(3, 2, 2);
  EigenOptions iter;
  iter.method = EigenMethod::Iterative;
  const SpectrumResult a = subleading_eigenvalue(op, iter);
  iter.threads = 4;
  const SpectrumResult b = subleading_eigenvalue(op, iter);
  ASSERT_EQ(a.lambda, b.lambda);
  ASSERT_EQ(a.leading, b.leading);
}

TEST(spectrum, complex_pair_is_flagged) {
  Eigen::MatrixXd b(2, 2);
  b << 0.0, -0.5, 0.5, 0.0;
  const ReducedOperator op = ReducedOperator::dense(with_deflated_block(b));
  for (auto method : {EigenMethod::Dense, EigenMethod::Iterative}) {
    EigenOptions opts;
    opts.method = method;
    const SpectrumResult r = subleading_eigenvalue(op, opts);
    ASSERT_NEAR(r.lambda, 0.5, 1e-12);
    ASSERT_TRUE(r.complex_flag);
  }
}

TEST(spectrum, anomaly) {
  Eigen::MatrixXd b(1, 1);
  b << 3.0;
  try {
    subleading_eigenvalue(ReducedOperator::dense(with_deflated_block(b)));
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::SpectrumAnomaly);
  }
  Eigen::MatrixXd not_stochastic = Eigen::MatrixXd::Identity(4, 4);
  not_stochastic(2, 3) = 0.5;
  ASSERT_THROW(subleading_eigenvalue(ReducedOperator::dense(not_stochastic)), Error);
}

TEST(spectrum, normalized_gap) {
  ASSERT_EQ(normalized_gap(1.0, 7), 0.0);
  ASSERT_EQ(normalized_gap(0.0, 3), 1.0);
  ASSERT_NEAR(normalized_gap(0.25, 2), 0.5, 1e-15);
  ASSERT_THROW(normalized_gap(1.5, 2), Error);
  ASSERT_THROW(normalized_gap(0.5, 0), Error);
  ASSERT_NEAR(spectral_gap(0.25), 0.75, 1e-15);
}

TEST(krylov_schur, random_nonsymmetric_matrix) {
  RngStream rng(8);
  const Eigen::Index n = 300;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rng.normal() / std::sqrt(static_cast<double>(n));
  a.diagonal().head(4) += Eigen::Vector4d(3.0, -2.5, 2.0, 1.8);
  std::vector<double> start(static_cast<std::size_t>(n));
  for (double& s : start) s = rng.normal();
  const RealOperator op = [&](std::span<const double> x, std::span<double> y) {
    Eigen::Map<Eigen::VectorXd>(y.data(), n) = a * Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  };
  KrylovSchurOptions opts;
  opts.n_wanted = 4;
  opts.unit_modulus = 1e9;
  const KrylovSchurResult r = krylov_schur(static_cast<std::size_t>(n), op, {}, start, opts);
  const auto expect = oracle::eigenvalues(a);
  ASSERT_GE(r.ritz.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) ASSERT_LT(std::abs(r.ritz[k] - expect[k]), 1e-9);
  ASSERT_GT(r.matvecs, 0u);
}
