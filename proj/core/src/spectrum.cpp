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

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "coregap/error.hpp"
#include "coregap/krylov_schur.hpp"
#include "coregap/rng.hpp"

namespace coregap {
namespace {

constexpr double kAnomaly = 1.0 + 1e-8;

void sort_by_modulus(std::vector<std::complex<double>>& values) {
  std::stable_sort(values.begin(), values.end(),
                   [](const auto& a, const auto& b) { return std::abs(a) > std::abs(b); });
}

// Orthogonal projection onto {x_0 = 0, sum x = 0}.
void deflate(std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) sum += x[i];
  const double mean = sum / static_cast<double>(n - 1);
  y[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) y[i] = x[i] - mean;
}

void check_preconditions(const ReducedOperator& op) {
  const std::size_t n = op.dim();
  std::vector<double> e0(n, 0.0);
  std::vector<double> row0(n);
  e0[0] = 1.0;
  op.apply_transpose(e0, row0);
  double row_err = std::abs(row0[0] - 1.0);
  for (std::size_t j = 1; j < n; ++j) row_err = std::max(row_err, std::abs(row0[j]));
  if (row_err > 1e-10) fail(Errc::SpectrumAnomaly, "operator does not fix the identity string");
  const double col_err = op.column_stochastic_error();
  if (col_err > 1e-10) {
    fail(Errc::SpectrumAnomaly, "operator is not column stochastic (error " + std::to_string(col_err) + ")");
  }
}

SpectrumResult pick(std::vector<std::complex<double>> values, double unit_tolerance) {
  sort_by_modulus(values);
  SpectrumResult r;
  r.unit_count = 2;
  bool found = false;
  for (const auto& v : values) {
    const double mod = std::abs(v);
    if (mod > kAnomaly) fail(Errc::SpectrumAnomaly, "eigenvalue modulus " + std::to_string(mod) + " exceeds 1");
    if (mod >= 1.0 - unit_tolerance) {
      ++r.unit_count;
      continue;
    }
    if (!found) {
      found = true;
      r.eigenvalue = v;
      r.lambda = mod;
      r.complex_flag = std::abs(v.imag()) > 1e-6 * mod;
    }
    if (r.leading.size() < 5) r.leading.push_back(v);
  }
  if (!found) fail(Errc::NoSubleadingEigenvalue, "no eigenvalue below the unit eigenspace");
  return r;
}

}  // namespace

std::string_view to_string(EigenMethod method) noexcept {
  switch (method) {
    case EigenMethod::Auto: return "auto";
    case EigenMethod::Dense: return "dense";
    case EigenMethod::Iterative: return "iterative";
  }
  return "unknown";
}

std::vector<std::complex<double>> dense_eigenvalues(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) fail(Errc::LengthMismatch, "eigenvalues need a square matrix");
  const auto n = static_cast<lapack_int>(matrix.rows());
  if (n == 0) return {};
  Eigen::MatrixXd a = matrix;  // column major, overwritten by dgeev
  std::vector<double> wr(static_cast<std::size_t>(n));
  std::vector<double> wi(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, wr.data(), wi.data(), nullptr,
                                        1, nullptr, 1);
  if (info != 0) fail(Errc::NoConvergence, "dgeev failed with info " + std::to_string(info));
  std::vector<std::complex<double>> values(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = {wr[i], wi[i]};
  sort_by_modulus(values);
  return values;
}

SpectrumResult subleading_eigenvalue(const ReducedOperator& op, const EigenOptions& options) {
  const std::size_t n = op.dim();
  if (n < 3) fail(Errc::NoSubleadingEigenvalue, "operator has no room below its unit eigenspace");
  check_preconditions(op);

  EigenMethod method = options.method;
  if (method == EigenMethod::Auto) method = n <= options.dense_threshold ? EigenMethod::Dense : EigenMethod::Iterative;

  if (method == EigenMethod::Dense) {
    // Coordinates x_2..x_{n-1} with x_1 = -sum of the rest and x_0 = 0.
    const Eigen::MatrixXd a = op.to_dense();
    const auto m = static_cast<Eigen::Index>(n - 2);
    Eigen::MatrixXd b = a.bottomRightCorner(m, m);
    b.colwise() -= a.col(1).tail(m);
    SpectrumResult r = pick(dense_eigenvalues(b), options.unit_tolerance);
    r.method = EigenMethod::Dense;
    r.matvecs = n;
    return r;
  }

  std::vector<double> start(n);
  RngStream rng(options.start_seed);
  for (double& s : start) s = rng.normal();
  KrylovSchurOptions ks;
  ks.n_wanted = options.n_wanted;
  ks.krylov_dim = options.krylov_dim;
  ks.tolerance = options.tolerance;
  ks.max_restarts = options.max_restarts;
  ks.unit_modulus = 1.0 - options.unit_tolerance;
  std::vector<double> tmp(n);
  const RealOperator apply = [&](std::span<const double> x, std::span<double> y) {
    op.apply(x, tmp, options.threads);
    deflate(tmp, y);
  };
  const KrylovSchurResult ritz = krylov_schur(n, apply, deflate, start, ks);
  SpectrumResult r = pick(ritz.ritz, options.unit_tolerance);
  r.method = EigenMethod::Iterative;
  r.matvecs = ritz.matvecs;
  return r;
}

double normalized_gap(double lambda, std::size_t depth) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(Errc::OutOfRange, "lambda must lie in [0, 1]");
  if (depth < 1) fail(Errc::OutOfRange, "depth must be at least 1");
  return 1.0 - std::pow(lambda, 1.0 / static_cast<double>(depth));
}

double spectral_gap(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(Errc::OutOfRange, "lambda must lie in [0, 1]");
  return 1.0 - lambda;
}

}  // namespace coregap
