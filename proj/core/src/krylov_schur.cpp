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


#include "coregap/krylov_schur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "coregap/error.hpp"
#include "coregap/rng.hpp"

namespace coregap {
namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Swaps diagonal entries k and k+1 of the upper triangular T, updating Q.
void swap_adjacent(CMatrix& t, CMatrix& q, Eigen::Index k) {
  const Complex a = t(k, k);
  const Complex b = t(k + 1, k + 1);
  Eigen::Vector2cd x(t(k, k + 1), b - a);
  const double nx = x.norm();
  if (nx == 0.0) return;
  x /= nx;
  Eigen::Matrix2cd g;
  g(0, 0) = x(0);
  g(1, 0) = x(1);
  g(0, 1) = -std::conj(x(1));
  g(1, 1) = std::conj(x(0));
  t.middleCols(k, 2) = t.middleCols(k, 2) * g;
  t.middleRows(k, 2) = g.adjoint() * t.middleRows(k, 2);
  q.middleCols(k, 2) = q.middleCols(k, 2) * g;
  t(k + 1, k) = 0.0;
}

// Bubble sort of the Schur form by descending modulus of the diagonal.
void sort_schur(CMatrix& t, CMatrix& q) {
  const Eigen::Index n = t.rows();
  for (Eigen::Index pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (Eigen::Index k = 0; k + 1 < n - pass; ++k) {
      if (std::abs(t(k + 1, k + 1)) > std::abs(t(k, k))) {
        swap_adjacent(t, q, k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
}

class ComplexApply {
 public:
  ComplexApply(std::size_t dim, const RealOperator& op) : op_(op), re_(dim), im_(dim), out_re_(dim), out_im_(dim) {}

  void operator()(const CVector& x, CVector& y) {
    for (std::size_t i = 0; i < re_.size(); ++i) {
      re_[i] = x(static_cast<Eigen::Index>(i)).real();
      im_[i] = x(static_cast<Eigen::Index>(i)).imag();
    }
    op_(re_, out_re_);
    op_(im_, out_im_);
    count_ += 2;
    for (std::size_t i = 0; i < re_.size(); ++i) y(static_cast<Eigen::Index>(i)) = Complex(out_re_[i], out_im_[i]);
  }

  std::size_t count() const noexcept { return count_; }

 private:
  const RealOperator& op_;
  std::vector<double> re_, im_, out_re_, out_im_;
  std::size_t count_ = 0;
};

}  // namespace

KrylovSchurResult krylov_schur(std::size_t dim, const RealOperator& op, const RealOperator& project,
                               std::span<const double> start, const KrylovSchurOptions& options) {
  if (start.size() != dim) fail(Errc::LengthMismatch, "start vector length does not match operator dimension");
  if (dim < 2) fail(Errc::NoSubleadingEigenvalue, "operator dimension too small for Krylov iteration");

  std::size_t nev = std::max<std::size_t>(1, options.n_wanted);
  std::size_t m = std::min(dim - 1, std::max(options.krylov_dim, 2 * nev + 8));
  const auto n = static_cast<Eigen::Index>(dim);

  CMatrix v = CMatrix::Zero(n, static_cast<Eigen::Index>(m + 1));
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(m + 1), static_cast<Eigen::Index>(m));
  ComplexApply apply(dim, op);

  std::vector<double> buf(start.begin(), start.end());
  std::vector<double> projected(dim);
  if (project) {
    project(buf, projected);
    buf = projected;
  }
  CVector w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = buf[static_cast<std::size_t>(i)];
  if (w.norm() == 0.0) fail(Errc::NoSubleadingEigenvalue, "start vector vanishes in the deflated subspace");
  v.col(0) = w / w.norm();

  KrylovSchurResult result;
  std::size_t k = 0;
  RngStream refill(0x9E3779B97F4A7C15ULL);

  for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
    for (std::size_t j = k; j < m; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      apply(v.col(jj), w);
      CVector coeff = v.leftCols(jj + 1).adjoint() * w;
      w -= v.leftCols(jj + 1) * coeff;
      const CVector again = v.leftCols(jj + 1).adjoint() * w;
      w -= v.leftCols(jj + 1) * again;
      coeff += again;
      h.col(jj).head(jj + 1) = coeff;
      const double beta = w.norm();
      const double scale = coeff.norm() + beta;
      if (beta > 1e-13 * std::max(scale, 1e-300)) {
        h(jj + 1, jj) = beta;
        v.col(jj + 1) = w / beta;
        continue;
      }
      // Invariant subspace: continue from a fresh direction.
      h(jj + 1, jj) = 0.0;
      for (int attempt = 0; attempt < 8; ++attempt) {
        for (double& x : buf) x = refill.normal();
        if (project) {
          project(buf, projected);
          buf = projected;
        }
        for (Eigen::Index i = 0; i < n; ++i) w(i) = buf[static_cast<std::size_t>(i)];
        for (int pass = 0; pass < 2; ++pass) w -= v.leftCols(jj + 1) * (v.leftCols(jj + 1).adjoint() * w);
        if (w.norm() > 1e-8) break;
      }
      if (w.norm() <= 1e-8) {
        m = j + 1;
        break;
      }
      v.col(jj + 1) = w / w.norm();
    }

    const auto mm = static_cast<Eigen::Index>(m);
    Eigen::ComplexSchur<CMatrix> schur(h.topLeftCorner(mm, mm));
    if (schur.info() != Eigen::Success) fail(Errc::NoConvergence, "Schur decomposition of the Krylov matrix failed");
    CMatrix t = schur.matrixT();
    CMatrix q = schur.matrixU();
    sort_schur(t, q);
    const Eigen::RowVectorXcd b = h.row(mm).head(mm) * q;

    std::size_t converged = 0;
    std::size_t first_non_unit = m;
    for (std::size_t i = 0; i < m; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      const double mod = std::abs(t(ii, ii));
      if (std::abs(b(ii)) > options.tolerance * std::max(mod, 1e-6)) break;
      ++converged;
      if (first_non_unit == m && mod < options.unit_modulus) first_non_unit = i;
    }

    result.restarts = restart;
    result.matvecs = apply.count();
    const bool have_lambda = first_non_unit < converged;
    if ((have_lambda && converged >= std::min(nev, m)) || (have_lambda && restart == options.max_restarts)) {
      for (std::size_t i = 0; i < converged; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        result.ritz.push_back(t(ii, ii));
      }
      return result;
    }
    if (!have_lambda && converged == m) {
      fail(Errc::NoSubleadingEigenvalue, "every eigenvalue in the deflated subspace is a unit");
    }
    if (!have_lambda && converged >= nev && 2 * nev + 2 < dim) {
      nev *= 2;
      const std::size_t grown = std::min(dim - 1, std::max(m, 2 * nev + 8));
      if (grown > m) {
        v.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(grown + 1));
        CMatrix hh = CMatrix::Zero(static_cast<Eigen::Index>(grown + 1), static_cast<Eigen::Index>(grown));
        hh.topLeftCorner(mm + 1, mm) = h;
        h = std::move(hh);
        // Keep the current factorization; the restart below works on the old size.
      }
      const std::size_t keep_grow = std::min(m - 1, std::max<std::size_t>(1, m / 2));
      const auto p = static_cast<Eigen::Index>(keep_grow);
      CMatrix kept = v.leftCols(mm) * q.leftCols(p);
      v.col(p) = v.col(mm);
      v.leftCols(p) = kept;
      h.setZero();
      h.topLeftCorner(p, p) = t.topLeftCorner(p, p);
      h.row(p).head(p) = b.head(p);
      k = keep_grow;
      m = grown;
      continue;
    }

    const std::size_t keep = std::min(m - 1, std::max(nev + (m - std::min(nev, m)) / 2, std::size_t{1}));
    const auto p = static_cast<Eigen::Index>(keep);
    CMatrix kept = v.leftCols(mm) * q.leftCols(p);
    v.col(p) = v.col(mm);
    v.leftCols(p) = kept;
    h.setZero();
    h.topLeftCorner(p, p) = t.topLeftCorner(p, p);
    h.row(p).head(p) = b.head(p);
    k = keep;
  }
  fail(Errc::NoConvergence, "Krylov-Schur did not converge within " + std::to_string(options.max_restarts) +
                                " restarts");
}

}  // namespace coregap
