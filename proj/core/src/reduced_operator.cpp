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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coregap/error.hpp"
#include "coregap/parallel.hpp"
#include "coregap/reduced_space.hpp"

namespace coregap {
namespace {

using Vec = Eigen::VectorXd;
using ConstMap = Eigen::Map<const Vec>;
using Map = Eigen::Map<Vec>;

// Below this dimension a matvec is cheaper than spawning workers.
constexpr std::size_t kParallelMinDim = 19683;  // 3^9

std::size_t factor_dim(const ReducedOperator::FactorOp& op) {
  return std::visit(
      [](const auto& f) -> std::size_t {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ReducedOperator::DenseMatrix> ||
                      std::is_same_v<T, ReducedOperator::SparseMatrix>) {
          if (f.rows() != f.cols()) fail(Errc::LengthMismatch, "operator factor must be square");
          return static_cast<std::size_t>(f.rows());
        } else if constexpr (std::is_same_v<T, ReducedOperator::KroneckerPower>) {
          if (f.block.rows() != f.block.cols() || static_cast<std::size_t>(f.block.rows()) != pow3(f.block_digits)) {
            fail(Errc::LengthMismatch, "Kronecker block must be 3^digits square");
          }
          return pow3(f.block_digits * f.n_blocks);
        } else {
          if (f.sources.empty() || f.sources.size() != f.weights.size()) {
            fail(Errc::LengthMismatch, "permutation mixture needs one weight per permutation");
          }
          return f.sources.front().size();
        }
      },
      op);
}

// One block of a Kronecker power: y[o, r, i] = sum_s B(r, s) x[o, s, i].
void apply_kron_block(const Eigen::MatrixXd& block, std::size_t inner, std::span<const double> x,
                      std::span<double> y, bool transpose, std::size_t threads) {
  const auto m = static_cast<std::size_t>(block.rows());
  const std::size_t outer = x.size() / (m * inner);
  const auto body = [&](std::size_t oi) {
    const std::size_t o = oi / inner;
    const std::size_t i = oi % inner;
    const std::size_t base = o * m * inner + i;
    for (std::size_t r = 0; r < m; ++r) {
      double acc = 0.0;
      for (std::size_t s = 0; s < m; ++s) {
        const double b = transpose ? block(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(r))
                                   : block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s));
        acc += b * x[base + s * inner];
      }
      y[base + r * inner] = acc;
    }
  };
  const std::size_t count = outer * inner;
  if (threads > 1 && x.size() >= kParallelMinDim) {
    const std::size_t n_tasks = threads * 8;
    const std::size_t per = (count + n_tasks - 1) / n_tasks;
    parallel_for(n_tasks, threads, [&](std::size_t t) {
      const std::size_t end = std::min(count, (t + 1) * per);
      for (std::size_t oi = t * per; oi < end; ++oi) body(oi);
    });
  } else {
    for (std::size_t oi = 0; oi < count; ++oi) body(oi);
  }
}

// Applies one factor once: y = F x (or F^T x). x and y must not alias.
void apply_once(const ReducedOperator::FactorOp& op, std::span<const double> x, std::span<double> y,
                bool transpose, std::size_t threads, std::span<double> scratch) {
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        const auto n = static_cast<Eigen::Index>(x.size());
        if constexpr (std::is_same_v<T, ReducedOperator::DenseMatrix> ||
                      std::is_same_v<T, ReducedOperator::SparseMatrix>) {
          ConstMap xv(x.data(), n);
          Map yv(y.data(), n);
          if (transpose) yv.noalias() = f.transpose() * xv;
          else yv.noalias() = f * xv;
        } else if constexpr (std::is_same_v<T, ReducedOperator::KroneckerPower>) {
          // Ping-pong between y and scratch so the final block lands in y.
          std::span<const double> in = x;
          std::size_t inner = 1;
          const std::size_t m = pow3(f.block_digits);
          for (std::size_t b = 0; b < f.n_blocks; ++b) {
            const bool to_y = ((f.n_blocks - 1 - b) % 2) == 0;
            std::span<double> out = to_y ? y : scratch;
            apply_kron_block(f.block, inner, in, out, transpose, threads);
            in = out;
            inner *= m;
          }
        } else {
          const std::size_t dim = x.size();
          if (!transpose) {
            const auto body = [&](std::size_t j) {
              double acc = 0.0;
              for (std::size_t t = 0; t < f.sources.size(); ++t) acc += f.weights[t] * x[f.sources[t][j]];
              y[j] = acc;
            };
            if (threads > 1 && dim >= kParallelMinDim) {
              const std::size_t n_tasks = threads * 8;
              const std::size_t per = (dim + n_tasks - 1) / n_tasks;
              parallel_for(n_tasks, threads, [&](std::size_t t) {
                const std::size_t end = std::min(dim, (t + 1) * per);
                for (std::size_t j = t * per; j < end; ++j) body(j);
              });
            } else {
              for (std::size_t j = 0; j < dim; ++j) body(j);
            }
          } else {
            // (sum_t w_t P_t)^T x: (P_t^T x)[sources_t[j]] ... i.e. y[src] += w x[j].
            std::fill(y.begin(), y.end(), 0.0);
            for (std::size_t t = 0; t < f.sources.size(); ++t)
              for (std::size_t j = 0; j < dim; ++j) y[f.sources[t][j]] += f.weights[t] * x[j];
          }
        }
      },
      op);
}

}  // namespace

std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> image) {
  std::vector<std::uint32_t> inverse(image.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= image.size() || inverse[image[i]] != std::numeric_limits<std::uint32_t>::max()) {
      fail(Errc::OutOfRange, "not a permutation");
    }
    inverse[image[i]] = static_cast<std::uint32_t>(i);
  }
  return inverse;
}

ReducedOperator::ReducedOperator(std::size_t dim, std::vector<Factor> factors)
    : dim_(dim), factors_(std::move(factors)) {
  for (const Factor& f : factors_) {
    if (factor_dim(f.op) != dim_) {
      fail(Errc::LengthMismatch, "factor dimension " + std::to_string(factor_dim(f.op)) +
                                     " does not match operator dimension " + std::to_string(dim_));
    }
  }
}

ReducedOperator ReducedOperator::dense(DenseMatrix matrix) {
  const auto dim = static_cast<std::size_t>(matrix.rows());
  return ReducedOperator(dim, {Factor{std::move(matrix), 1}});
}

ReducedOperator ReducedOperator::sparse(SparseMatrix matrix) {
  const auto dim = static_cast<std::size_t>(matrix.rows());
  matrix.makeCompressed();
  return ReducedOperator(dim, {Factor{std::move(matrix), 1}});
}

ReducedOperator ReducedOperator::identity(std::size_t dim) { return ReducedOperator(dim, {}); }

ReducedOperator::Representation ReducedOperator::representation() const noexcept {
  if (factors_.size() == 1 && factors_.front().repeat == 1) {
    if (std::holds_alternative<DenseMatrix>(factors_.front().op)) return Representation::Dense;
    if (std::holds_alternative<SparseMatrix>(factors_.front().op)) return Representation::Sparse;
  }
  return Representation::Composite;
}

void ReducedOperator::apply(std::span<const double> x, std::span<double> y, std::size_t threads) const {
  if (x.size() != dim_ || y.size() != dim_) fail(Errc::LengthMismatch, "operator/vector dimension mismatch");
  std::vector<double> a(x.begin(), x.end());
  std::vector<double> b(dim_);
  std::vector<double> scratch(dim_);
  for (const Factor& f : factors_) {
    for (std::size_t r = 0; r < f.repeat; ++r) {
      apply_once(f.op, a, b, false, threads, scratch);
      a.swap(b);
    }
  }
  std::copy(a.begin(), a.end(), y.begin());
}

std::vector<double> ReducedOperator::apply(std::span<const double> x, std::size_t threads) const {
  std::vector<double> y(dim_);
  apply(x, y, threads);
  return y;
}

void ReducedOperator::apply_transpose(std::span<const double> x, std::span<double> y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(Errc::LengthMismatch, "operator/vector dimension mismatch");
  std::vector<double> a(x.begin(), x.end());
  std::vector<double> b(dim_);
  std::vector<double> scratch(dim_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    for (std::size_t r = 0; r < it->repeat; ++r) {
      apply_once(it->op, a, b, true, 1, scratch);
      a.swap(b);
    }
  }
  std::copy(a.begin(), a.end(), y.begin());
}

ReducedOperator ReducedOperator::then(const ReducedOperator& next) const {
  if (next.dim_ != dim_) fail(Errc::LengthMismatch, "cannot compose operators of different dimension");
  std::vector<Factor> factors = factors_;
  factors.insert(factors.end(), next.factors_.begin(), next.factors_.end());
  return ReducedOperator(dim_, std::move(factors));
}

ReducedOperator ReducedOperator::power(std::size_t k) const {
  if (k == 0) return identity(dim_);
  if (factors_.size() == 1) {
    Factor f = factors_.front();
    f.repeat *= k;
    return ReducedOperator(dim_, {std::move(f)});
  }
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < k; ++i) factors.insert(factors.end(), factors_.begin(), factors_.end());
  return ReducedOperator(dim_, std::move(factors));
}

ReducedOperator::DenseMatrix ReducedOperator::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  DenseMatrix m = DenseMatrix::Identity(n, n);
  std::vector<double> col(dim_);
  std::vector<double> out(dim_);
  std::vector<double> scratch(dim_);
  for (const Factor& f : factors_) {
    for (std::size_t r = 0; r < f.repeat; ++r) {
      if (const auto* d = std::get_if<DenseMatrix>(&f.op)) {
        m = *d * m;
        continue;
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        Map(col.data(), n) = m.col(j);
        apply_once(f.op, col, out, false, 1, scratch);
        m.col(j) = ConstMap(out.data(), n);
      }
    }
  }
  return m;
}

ReducedOperator::SparseMatrix ReducedOperator::to_sparse() const {
  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<double> e(dim_, 0.0);
  std::vector<double> col(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    e[j] = 1.0;
    apply(e, col);
    e[j] = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      if (col[i] != 0.0)
        triplets.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), col[i]);
  }
  const auto n = static_cast<Eigen::Index>(dim_);
  SparseMatrix s(n, n);
  s.setFromTriplets(triplets.begin(), triplets.end());
  s.makeCompressed();
  return s;
}

std::vector<double> ReducedOperator::column_sums() const {
  std::vector<double> ones(dim_, 1.0);
  std::vector<double> sums(dim_);
  apply_transpose(ones, sums);
  return sums;
}

double ReducedOperator::column_stochastic_error() const {
  double err = 0.0;
  for (double s : column_sums()) err = std::max(err, std::abs(1.0 - s));
  return err;
}

double ReducedOperator::min_factor_entry() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const Factor& f : factors_) {
    std::visit(
        [&lo](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, DenseMatrix>) {
            lo = std::min(lo, op.minCoeff());
          } else if constexpr (std::is_same_v<T, SparseMatrix>) {
            for (int k = 0; k < op.outerSize(); ++k)
              for (typename SparseMatrix::InnerIterator it(op, k); it; ++it) lo = std::min(lo, it.value());
          } else if constexpr (std::is_same_v<T, KroneckerPower>) {
            lo = std::min(lo, op.block.minCoeff());
          } else {
            for (double w : op.weights) lo = std::min(lo, w);
          }
        },
        f.op);
  }
  return lo;
}

}  // namespace coregap
