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


#include "coregap/markov.hpp"

#include <string>

#include "coregap/error.hpp"
#include "coregap/reduced_maps.hpp"
#include "coregap/reduced_space.hpp"

namespace coregap {
namespace {

std::size_t checked_dim(std::size_t n_digits, const Caps& caps) {
  if (n_digits > 20 || pow3(n_digits) > caps.max_markov_dim) {
    fail(Errc::CapExceeded, "reduced space of " + std::to_string(n_digits) + " qubits exceeds cap " +
                                std::to_string(caps.max_markov_dim));
  }
  return pow3(n_digits);
}

}  // namespace

std::vector<std::uint32_t> cz_permutation(std::size_t n_digits, std::size_t qa, std::size_t qb) {
  if (qa >= n_digits || qb >= n_digits) fail(Errc::IndexOutOfRange, "CZ digit out of range");
  if (qa == qb) fail(Errc::EqualQubits, "CZ needs two distinct qubits");
  static const PairPermutation perm = reduced_cz_map();
  const std::size_t dim = pow3(n_digits);
  std::vector<std::uint32_t> image(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t to = perm[pair_index(digit_of(i, qa), digit_of(i, qb))];
    const std::size_t moved = with_digit(with_digit(i, qa, static_cast<Symbol>(to % 3)), qb, static_cast<Symbol>(to / 3));
    image[i] = static_cast<std::uint32_t>(moved);
  }
  return image;
}

ReducedOperator build_core_matrix(std::size_t nq, double p_single, double c_rand) {
  if (nq == 0) fail(Errc::InvalidConfig, "n_qubits_per_core must be at least 1");
  if (!(p_single >= 0.0 && p_single <= 1.0)) fail(Errc::OutOfRange, "p_single must lie in [0, 1]");
  if (nq == 1 && p_single < 1.0) {
    fail(Errc::DegenerateCore, "a single-qubit core has no CZ pair; p_single must be 1");
  }
  const Eigen::Matrix3d r = reduced_single_qubit_matrix(c_rand);
  const std::size_t dim = pow3(nq);
  const auto n = static_cast<Eigen::Index>(dim);
  ReducedOperator::DenseMatrix m = ReducedOperator::DenseMatrix::Zero(n, n);

  const double w1 = p_single / static_cast<double>(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t src = 0; src < dim; ++src) {
      const auto d = static_cast<Eigen::Index>(digit_of(src, q));
      for (Eigen::Index to = 0; to < 3; ++to) {
        const double v = r(to, d);
        const std::size_t dst = with_digit(src, q, static_cast<Symbol>(to));
        if (v != 0.0) m(static_cast<Eigen::Index>(dst), static_cast<Eigen::Index>(src)) += w1 * v;
      }
    }
  }
  if (nq >= 2 && p_single < 1.0) {
    const double w2 = (1.0 - p_single) / static_cast<double>(nq * (nq - 1));
    for (std::size_t i = 0; i < nq; ++i) {
      for (std::size_t j = 0; j < nq; ++j) {
        if (i == j) continue;
        const auto image = cz_permutation(nq, i, j);
        for (std::size_t src = 0; src < dim; ++src)
          m(static_cast<Eigen::Index>(image[src]), static_cast<Eigen::Index>(src)) += w2;
      }
    }
  }
  return ReducedOperator::dense(std::move(m));
}

ReducedOperator build_intra_operator(std::size_t n_cores, const ReducedOperator& core, const MarkovOptions& options) {
  if (n_cores == 0) fail(Errc::InvalidCoreCount, "need at least one core");
  if (core.representation() != ReducedOperator::Representation::Dense) {
    fail(Errc::InvalidConfig, "core operator must be dense");
  }
  const auto& block = std::get<ReducedOperator::DenseMatrix>(core.factors().front().op);
  std::size_t digits = 0;
  for (std::size_t d = core.dim(); d > 1; d /= 3) ++digits;
  const std::size_t dim = checked_dim(digits * n_cores, options.caps);
  if (n_cores == 1) return core;
  if (dim <= options.kron_dense_threshold) {
    // Core 0 owns the least significant digits, so it is the rightmost factor.
    ReducedOperator::DenseMatrix m = block;
    for (std::size_t c = 1; c < n_cores; ++c) {
      ReducedOperator::DenseMatrix next(m.rows() * block.rows(), m.cols() * block.cols());
      for (Eigen::Index i = 0; i < block.rows(); ++i)
        for (Eigen::Index j = 0; j < block.cols(); ++j)
          next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = block(i, j) * m;
      m = std::move(next);
    }
    return ReducedOperator::dense(std::move(m));
  }
  return ReducedOperator(dim, {ReducedOperator::Factor{ReducedOperator::KroneckerPower{block, digits, n_cores}, 1}});
}

ReducedOperator build_link_operator(const Link& link, std::size_t nq, std::size_t n_cores) {
  if (link.first >= n_cores || link.second >= n_cores || link.first == link.second) {
    fail(Errc::InvalidLink, "link (" + std::to_string(link.first) + ", " + std::to_string(link.second) +
                                ") is not valid for " + std::to_string(n_cores) + " cores");
  }
  const std::size_t n_digits = nq * n_cores;
  ReducedOperator::PermutationMixture mix;
  const double w = 1.0 / static_cast<double>(nq * nq);
  for (std::size_t a = 0; a < nq; ++a) {
    for (std::size_t b = 0; b < nq; ++b) {
      const auto image = cz_permutation(n_digits, link.first * nq + a, link.second * nq + b);
      mix.sources.push_back(invert_permutation(image));
      mix.weights.push_back(w);
    }
  }
  return ReducedOperator(pow3(n_digits), {ReducedOperator::Factor{std::move(mix), 1}});
}

ReducedOperator build_inter_operator(const LinkSet& links, std::size_t nq, const MarkovOptions& options) {
  const std::size_t dim = checked_dim(nq * links.n_cores(), options.caps);
  ReducedOperator op = ReducedOperator::identity(dim);
  for (const Link& link : links.links()) op = op.then(build_link_operator(link, nq, links.n_cores()));
  return op;
}

ReducedOperator build_total_operator(const CircuitConfig& config, const MarkovOptions& options) {
  validate(config);
  check_markov_cap(config, options.caps);
  const ReducedOperator core = build_core_matrix(config.n_qubits_per_core, config.p_single, config.c_rand);
  ReducedOperator op = build_intra_operator(config.n_cores, core, options).power(config.intracore_steps);
  if (options.include_intercore) {
    op = op.then(build_inter_operator(build_topology(config.topology, config.n_cores), config.n_qubits_per_core,
                                      options));
  }
  return op;
}

std::size_t effective_link_count(const CircuitConfig& config, const MarkovOptions& options) {
  return options.include_intercore ? expected_link_count(config.topology, config.n_cores) : 0;
}

void write_operator_dump(std::ostream& os, const ReducedOperator& op, const CircuitConfig& config) {
  os << "# dim=" << op.dim() << " n_cores=" << config.n_cores << " n_qubits_per_core=" << config.n_qubits_per_core
     << " topology=" << to_string(config.topology) << " I=" << config.intracore_steps
     << " p1=" << format_double(config.p_single) << " c_rand=" << format_double(config.c_rand) << '\n';
  const ReducedOperator::SparseMatrix s = op.to_sparse();
  for (Eigen::Index r = 0; r < s.outerSize(); ++r)
    for (ReducedOperator::SparseMatrix::InnerIterator it(s, r); it; ++it)
      os << it.row() << ' ' << it.col() << ' ' << format_double(it.value()) << '\n';
}

}  // namespace coregap
