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
#include <ostream>
#include <vector>

#include "coregap/config.hpp"
#include "coregap/reduced_operator.hpp"
#include "coregap/topology.hpp"

namespace coregap {

struct MarkovOptions {
  bool include_intercore = true;          ///< false builds the factorized (no-link) diagnostic
  std::size_t kron_dense_threshold = 729;  ///< intra operators up to this dim are materialized
  Caps caps{};
};

/// Image of every reduced index under CZ on digits (qa, qb): image[i] is the
/// destination of i.
std::vector<std::uint32_t> cz_permutation(std::size_t n_digits, std::size_t qa, std::size_t qb);

/// p1/Nq sum_i R^(i) + p2/(Nq(Nq-1)) sum_{i != j} CZ^(i,j) on 3^Nq.
/// Throws Error(DegenerateCore) when Nq = 1 and p_single < 1, Error(OutOfRange)
/// for p_single outside [0, 1] or c_rand outside [-1, 1].
ReducedOperator build_core_matrix(std::size_t n_qubits_per_core, double p_single, double c_rand);

/// Kronecker power of the core operator over all cores.
ReducedOperator build_intra_operator(std::size_t n_cores, const ReducedOperator& core,
                                     const MarkovOptions& options = {});

/// Uniform mixture over the Nq^2 qubit pairs across a link. Both control
/// orderings give the same permutation, so the 2 Nq^2 placements collapse.
ReducedOperator build_link_operator(const Link& link, std::size_t n_qubits_per_core, std::size_t n_cores);

/// Product over links in LinkSet order, first link applied first.
ReducedOperator build_inter_operator(const LinkSet& links, std::size_t n_qubits_per_core,
                                     const MarkovOptions& options = {});

/// M_inter * M_intra^I, or M_intra^I alone when include_intercore is false.
ReducedOperator build_total_operator(const CircuitConfig& config, const MarkovOptions& options = {});

/// Link count entering D = Nc * I + b for the given build.
std::size_t effective_link_count(const CircuitConfig& config, const MarkovOptions& options = {});

/// Sparse triplet dump: one header line then "row col value" per nonzero.
void write_operator_dump(std::ostream& os, const ReducedOperator& op, const CircuitConfig& config);

}  // namespace coregap
