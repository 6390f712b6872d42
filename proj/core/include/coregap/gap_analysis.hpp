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
#include <span>
#include <vector>

#include "coregap/config.hpp"
#include "coregap/majorization.hpp"
#include "coregap/markov.hpp"
#include "coregap/spectrum.hpp"

namespace coregap {

struct GapEntry {
  std::size_t intracore_steps = 0;  ///< I
  double lambda = 0.0;
  std::size_t depth = 0;            ///< D = a I + b
  double delta = 0.0;
  bool complex_flag = false;
  std::vector<std::complex<double>> leading;
};

struct GapProfile {
  std::vector<GapEntry> entries;
  std::size_t a = 0;  ///< Nc
  std::size_t b = 0;  ///< links counted in D
  CircuitConfig config;
};

struct GapScanOptions {
  MarkovOptions markov{};
  EigenOptions eigen{};
  std::size_t threads = 1;  ///< scan points solved concurrently
};

/// One entry per I (ascending, non-empty). Throws Error(InvalidConfig) on a bad I list.
GapProfile scan_gap(const CircuitConfig& base, std::span<const std::size_t> i_values, const GapScanOptions& options = {});

struct Optimum {
  std::size_t intracore_steps = 0;
  double delta = 0.0;
  bool is_interior = false;
};

/// Delta values within this of the running maximum count as ties.
inline constexpr double kOptimumTieTolerance = 1e-12;

/// argmax Delta, ties toward smaller I. Throws Error(TooFewPoints) below 3 entries.
Optimum find_optimal_I(const GapProfile& profile);

/// Least squares log Lambda(I) = slope I + intercept, so Lambda = prefactor e^(-kappa a I).
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
  double kappa = 0.0;
  double prefactor = 0.0;
};

/// Throws Error(TooFewPoints) or Error(NonpositiveEigenvalue).
DecayFit fit_exponential_decay(const GapProfile& profile);

/// (a I + b) Lambda'(I) / Lambda(I) - a log Lambda(I), Lambda' by central
/// differences over I - 1 and I + 1. Throws Error(BoundaryPoint) unless both
/// neighbours are in the profile, Error(NonpositiveEigenvalue) for Lambda <= 0.
double critical_condition_residual(const GapProfile& profile, std::size_t at_i);

struct IdhEntry {
  std::size_t intracore_steps = 0;
  double idh = 0.0;
  double dh = 0.0;
  std::size_t n_samples = 0;
};

struct IdhProfile {
  std::vector<IdhEntry> entries;
  std::size_t n_layers = 0;
  CircuitConfig config;
};

/// Per I, runs `ensemble_size` circuits (circuit i seeded from the master
/// seed and i, for every I) and compares their Lorenz statistics with `haar`.
IdhProfile scan_idh(const CircuitConfig& base, std::span<const std::size_t> i_values, std::size_t ensemble_size,
                    const EnsembleStats& haar, std::size_t threads = 1, const Caps& caps = {});

struct MinimaComparison {
  std::size_t i_star_gap = 0;
  std::size_t i_star_idh = 0;
  std::size_t difference = 0;
};

/// Minima of 1 - Delta and ID_H over the I values both profiles share
/// (ties toward smaller I). Throws Error(NoOverlap) if they share none.
MinimaComparison compare_minima(const GapProfile& gap, const IdhProfile& idh);

}  // namespace coregap
