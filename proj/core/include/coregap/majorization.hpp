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
#include <functional>
#include <span>
#include <vector>

#include "coregap/statevector.hpp"

namespace coregap {

/// Lorenz curve F(k) = sum of the k largest probabilities, k = 1..M.
struct CumulantCurve {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Per-k population mean and standard deviation over an ensemble of curves.
struct EnsembleStats {
  std::vector<double> mean;
  std::vector<double> std;
  std::size_t n_samples = 0;

  std::size_t size() const noexcept { return mean.size(); }
  friend bool operator==(const EnsembleStats&, const EnsembleStats&) = default;
};

enum class Majorization { QMajorizesP, PMajorizesQ, Equal, Incomparable };

/// Sorts descending and prefix-sums.
CumulantCurve lorenz_cumulants(const ProbVector& p);

/// Compares p and q through their partial sums for k < M. Partial sums
/// within 1e-12 count as equal. Throws Error(LengthMismatch) or
/// Error(NotNormalized) (sums off by more than 1e-9, or negative entries).
Majorization majorizes(const ProbVector& p, const ProbVector& q);

/// Streaming per-k mean/variance accumulator (Welford, with Chan's merge).
/// Merging accumulators in a fixed order gives results independent of how
/// samples were distributed over workers.
class CumulantAccumulator {
 public:
  explicit CumulantAccumulator(std::size_t length = 0);

  void add(const CumulantCurve& curve);
  void merge(const CumulantAccumulator& other);

  std::size_t count() const noexcept { return count_; }
  std::size_t length() const noexcept { return mean_.size(); }

  /// Population statistics (divisor N). Throws Error(TooFewSamples) if count < 2.
  EnsembleStats stats() const;

 private:
  std::size_t count_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

/// Throws Error(TooFewSamples) for fewer than 2 curves and
/// Error(LengthMismatch) for ragged input.
EnsembleStats ensemble_cumulant_stats(std::span<const CumulantCurve> curves);

/// D_H = sqrt(sum_k (std_U(k) - std_H(k))^2).
double distance_haar_std(const EnsembleStats& circuit_stats, const EnsembleStats& haar_stats);

/// ID_H = (1/M) sum_k (mean_U(k) - mean_H(k)). Signed; normalized by the
/// curve length M = 2^n so values are comparable across qubit counts.
double integral_distance_haar(const EnsembleStats& circuit_stats, const EnsembleStats& haar_stats);

/// Chunk size used by every ensemble reduction in the library.
inline constexpr std::size_t kEnsembleChunk = 64;

/// Lorenz-curve statistics of `n_samples` probability vectors produced by
/// sample(i), i = 0..n_samples-1. Samples are reduced in fixed chunks of
/// kEnsembleChunk and merged in chunk order, so the result is bit-identical
/// for any thread count. Throws Error(TooFewSamples) if n_samples < 2.
EnsembleStats ensemble_stats_parallel(std::size_t n_samples, std::size_t threads,
                                      const std::function<ProbVector(std::size_t)>& sample);

}  // namespace coregap
