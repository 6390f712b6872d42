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

#include "coregap/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "coregap/error.hpp"
#include "coregap/parallel.hpp"

namespace coregap {
namespace {

void check_same_length(std::size_t a, std::size_t b) {
  if (a != b) fail(Errc::LengthMismatch, "lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

CumulantCurve lorenz_cumulants(const ProbVector& p) {
  std::vector<double> sorted = p.probs;
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  CumulantCurve curve;
  curve.values.resize(sorted.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    acc += sorted[k];
    curve.values[k] = acc;
  }
  return curve;
}

Majorization majorizes(const ProbVector& p, const ProbVector& q) {
  check_same_length(p.size(), q.size());
  check_normalized(p, 1e-9);
  check_normalized(q, 1e-9);
  constexpr double kTie = 1e-12;
  const CumulantCurve fp = lorenz_cumulants(p);
  const CumulantCurve fq = lorenz_cumulants(q);
  bool q_above = true;
  bool p_above = true;
  for (std::size_t k = 0; k + 1 < fp.size(); ++k) {
    const double d = fq.values[k] - fp.values[k];
    if (d < -kTie) q_above = false;
    if (d > kTie) p_above = false;
  }
  if (q_above && p_above) return Majorization::Equal;
  if (q_above) return Majorization::QMajorizesP;
  if (p_above) return Majorization::PMajorizesQ;
  return Majorization::Incomparable;
}

CumulantAccumulator::CumulantAccumulator(std::size_t length) : mean_(length, 0.0), m2_(length, 0.0) {}

void CumulantAccumulator::add(const CumulantCurve& curve) {
  if (count_ == 0 && mean_.empty()) {
    mean_.assign(curve.size(), 0.0);
    m2_.assign(curve.size(), 0.0);
  }
  check_same_length(curve.size(), mean_.size());
  ++count_;
  const double inv = 1.0 / static_cast<double>(count_);
  for (std::size_t k = 0; k < mean_.size(); ++k) {
    const double delta = curve.values[k] - mean_[k];
    mean_[k] += delta * inv;
    m2_[k] += delta * (curve.values[k] - mean_[k]);
  }
}

void CumulantAccumulator::merge(const CumulantAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  check_same_length(other.mean_.size(), mean_.size());
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  for (std::size_t k = 0; k < mean_.size(); ++k) {
    const double delta = other.mean_[k] - mean_[k];
    mean_[k] += delta * nb / n;
    m2_[k] += other.m2_[k] + delta * delta * na * nb / n;
  }
  count_ += other.count_;
}

EnsembleStats CumulantAccumulator::stats() const {
  if (count_ < 2) fail(Errc::TooFewSamples, "ensemble statistics need at least 2 samples, got " + std::to_string(count_));
  EnsembleStats s;
  s.n_samples = count_;
  s.mean = mean_;
  s.std.resize(m2_.size());
  const double inv = 1.0 / static_cast<double>(count_);
  for (std::size_t k = 0; k < m2_.size(); ++k) s.std[k] = std::sqrt(std::max(0.0, m2_[k] * inv));
  return s;
}

EnsembleStats ensemble_cumulant_stats(std::span<const CumulantCurve> curves) {
  if (curves.size() < 2) {
    fail(Errc::TooFewSamples, "ensemble statistics need at least 2 curves, got " + std::to_string(curves.size()));
  }
  CumulantAccumulator total(curves.front().size());
  for (std::size_t begin = 0; begin < curves.size(); begin += kEnsembleChunk) {
    CumulantAccumulator chunk(curves.front().size());
    const std::size_t end = std::min(curves.size(), begin + kEnsembleChunk);
    for (std::size_t i = begin; i < end; ++i) chunk.add(curves[i]);
    total.merge(chunk);
  }
  return total.stats();
}

EnsembleStats ensemble_stats_parallel(std::size_t n_samples, std::size_t threads,
                                      const std::function<ProbVector(std::size_t)>& sample) {
  if (n_samples < 2) {
    fail(Errc::TooFewSamples, "ensemble statistics need at least 2 samples, got " + std::to_string(n_samples));
  }
  const std::size_t n_chunks = (n_samples + kEnsembleChunk - 1) / kEnsembleChunk;
  std::vector<CumulantAccumulator> partial(n_chunks);
  parallel_for(n_chunks, threads, [&](std::size_t c) {
    const std::size_t end = std::min(n_samples, (c + 1) * kEnsembleChunk);
    for (std::size_t i = c * kEnsembleChunk; i < end; ++i) partial[c].add(lorenz_cumulants(sample(i)));
  });
  CumulantAccumulator total;
  for (const CumulantAccumulator& acc : partial) total.merge(acc);
  return total.stats();
}

double distance_haar_std(const EnsembleStats& circuit_stats, const EnsembleStats& haar_stats) {
  check_same_length(circuit_stats.size(), haar_stats.size());
  check_same_length(circuit_stats.std.size(), haar_stats.std.size());
  double s = 0.0;
  for (std::size_t k = 0; k < circuit_stats.std.size(); ++k) {
    const double d = circuit_stats.std[k] - haar_stats.std[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double integral_distance_haar(const EnsembleStats& circuit_stats, const EnsembleStats& haar_stats) {
  check_same_length(circuit_stats.size(), haar_stats.size());
  if (circuit_stats.size() == 0) fail(Errc::LengthMismatch, "empty statistics");
  double s = 0.0;
  for (std::size_t k = 0; k < circuit_stats.size(); ++k) s += circuit_stats.mean[k] - haar_stats.mean[k];
  return s / static_cast<double>(circuit_stats.size());
}

}  // namespace coregap
