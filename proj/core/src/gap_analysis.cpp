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


#include "coregap/gap_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coregap/error.hpp"
#include "coregap/parallel.hpp"
#include "coregap/statevector.hpp"
#include "coregap/topology.hpp"

namespace coregap {
namespace {

void check_i_values(std::span<const std::size_t> i_values) {
  if (i_values.empty()) fail(Errc::InvalidConfig, "I list is empty");
  for (std::size_t k = 1; k < i_values.size(); ++k)
    if (i_values[k] <= i_values[k - 1]) fail(Errc::InvalidConfig, "I list must be strictly increasing");
}

const GapEntry* find_entry(const GapProfile& profile, std::size_t i) {
  for (const GapEntry& e : profile.entries)
    if (e.intracore_steps == i) return &e;
  return nullptr;
}

}  // namespace

GapProfile scan_gap(const CircuitConfig& base, std::span<const std::size_t> i_values, const GapScanOptions& options) {
  check_i_values(i_values);
  validate(base);
  GapProfile profile;
  profile.config = base;
  profile.a = base.n_cores;
  profile.b = effective_link_count(base, options.markov);
  profile.entries.resize(i_values.size());
  parallel_for(i_values.size(), options.threads, [&](std::size_t k) {
    CircuitConfig config = base;
    config.intracore_steps = i_values[k];
    const ReducedOperator op = build_total_operator(config, options.markov);
    const SpectrumResult s = subleading_eigenvalue(op, options.eigen);
    GapEntry& e = profile.entries[k];
    e.intracore_steps = i_values[k];
    e.lambda = std::min(s.lambda, 1.0);
    e.depth = profile.a * i_values[k] + profile.b;
    e.delta = normalized_gap(e.lambda, e.depth);
    e.complex_flag = s.complex_flag;
    e.leading = s.leading;
  });
  return profile;
}

Optimum find_optimal_I(const GapProfile& profile) {
  const auto& entries = profile.entries;
  if (entries.size() < 3) fail(Errc::TooFewPoints, "need at least 3 scan points, got " + std::to_string(entries.size()));
  std::size_t best = 0;
  for (std::size_t k = 1; k < entries.size(); ++k)
    if (entries[k].delta > entries[best].delta + kOptimumTieTolerance) best = k;
  return {entries[best].intracore_steps, entries[best].delta, best != 0 && best + 1 != entries.size()};
}

DecayFit fit_exponential_decay(const GapProfile& profile) {
  const auto& entries = profile.entries;
  if (entries.size() < 3) fail(Errc::TooFewPoints, "need at least 3 scan points, got " + std::to_string(entries.size()));
  const auto n = static_cast<double>(entries.size());
  double sx = 0.0;
  double sy = 0.0;
  for (const GapEntry& e : entries) {
    if (!(e.lambda > 0.0)) {
      fail(Errc::NonpositiveEigenvalue, "lambda at I = " + std::to_string(e.intracore_steps) + " is not positive");
    }
    sx += static_cast<double>(e.intracore_steps);
    sy += std::log(e.lambda);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const GapEntry& e : entries) {
    const double dx = static_cast<double>(e.intracore_steps) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e.lambda) - my);
  }
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (const GapEntry& e : entries) {
    const double r = std::log(e.lambda) - (fit.slope * static_cast<double>(e.intracore_steps) + fit.intercept);
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(r));
  }
  fit.kappa = profile.a > 0 ? -fit.slope / static_cast<double>(profile.a) : 0.0;
  fit.prefactor = std::exp(fit.intercept);
  return fit;
}

double critical_condition_residual(const GapProfile& profile, std::size_t at_i) {
  const GapEntry* here = find_entry(profile, at_i);
  const GapEntry* lo = at_i > 0 ? find_entry(profile, at_i - 1) : nullptr;
  const GapEntry* hi = find_entry(profile, at_i + 1);
  if (here == nullptr || lo == nullptr || hi == nullptr) {
    fail(Errc::BoundaryPoint, "I = " + std::to_string(at_i) + " needs both neighbours in the profile");
  }
  if (!(here->lambda > 0.0)) fail(Errc::NonpositiveEigenvalue, "lambda at I = " + std::to_string(at_i) + " is not positive");
  const double a = static_cast<double>(profile.a);
  const double b = static_cast<double>(profile.b);
  const double derivative = (hi->lambda - lo->lambda) / 2.0;
  return (a * static_cast<double>(at_i) + b) * derivative / here->lambda - a * std::log(here->lambda);
}

IdhProfile scan_idh(const CircuitConfig& base, std::span<const std::size_t> i_values, std::size_t ensemble_size,
                    const EnsembleStats& haar, std::size_t threads, const Caps& caps) {
  check_i_values(i_values);
  validate(base);
  check_statevector_cap(base, caps);
  if (haar.size() != (std::size_t{1} << base.n_qubits())) {
    fail(Errc::LengthMismatch, "Haar reference is for a different qubit count");
  }
  IdhProfile profile;
  profile.config = base;
  profile.n_layers = base.n_layers;
  for (std::size_t i : i_values) {
    CircuitConfig config = base;
    config.intracore_steps = i;
    config.ensemble_size = ensemble_size;
    const EnsembleStats stats = ensemble_stats_parallel(
        ensemble_size, threads, [&](std::size_t idx) { return run_circuit(config, idx, caps); });
    profile.entries.push_back({i, integral_distance_haar(stats, haar), distance_haar_std(stats, haar), ensemble_size});
  }
  return profile;
}

MinimaComparison compare_minima(const GapProfile& gap, const IdhProfile& idh) {
  bool found = false;
  MinimaComparison out;
  double best_gap = 0.0;
  double best_idh = 0.0;
  for (const IdhEntry& e : idh.entries) {
    const GapEntry* g = find_entry(gap, e.intracore_steps);
    if (g == nullptr) continue;
    const double one_minus = 1.0 - g->delta;
    if (!found) {
      found = true;
      out.i_star_gap = out.i_star_idh = e.intracore_steps;
      best_gap = one_minus;
      best_idh = e.idh;
      continue;
    }
    if (one_minus < best_gap - kOptimumTieTolerance) {
      best_gap = one_minus;
      out.i_star_gap = e.intracore_steps;
    }
    if (e.idh < best_idh) {
      best_idh = e.idh;
      out.i_star_idh = e.intracore_steps;
    }
  }
  if (!found) fail(Errc::NoOverlap, "gap and ID_H profiles share no I values");
  out.difference = out.i_star_gap > out.i_star_idh ? out.i_star_gap - out.i_star_idh : out.i_star_idh - out.i_star_gap;
  return out;
}

}  // namespace coregap
