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

#include <gtest/gtest.h>

#include <cmath>

#include "coregap/error.hpp"
#include "coregap/haar_reference.hpp"

using namespace coregap;

namespace {

void expect_curve(const CumulantCurve& c, const std::vector<double>& v) {
  ASSERT_EQ(c.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_NEAR(c.values[i], v[i], 1e-15);
}

}  // namespace

TEST(majorization, lorenz_cumulants) {
  expect_curve(lorenz_cumulants({{0.25, 0.25, 0.25, 0.25}}), {0.25, 0.5, 0.75, 1.0});
  expect_curve(lorenz_cumulants({{0.0, 0.0, 1.0, 0.0}}), {1.0, 1.0, 1.0, 1.0});
  expect_curve(lorenz_cumulants({{0.2, 0.5, 0.3}}), {0.5, 0.8, 1.0});
}

TEST(majorization, lorenz_dominates_uniform_line) {
  RngStream rng(1);
  for (int t = 0; t < 50; ++t) {
    const CumulantCurve c = lorenz_cumulants(sample_haar_state_probs(rng, 4));
    for (std::size_t k = 0; k < c.size(); ++k) {
      ASSERT_GE(c.values[k], static_cast<double>(k + 1) / 16.0 - 1e-12);
      if (k > 0) ASSERT_GE(c.values[k], c.values[k - 1]);
    }
    ASSERT_NEAR(c.values.back(), 1.0, 1e-9);
  }
}

TEST(majorization, majorizes) {
  const ProbVector uniform{{0.25, 0.25, 0.25, 0.25}};
  const ProbVector point{{1.0, 0.0, 0.0, 0.0}};
  ASSERT_EQ(majorizes(uniform, point), Majorization::QMajorizesP);
  ASSERT_EQ(majorizes(point, uniform), Majorization::PMajorizesQ);
  ASSERT_EQ(majorizes(uniform, uniform), Majorization::Equal);
  ASSERT_EQ(majorizes({{0.6, 0.2, 0.2}}, {{0.5, 0.5, 0.0}}), Majorization::Incomparable);
}

TEST(majorization, majorizes_matches_curve_comparison) {
  RngStream rng(2);
  for (int t = 0; t < 200; ++t) {
    const ProbVector p = sample_haar_state_probs(rng, 2);
    const ProbVector q = sample_haar_state_probs(rng, 2);
    const CumulantCurve cp = lorenz_cumulants(p);
    const CumulantCurve cq = lorenz_cumulants(q);
    bool q_above = true;
    bool p_above = true;
    for (std::size_t k = 0; k < cp.size(); ++k) {
      q_above &= cq.values[k] >= cp.values[k] - 1e-12;
      p_above &= cp.values[k] >= cq.values[k] - 1e-12;
    }
    const Majorization m = majorizes(p, q);
    ASSERT_EQ(m == Majorization::QMajorizesP || m == Majorization::Equal, q_above);
    ASSERT_EQ(m == Majorization::PMajorizesQ || m == Majorization::Equal, p_above);
    const Majorization back = majorizes(q, p);
    if (m == Majorization::QMajorizesP) ASSERT_EQ(back, Majorization::PMajorizesQ);
    if (m == Majorization::Incomparable) ASSERT_EQ(back, Majorization::Incomparable);
  }
}

TEST(majorization, majorizes_errors) {
  try {
    majorizes({{0.5, 0.5}}, {{1.0, 0.0, 0.0}});
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::LengthMismatch);
  }
  try {
    majorizes({{0.5, 0.4}}, {{1.0, 0.0}});
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::NotNormalized);
  }
}

TEST(majorization, ensemble_stats) {
  const std::vector<CumulantCurve> same{{{0.5, 1.0}}, {{0.5, 1.0}}};
  const EnsembleStats s = ensemble_cumulant_stats(same);
  ASSERT_EQ(s.std[0], 0.0);
  ASSERT_EQ(s.std[1], 0.0);

  const std::vector<CumulantCurve> two{{{0.5, 1.0}}, {{1.0, 1.0}}};
  const EnsembleStats t = ensemble_cumulant_stats(two);
  ASSERT_NEAR(t.mean[0], 0.75, 1e-15);
  ASSERT_NEAR(t.mean[1], 1.0, 1e-15);
  ASSERT_NEAR(t.std[0], 0.25, 1e-15);
  ASSERT_NEAR(t.std[1], 0.0, 1e-15);

  const std::vector<CumulantCurve> one{{{1.0}}};
  try {
    ensemble_cumulant_stats(one);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::TooFewSamples);
  }
}

TEST(majorization, accumulator_merge_matches_single_pass) {
  RngStream rng(3);
  std::vector<CumulantCurve> curves;
  for (int i = 0; i < 300; ++i) curves.push_back(lorenz_cumulants(sample_haar_state_probs(rng, 3)));
  CumulantAccumulator all(8);
  for (const auto& c : curves) all.add(c);
  CumulantAccumulator a(8);
  CumulantAccumulator b(8);
  for (std::size_t i = 0; i < curves.size(); ++i) (i < 100 ? a : b).add(curves[i]);
  a.merge(b);
  const EnsembleStats x = all.stats();
  const EnsembleStats y = a.stats();
  for (std::size_t k = 0; k < 8; ++k) {
    ASSERT_NEAR(x.mean[k], y.mean[k], 1e-14);
    ASSERT_NEAR(x.std[k], y.std[k], 1e-14);
  }
}

TEST(majorization, parallel_stats_independent_of_threads) {
  const auto sample = [](std::size_t i) {
    RngStream rng(9, i);
    return sample_haar_state_probs(rng, 4);
  };
  const EnsembleStats one = ensemble_stats_parallel(1000, 1, sample);
  ASSERT_EQ(one, ensemble_stats_parallel(1000, 3, sample));
  ASSERT_EQ(one, ensemble_stats_parallel(1000, 8, sample));
  ASSERT_THROW(ensemble_stats_parallel(1, 1, sample), Error);
}

TEST(majorization, haar_ensemble_endpoints) {
  const EnsembleStats s = haar_reference(8, 5000, 1);
  ASSERT_LT(s.std.back(), 1e-12);
  ASSERT_NEAR(s.mean.back(), 1.0, 1e-12);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) ASSERT_GT(s.std[k], 0.0);
}

TEST(majorization, distance_haar_std) {
  EnsembleStats h{{0.5, 1.0, 1.0}, {0.1, 0.2, 0.0}, 10};
  ASSERT_EQ(distance_haar_std(h, h), 0.0);
  EnsembleStats u = h;
  u.std[1] += 0.1;
  ASSERT_NEAR(distance_haar_std(u, h), 0.1, 1e-15);
  EnsembleStats bad{{1.0}, {0.0}, 10};
  ASSERT_THROW(distance_haar_std(bad, h), Error);
}

TEST(majorization, integral_distance_haar) {
  EnsembleStats h{{0.3, 0.6, 0.8, 1.0}, {0.0, 0.0, 0.0, 0.0}, 10};
  ASSERT_EQ(integral_distance_haar(h, h), 0.0);
  EnsembleStats u = h;
  for (double& m : u.mean) m += 0.2;
  ASSERT_NEAR(integral_distance_haar(u, h), 0.2, 1e-15);
}

TEST(majorization, deterministic_state_vs_haar) {
  const EnsembleStats haar = haar_reference(2, 20000, 4);
  EnsembleStats point{{1.0, 1.0, 1.0, 1.0}, {0.0, 0.0, 0.0, 0.0}, 20000};
  double expect = 0.0;
  for (double f : haar.mean) expect += (1.0 - f) / 4.0;
  ASSERT_GT(expect, 0.0);
  ASSERT_NEAR(integral_distance_haar(point, haar), expect, 1e-15);
}

TEST(majorization, haar_self_distance_is_small) {
  const EnsembleStats a = haar_reference(6, 2000, 1);
  const EnsembleStats b = haar_reference(6, 2000, 2);
  const double floor = distance_haar_std(a, b);
  ASSERT_GT(floor, 0.0);
  ASSERT_LT(floor, 0.05);
  ASSERT_LT(std::abs(integral_distance_haar(a, b)), 0.01);
}
