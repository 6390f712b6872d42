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


#include "coregap/topology.hpp"

#include <gtest/gtest.h>

#include "coregap/error.hpp"

using namespace coregap;

TEST(topology, linear) {
  const LinkSet s = build_topology(TopologyKind::Linear, 4);
  ASSERT_EQ(s.links(), (std::vector<Link>{{0, 1}, {1, 2}, {2, 3}}));
  ASSERT_EQ(s.n_links(), 3u);
}

TEST(topology, ring_of_three) {
  const LinkSet s = build_topology(TopologyKind::Ring, 3);
  ASSERT_EQ(s.links(), (std::vector<Link>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(topology, ring_of_two_is_rejected) {
  try {
    build_topology(TopologyKind::Ring, 2);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::InvalidCoreCount);
    ASSERT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(topology, full_and_star) {
  ASSERT_EQ(build_topology(TopologyKind::Full, 4).n_links(), 6u);
  ASSERT_EQ(build_topology(TopologyKind::Full, 3).n_links(), 3u);
  const LinkSet star = build_topology(TopologyKind::Star, 4);
  ASSERT_EQ(star.links(), (std::vector<Link>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(topology, counts_match_kind) {
  for (auto kind : {TopologyKind::Linear, TopologyKind::Ring, TopologyKind::Star, TopologyKind::Full}) {
    for (std::size_t nc = 3; nc <= 7; ++nc) {
      const LinkSet s = build_topology(kind, nc);
      ASSERT_EQ(s.n_links(), expected_link_count(kind, nc));
      for (std::size_t k = 0; k < s.n_links(); ++k) {
        ASSERT_LT(s.links()[k].first, s.links()[k].second);
        ASSERT_LT(s.links()[k].second, nc);
        if (k > 0) ASSERT_LT(s.links()[k - 1], s.links()[k]);
      }
    }
  }
}

TEST(topology, too_few_cores) {
  ASSERT_THROW(build_topology(TopologyKind::Linear, 1), Error);
  ASSERT_THROW(build_topology(TopologyKind::Full, 0), Error);
}

TEST(topology, parse) {
  ASSERT_EQ(parse_topology("star"), TopologyKind::Star);
  ASSERT_EQ(parse_topology("Full"), TopologyKind::Full);
  ASSERT_EQ(parse_topology("fully-connected"), TopologyKind::Full);
  ASSERT_THROW(parse_topology("mesh"), Error);
}

TEST(topology, link_set_rejects_duplicates) {
  ASSERT_THROW(LinkSet(TopologyKind::Linear, 3, {{0, 1}, {0, 1}}), Error);
  ASSERT_THROW(LinkSet(TopologyKind::Linear, 3, {{1, 0}}), Error);
  ASSERT_THROW(LinkSet(TopologyKind::Linear, 3, {{0, 3}}), Error);
}
