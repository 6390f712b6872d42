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

#include <algorithm>
#include <cctype>

#include "coregap/error.hpp"

namespace coregap {

std::string_view to_string(TopologyKind kind) noexcept {
  switch (kind) {
    case TopologyKind::Linear: return "linear";
    case TopologyKind::Ring: return "ring";
    case TopologyKind::Star: return "star";
    case TopologyKind::Full: return "full";
  }
  return "unknown";
}

TopologyKind parse_topology(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lowered == "linear") return TopologyKind::Linear;
  if (lowered == "ring") return TopologyKind::Ring;
  if (lowered == "star") return TopologyKind::Star;
  if (lowered == "full" || lowered == "fully-connected") return TopologyKind::Full;
  fail(Errc::ParseError, "unknown topology '" + std::string(text) +
                             "' (expected linear, ring, star or full)");
}

LinkSet::LinkSet(TopologyKind kind, std::size_t n_cores, std::vector<Link> links)
    : kind_(kind), n_cores_(n_cores), links_(std::move(links)) {
  for (const Link& link : links_) {
    if (link.first >= link.second || link.second >= n_cores_) {
      fail(Errc::InvalidLink, "link (" + std::to_string(link.first) + "," +
                                  std::to_string(link.second) + ") is not a valid core pair");
    }
  }
  if (!std::is_sorted(links_.begin(), links_.end()) ||
      std::adjacent_find(links_.begin(), links_.end()) != links_.end()) {
    fail(Errc::InvalidLink, "links must be sorted and unique");
  }
}

bool LinkSet::connects(std::size_t core_a, std::size_t core_b) const noexcept {
  const Link key{std::min(core_a, core_b), std::max(core_a, core_b)};
  return std::binary_search(links_.begin(), links_.end(), key);
}

std::size_t expected_link_count(TopologyKind kind, std::size_t n_cores) noexcept {
  switch (kind) {
    case TopologyKind::Linear: return n_cores - 1;
    case TopologyKind::Ring: return n_cores;
    case TopologyKind::Star: return n_cores - 1;
    case TopologyKind::Full: return n_cores * (n_cores - 1) / 2;
  }
  return 0;
}

LinkSet build_topology(TopologyKind kind, std::size_t n_cores) {
  if (n_cores < 2) {
    fail(Errc::InvalidCoreCount, std::string(to_string(kind)) + " topology needs at least 2 cores, got " +
                                     std::to_string(n_cores));
  }
  if (kind == TopologyKind::Ring && n_cores < 3) {
    fail(Errc::InvalidCoreCount,
         "ring topology needs at least 3 cores; with 2 cores the closing link duplicates (0,1)");
  }
  std::vector<Link> links;
  switch (kind) {
    case TopologyKind::Linear:
      for (std::size_t c = 0; c + 1 < n_cores; ++c) links.push_back({c, c + 1});
      break;
    case TopologyKind::Ring:
      for (std::size_t c = 0; c + 1 < n_cores; ++c) links.push_back({c, c + 1});
      links.push_back({0, n_cores - 1});
      break;
    case TopologyKind::Star:
      for (std::size_t c = 1; c < n_cores; ++c) links.push_back({0, c});
      break;
    case TopologyKind::Full:
      for (std::size_t a = 0; a < n_cores; ++a)
        for (std::size_t b = a + 1; b < n_cores; ++b) links.push_back({a, b});
      break;
  }
  std::sort(links.begin(), links.end());
  return LinkSet(kind, n_cores, std::move(links));
}

}  // namespace coregap
