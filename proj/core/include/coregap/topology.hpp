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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coregap {

/// Inter-core connectivity graph families.
enum class TopologyKind { Linear, Ring, Star, Full };

std::string_view to_string(TopologyKind kind) noexcept;

/// Parses "linear", "ring", "star" or "full" (case-insensitive).
/// Throws Error(ParseError) otherwise.
TopologyKind parse_topology(std::string_view text);

/// Undirected link between two cores, stored with first < second.
struct Link {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Canonical link list of one topology: lexicographically ascending,
/// duplicate-free. Star's hub is core 0.
class LinkSet {
 public:
  LinkSet() = default;
  LinkSet(TopologyKind kind, std::size_t n_cores, std::vector<Link> links);

  TopologyKind kind() const noexcept { return kind_; }
  std::size_t n_cores() const noexcept { return n_cores_; }
  std::size_t n_links() const noexcept { return links_.size(); }
  const std::vector<Link>& links() const noexcept { return links_; }

  bool connects(std::size_t core_a, std::size_t core_b) const noexcept;

 private:
  TopologyKind kind_ = TopologyKind::Linear;
  std::size_t n_cores_ = 0;
  std::vector<Link> links_;
};

/// Number of links a topology has on n_cores cores.
std::size_t expected_link_count(TopologyKind kind, std::size_t n_cores) noexcept;

/// Builds the canonical LinkSet. Requires n_cores >= 2, and >= 3 for Ring
/// (a two-core ring would repeat the (0,1) link). Throws Error(InvalidCoreCount).
LinkSet build_topology(TopologyKind kind, std::size_t n_cores);

}  // namespace coregap
