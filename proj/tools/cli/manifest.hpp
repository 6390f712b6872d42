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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coregap/config.hpp"

namespace coregap::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

struct OutputDigest {
  std::string path;
  std::string sha256;
};

/// Everything needed to re-run a command: the command name, its resolved
/// configuration and the remaining arguments that shaped the output.
struct RunManifest {
  std::string command;
  CircuitConfig config;
  nlohmann::json arguments = nlohmann::json::object();
  std::string started_utc;
  std::string finished_utc;
  std::vector<OutputDigest> outputs;
};

nlohmann::json to_json(const RunManifest& manifest);

/// Throws Error(ParseError) for missing or mistyped fields.
RunManifest manifest_from_json(const nlohmann::json& j);

/// "<output>.manifest.json" next to the output file.
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace coregap::cli
