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


#include "cli/manifest.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>

#include <openssl/evp.h>

#include "coregap/error.hpp"

namespace coregap::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail(Errc::Io, "SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : parse_config_text(format_config_text(m.config))) config[key] = value;
  nlohmann::json outputs = nlohmann::json::array();
  for (const OutputDigest& o : m.outputs) outputs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  return {
      {"tool", "coregap"},
      {"version", std::string(kToolVersion)},
      {"command", m.command},
      {"config", config},
      {"arguments", m.arguments},
      {"seeds", {{"master_seed", m.config.master_seed}}},
      {"started_utc", m.started_utc},
      {"finished_utc", m.finished_utc},
      {"outputs", outputs},
  };
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  try {
    RunManifest m;
    if (j.at("tool").get<std::string>() != "coregap") fail(Errc::ParseError, "manifest was not written by coregap");
    m.command = j.at("command").get<std::string>();
    ConfigValues values;
    for (const auto& [key, value] : j.at("config").items()) values.emplace(key, value.get<std::string>());
    m.config = config_from_values(values);
    m.arguments = j.at("arguments");
    m.started_utc = j.value("started_utc", "");
    m.finished_utc = j.value("finished_utc", "");
    for (const auto& o : j.at("outputs")) {
      m.outputs.push_back({o.at("path").get<std::string>(), o.at("sha256").get<std::string>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("malformed manifest: ") + e.what());
  }
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  return output.string() + ".manifest.json";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace coregap::cli
