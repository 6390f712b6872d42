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

#include "coregap/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "coregap/error.hpp"

namespace coregap {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    fail(Errc::ParseError, "invalid value '" + std::string(text) + "' for key '" + std::string(key) + "'");
  }
  return value;
}

std::size_t pow3(std::size_t n) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < n; ++i) d *= 3;
  return d;
}

constexpr std::string_view kKeys[] = {"n_cores", "n_qubits_per_core", "intracore_steps",
                                      "n_layers", "topology", "p_single",
                                      "c_rand", "master_seed", "ensemble_size"};

}  // namespace

void validate(const CircuitConfig& config) {
  if (config.n_cores < 2) fail(Errc::InvalidCoreCount, "n_cores must be >= 2");
  if (config.topology == TopologyKind::Ring && config.n_cores < 3) {
    fail(Errc::InvalidCoreCount, "ring topology needs n_cores >= 3 (two cores would duplicate the (0,1) link)");
  }
  if (config.n_qubits_per_core < 1) fail(Errc::InvalidConfig, "n_qubits_per_core must be >= 1");
  if (config.n_layers < 1) fail(Errc::InvalidConfig, "n_layers must be >= 1");
  if (config.ensemble_size < 1) fail(Errc::InvalidConfig, "ensemble_size must be >= 1");
  if (!(config.p_single >= 0.0 && config.p_single <= 1.0)) fail(Errc::InvalidConfig, "p_single must lie in [0,1]");
  if (!(config.c_rand >= -1.0 && config.c_rand <= 1.0)) fail(Errc::InvalidConfig, "c_rand must lie in [-1,1]");
  if (config.n_qubits_per_core == 1 && config.p_single < 1.0) {
    fail(Errc::DegenerateCore, "a one-qubit core has no intracore pair; p_single must be 1");
  }
}

void check_statevector_cap(const CircuitConfig& config, const Caps& caps) {
  if (config.n_qubits() > caps.max_statevector_qubits) {
    fail(Errc::CapExceeded, std::to_string(config.n_qubits()) + " qubits exceeds statevector cap " +
                                std::to_string(caps.max_statevector_qubits));
  }
}

void check_markov_cap(const CircuitConfig& config, const Caps& caps) {
  if (config.n_qubits() > 40 || pow3(config.n_qubits()) > caps.max_markov_dim) {
    fail(Errc::CapExceeded, "reduced dimension 3^" + std::to_string(config.n_qubits()) +
                                " exceeds Markov cap " + std::to_string(caps.max_markov_dim));
  }
}

ConfigValues parse_config_text(std::string_view text) {
  ConfigValues values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) fail(Errc::ParseError, "line " + std::to_string(line_no) + ": empty key");
    values.insert_or_assign(std::string(key), std::string(value));
  }
  return values;
}

ConfigValues read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config_text(buffer.str());
  } catch (const Error& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

CircuitConfig config_from_values(const ConfigValues& values, std::span<const std::string_view> required,
                                 CircuitConfig base) {
  for (std::string_view key : required) {
    if (!values.contains(key)) fail(Errc::InvalidConfig, "missing required config key '" + std::string(key) + "'");
  }
  for (const auto& [key, text] : values) {
    if (key == "n_cores") base.n_cores = parse_number<std::size_t>(key, text);
    else if (key == "n_qubits_per_core") base.n_qubits_per_core = parse_number<std::size_t>(key, text);
    else if (key == "intracore_steps") base.intracore_steps = parse_number<std::size_t>(key, text);
    else if (key == "n_layers") base.n_layers = parse_number<std::size_t>(key, text);
    else if (key == "topology") base.topology = parse_topology(text);
    else if (key == "p_single") base.p_single = parse_number<double>(key, text);
    else if (key == "c_rand") base.c_rand = parse_number<double>(key, text);
    else if (key == "master_seed") base.master_seed = parse_number<std::uint64_t>(key, text);
    else if (key == "ensemble_size") base.ensemble_size = parse_number<std::size_t>(key, text);
    else fail(Errc::InvalidConfig, "unknown config key '" + key + "'");
  }
  return base;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_config_text(const CircuitConfig& config) {
  std::string out;
  const auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append(" = ").append(value).push_back('\n');
  };
  static_assert(std::size(kKeys) == 9);
  line(kKeys[0], std::to_string(config.n_cores));
  line(kKeys[1], std::to_string(config.n_qubits_per_core));
  line(kKeys[2], std::to_string(config.intracore_steps));
  line(kKeys[3], std::to_string(config.n_layers));
  line(kKeys[4], std::string(to_string(config.topology)));
  line(kKeys[5], format_double(config.p_single));
  line(kKeys[6], format_double(config.c_rand));
  line(kKeys[7], std::to_string(config.master_seed));
  line(kKeys[8], std::to_string(config.ensemble_size));
  return out;
}

}  // namespace coregap
