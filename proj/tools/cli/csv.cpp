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


#include "cli/csv.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "coregap/error.hpp"

namespace coregap::cli {
namespace {

constexpr std::string_view kSchemaVersion = "v1";

std::string schema_line(std::string_view command) {
  return "# coregap " + std::string(command) + " " + std::string(kSchemaVersion) + "\n";
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
  fail(Errc::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

template <class T>
T field(std::string_view text, const std::string& source, std::size_t line, std::string_view column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    parse_fail(source, line, "bad value '" + std::string(text) + "' in column " + std::string(column));
  }
  return value;
}

// Yields (line number, fields) for every data row after checking the schema
// comment and column header.
template <class Row>
void for_each_row(std::string_view text, std::string_view command, std::string_view header,
                  const std::string& source, Row&& row) {
  const std::vector<std::string_view> columns = split(header);
  std::size_t line_no = 0;
  bool seen_schema = false;
  bool seen_header = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!seen_schema) {
      const std::string expected = schema_line(command);
      if (std::string(line) + "\n" != expected) {
        parse_fail(source, line_no, "expected schema line '" + expected.substr(0, expected.size() - 1) + "'");
      }
      seen_schema = true;
      continue;
    }
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) parse_fail(source, line_no, "expected column header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    const std::vector<std::string_view> fields = split(line);
    if (fields.size() != columns.size()) {
      parse_fail(source, line_no,
                 "expected " + std::to_string(columns.size()) + " fields, got " + std::to_string(fields.size()));
    }
    row(line_no, fields, columns);
  }
  if (!seen_header) parse_fail(source, line_no, "missing column header");
}

}  // namespace

std::string gap_csv(const GapProfile& p) {
  std::string out = schema_line("gap-scan");
  out += kGapCsvHeader;
  out += '\n';
  const CircuitConfig& c = p.config;
  const std::string prefix = std::string(to_string(c.topology)) + "," + std::to_string(c.n_cores) + "," +
                             std::to_string(c.n_qubits_per_core) + "," + format_double(c.p_single) + "," +
                             format_double(c.c_rand) + ",";
  for (const GapEntry& e : p.entries) {
    out += prefix + std::to_string(e.intracore_steps) + "," + std::to_string(e.depth) + "," + format_double(e.lambda) +
           "," + format_double(e.delta) + "," + format_double(1.0 - e.delta) + "\n";
  }
  return out;
}

std::string ensemble_csv(const IdhProfile& p) {
  std::string out = schema_line("ensemble-scan");
  out += kEnsembleCsvHeader;
  out += '\n';
  const CircuitConfig& c = p.config;
  const std::string prefix = std::string(to_string(c.topology)) + "," + std::to_string(c.n_cores) + "," +
                             std::to_string(c.n_qubits_per_core) + "," + format_double(c.p_single) + ",";
  for (const IdhEntry& e : p.entries) {
    out += prefix + std::to_string(e.intracore_steps) + "," + std::to_string(p.n_layers) + "," +
           std::to_string(e.n_samples) + "," + format_double(e.idh) + "," + format_double(e.dh) + "\n";
  }
  return out;
}

GapProfile parse_gap_csv(std::string_view text, const std::string& source) {
  GapProfile p;
  bool first = true;
  for_each_row(text, "gap-scan", kGapCsvHeader, source,
               [&](std::size_t line, const std::vector<std::string_view>& f, const std::vector<std::string_view>& col) {
                 CircuitConfig c;
                 try {
                   c.topology = parse_topology(f[0]);
                 } catch (const Error&) {
                   parse_fail(source, line, "unknown topology '" + std::string(f[0]) + "'");
                 }
                 c.n_cores = field<std::size_t>(f[1], source, line, col[1]);
                 c.n_qubits_per_core = field<std::size_t>(f[2], source, line, col[2]);
                 c.p_single = field<double>(f[3], source, line, col[3]);
                 c.c_rand = field<double>(f[4], source, line, col[4]);
                 GapEntry e;
                 e.intracore_steps = field<std::size_t>(f[5], source, line, col[5]);
                 e.depth = field<std::size_t>(f[6], source, line, col[6]);
                 e.lambda = field<double>(f[7], source, line, col[7]);
                 e.delta = field<double>(f[8], source, line, col[8]);
                 const std::size_t a = c.n_cores;
                 if (e.depth < a * e.intracore_steps) parse_fail(source, line, "D is smaller than n_cores * I");
                 const std::size_t b = e.depth - a * e.intracore_steps;
                 if (first) {
                   p.config = c;
                   p.a = a;
                   p.b = b;
                   first = false;
                 } else if (c.topology != p.config.topology || c.n_cores != p.config.n_cores ||
                            c.n_qubits_per_core != p.config.n_qubits_per_core || c.p_single != p.config.p_single ||
                            c.c_rand != p.config.c_rand || b != p.b) {
                   parse_fail(source, line, "row describes a different architecture than the first row");
                 }
                 if (!p.entries.empty() && e.intracore_steps <= p.entries.back().intracore_steps) {
                   parse_fail(source, line, "I values must be strictly increasing");
                 }
                 p.entries.push_back(std::move(e));
               });
  return p;
}

IdhProfile parse_ensemble_csv(std::string_view text, const std::string& source) {
  IdhProfile p;
  bool first = true;
  for_each_row(text, "ensemble-scan", kEnsembleCsvHeader, source,
               [&](std::size_t line, const std::vector<std::string_view>& f, const std::vector<std::string_view>& col) {
                 CircuitConfig c;
                 try {
                   c.topology = parse_topology(f[0]);
                 } catch (const Error&) {
                   parse_fail(source, line, "unknown topology '" + std::string(f[0]) + "'");
                 }
                 c.n_cores = field<std::size_t>(f[1], source, line, col[1]);
                 c.n_qubits_per_core = field<std::size_t>(f[2], source, line, col[2]);
                 c.p_single = field<double>(f[3], source, line, col[3]);
                 IdhEntry e;
                 e.intracore_steps = field<std::size_t>(f[4], source, line, col[4]);
                 const auto layers = field<std::size_t>(f[5], source, line, col[5]);
                 e.n_samples = field<std::size_t>(f[6], source, line, col[6]);
                 e.idh = field<double>(f[7], source, line, col[7]);
                 e.dh = field<double>(f[8], source, line, col[8]);
                 if (first) {
                   c.n_layers = layers;
                   p.config = c;
                   p.n_layers = layers;
                   first = false;
                 } else if (c.topology != p.config.topology || c.n_cores != p.config.n_cores ||
                            c.n_qubits_per_core != p.config.n_qubits_per_core || c.p_single != p.config.p_single ||
                            layers != p.n_layers) {
                   parse_fail(source, line, "row describes a different architecture than the first row");
                 }
                 if (!p.entries.empty() && e.intracore_steps <= p.entries.back().intracore_steps) {
                   parse_fail(source, line, "I values must be strictly increasing");
                 }
                 p.entries.push_back(e);
               });
  return p;
}

}  // namespace coregap::cli
