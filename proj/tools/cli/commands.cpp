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


#include "cli/commands.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/csv.hpp"
#include "cli/manifest.hpp"
#include "coregap/error.hpp"
#include "coregap/gap_analysis.hpp"
#include "coregap/haar_reference.hpp"
#include "coregap/topology.hpp"

namespace coregap::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultHaarSeed = 1000003;

struct ConfigFlags {
  std::string config_path;
  std::optional<std::string> topology;
  std::optional<std::string> cores;
  std::optional<std::string> qubits_per_core;
  std::optional<std::string> layers;
  std::optional<std::string> samples;
  std::optional<std::string> p_single;
  std::optional<std::string> c_rand;
  std::optional<std::string> seed;
};

struct ScanFlags {
  std::size_t i_min = 1;
  std::size_t i_max = 8;
  std::size_t threads = 1;
  std::string out;
};

void add_config_flags(CLI::App& cmd, ConfigFlags& f) {
  cmd.add_option("--config", f.config_path, "key = value config file")->check(CLI::ExistingFile);
  cmd.add_option("--topology", f.topology, "linear, ring, star or full")->type_name("KIND");
  cmd.add_option("--cores", f.cores, "number of cores")->type_name("UINT");
  cmd.add_option("--qubits-per-core", f.qubits_per_core, "qubits per core")->type_name("UINT");
  cmd.add_option("--p-single", f.p_single, "probability of a single-qubit intracore gate")->type_name("FLOAT");
  cmd.add_option("--c-rand", f.c_rand, "R(c) randomization parameter")->type_name("FLOAT");
  cmd.add_option("--seed", f.seed, "master seed")->type_name("UINT64");
}

void add_scan_flags(CLI::App& cmd, ScanFlags& f) {
  cmd.add_option("--i-min", f.i_min, "smallest intracore step count")->capture_default_str();
  cmd.add_option("--i-max", f.i_max, "largest intracore step count")->capture_default_str();
  cmd.add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--out", f.out, "output CSV; a manifest is written next to it (stdout when omitted)");
}

constexpr std::array<std::string_view, 3> kRequiredKeys{"topology", "n_cores", "n_qubits_per_core"};

// Config file first, then flags on top.
CircuitConfig resolve_config(const ConfigFlags& f) {
  ConfigValues values;
  if (!f.config_path.empty()) values = read_config_file(f.config_path);
  const auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (v) values.insert_or_assign(key, *v);
  };
  set("topology", f.topology);
  set("n_cores", f.cores);
  set("n_qubits_per_core", f.qubits_per_core);
  set("n_layers", f.layers);
  set("ensemble_size", f.samples);
  set("p_single", f.p_single);
  set("c_rand", f.c_rand);
  set("master_seed", f.seed);
  for (std::string_view key : kRequiredKeys) {
    if (!values.contains(key)) {
      fail(Errc::InvalidConfig, "missing required config key '" + std::string(key) + "'");
    }
  }
  CircuitConfig config = config_from_values(values);
  validate(config);
  return config;
}

std::vector<std::size_t> i_range(std::size_t lo, std::size_t hi) {
  if (lo > hi) fail(Errc::InvalidConfig, "--i-min exceeds --i-max");
  std::vector<std::size_t> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) fail(Errc::Io, "cannot write '" + path.string() + "'");
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!os.flush()) fail(Errc::Io, "short write to '" + path.string() + "'");
}

// Producers: (config, arguments, threads) -> output text. Everything that
// shapes the output lives in `config` and `arguments` so a manifest can
// replay it.

std::string produce_gap_scan(const CircuitConfig& config, const json& args, std::size_t threads) {
  GapScanOptions opts;
  opts.markov.include_intercore = args.at("include_intercore").get<bool>();
  const std::string method = args.at("method").get<std::string>();
  if (method == "auto") opts.eigen.method = EigenMethod::Auto;
  else if (method == "dense") opts.eigen.method = EigenMethod::Dense;
  else if (method == "iterative") opts.eigen.method = EigenMethod::Iterative;
  else fail(Errc::InvalidConfig, "unknown eigen method '" + method + "'");
  opts.threads = threads;
  opts.eigen.threads = threads;
  const auto is = i_range(args.at("i_min").get<std::size_t>(), args.at("i_max").get<std::size_t>());
  return gap_csv(scan_gap(config, is, opts));
}

std::string produce_ensemble_scan(const CircuitConfig& config, const json& args, std::size_t threads) {
  HaarReferenceOptions hopts;
  hopts.threads = threads;
  if (args.value("use_cache", true)) hopts.cache_dir = default_cache_dir();
  const EnsembleStats haar =
      haar_reference(config.n_qubits(), config.ensemble_size, args.at("haar_seed").get<std::uint64_t>(), hopts);
  const auto is = i_range(args.at("i_min").get<std::size_t>(), args.at("i_max").get<std::size_t>());
  return ensemble_csv(scan_idh(config, is, config.ensemble_size, haar, threads));
}

std::optional<std::size_t> argmin_idh(const IdhProfile& p, bool& interior) {
  if (p.entries.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t k = 1; k < p.entries.size(); ++k)
    if (p.entries[k].idh < p.entries[best].idh) best = k;
  interior = best > 0 && best + 1 < p.entries.size();
  return p.entries[best].intracore_steps;
}

std::string produce_analyze(const json& args) {
  const std::string gap_path = args.at("gap").get<std::string>();
  const GapProfile gap = parse_gap_csv(read_file(gap_path), gap_path);
  json report;
  report["gap_file"] = gap_path;
  const Optimum opt = find_optimal_I(gap);
  report["i_star_gap"] = opt.intracore_steps;
  report["gap_is_interior"] = opt.is_interior;
  report["one_minus_delta_at_optimum"] = 1.0 - opt.delta;
  try {
    const DecayFit fit = fit_exponential_decay(gap);
    report["decay_fit"] = {{"slope", fit.slope},
                           {"intercept", fit.intercept},
                           {"max_abs_residual", fit.max_abs_residual},
                           {"kappa", fit.kappa},
                           {"prefactor", fit.prefactor}};
  } catch (const Error& e) {
    if (e.code() != Errc::NonpositiveEigenvalue) throw;
    report["decay_fit"] = nullptr;
    report["decay_fit_error"] = e.what();
  }
  json residuals = json::array();
  for (std::size_t k = 1; k + 1 < gap.entries.size(); ++k) {
    const std::size_t i = gap.entries[k].intracore_steps;
    if (gap.entries[k - 1].intracore_steps + 1 != i || gap.entries[k + 1].intracore_steps != i + 1) continue;
    if (!(gap.entries[k].lambda > 0.0)) continue;
    residuals.push_back({{"I", i}, {"residual", critical_condition_residual(gap, i)}});
  }
  report["critical_residuals"] = residuals;

  const std::string ens_path = args.value("ensemble", "");
  if (ens_path.empty()) {
    report["i_star_idh"] = nullptr;
    report["idh_is_interior"] = nullptr;
    report["minima_difference"] = nullptr;
  } else {
    const IdhProfile idh = parse_ensemble_csv(read_file(ens_path), ens_path);
    report["ensemble_file"] = ens_path;
    const MinimaComparison cmp = compare_minima(gap, idh);
    bool interior = false;
    argmin_idh(idh, interior);
    report["i_star_idh"] = cmp.i_star_idh;
    report["idh_is_interior"] = interior;
    report["minima_difference"] = cmp.difference;
  }
  return report.dump(2) + "\n";
}

std::string produce(const std::string& command, const CircuitConfig& config, const json& args, std::size_t threads) {
  if (command == "gap-scan") return produce_gap_scan(config, args, threads);
  if (command == "ensemble-scan") return produce_ensemble_scan(config, args, threads);
  if (command == "analyze") return produce_analyze(args);
  fail(Errc::InvalidConfig, "manifest names unknown command '" + command + "'");
}

// Writes the output (or prints it) and, for file outputs, its manifest.
void emit(const std::string& command, const CircuitConfig& config, const json& args, std::size_t threads,
          const std::string& out_path, std::ostream& out) {
  RunManifest m;
  m.command = command;
  m.config = config;
  m.arguments = args;
  m.started_utc = utc_timestamp();
  const std::string content = produce(command, config, args, threads);
  if (out_path.empty()) {
    out << content;
    return;
  }
  write_file(out_path, content);
  m.finished_utc = utc_timestamp();
  m.outputs.push_back({out_path, sha256_hex(content)});
  write_file(manifest_path_for(out_path), to_json(m).dump(2) + "\n");
  out << "wrote " << out_path << " and " << manifest_path_for(out_path).string() << "\n";
}

void cmd_topology(const std::string& kind, std::size_t cores, std::ostream& out) {
  const LinkSet links = build_topology(parse_topology(kind), cores);
  out << "topology " << to_string(links.kind()) << "\n";
  out << "n_cores " << links.n_cores() << "\n";
  out << "n_links " << links.n_links() << "\n";
  if (links.kind() == TopologyKind::Star) out << "hub 0\n";
  for (const Link& l : links.links()) out << "link " << l.first << " " << l.second << "\n";
}

int cmd_replay(const std::string& manifest_file, const std::string& out_override, std::size_t threads,
               std::ostream& out, std::ostream& err) {
  json j;
  try {
    j = json::parse(read_file(manifest_file));
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, manifest_file + ": " + e.what());
  }
  const RunManifest m = manifest_from_json(j);
  if (m.outputs.empty()) fail(Errc::ParseError, manifest_file + ": manifest lists no outputs");
  const std::string content = produce(m.command, m.config, m.arguments, threads);
  const std::string digest = sha256_hex(content);
  const std::string path = out_override.empty() ? m.outputs.front().path : out_override;
  write_file(path, content);
  if (digest != m.outputs.front().sha256) {
    err << "coregap: replay of " << manifest_file << " produced sha256 " << digest << ", manifest records "
        << m.outputs.front().sha256 << "\n";
    return 1;
  }
  out << "replayed " << m.command << " into " << path << ": sha256 " << digest << " matches\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral-gap and ensemble scans of modular multicore random circuits", "coregap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string topo_kind;
  std::size_t topo_cores = 0;
  auto* topo = app.add_subcommand("topology", "print the link set of a topology");
  topo->add_option("--kind", topo_kind, "linear, ring, star or full")->required();
  topo->add_option("--cores", topo_cores, "number of cores")->required();

  ConfigFlags gap_cfg;
  ScanFlags gap_scan;
  std::string method = "auto";
  bool no_intercore = false;
  auto* gap = app.add_subcommand("gap-scan", "normalized spectral gap of the moment Markov chain over I");
  add_config_flags(*gap, gap_cfg);
  add_scan_flags(*gap, gap_scan);
  gap->add_option("--method", method, "eigensolver: auto, dense or iterative")
      ->check(CLI::IsMember({"auto", "dense", "iterative"}))
      ->capture_default_str();
  gap->add_flag("--no-intercore", no_intercore, "drop inter-core links (factorized diagnostic)");

  ConfigFlags ens_cfg;
  ScanFlags ens_scan;
  std::uint64_t haar_seed = kDefaultHaarSeed;
  bool no_cache = false;
  auto* ens = app.add_subcommand("ensemble-scan", "distance of sampled circuit ensembles to the Haar reference over I");
  add_config_flags(*ens, ens_cfg);
  add_scan_flags(*ens, ens_scan);
  ens->add_option("--layers", ens_cfg.layers, "layers per circuit (L)")->type_name("UINT");
  ens->add_option("--samples", ens_cfg.samples, "circuits per I, also the Haar sample count")->type_name("UINT");
  ens->add_option("--haar-seed", haar_seed, "seed of the Haar reference ensemble")->capture_default_str();
  ens->add_flag("--no-cache", no_cache, "neither read nor write the Haar cache");

  std::string gap_file;
  std::string ens_file;
  std::string analyze_out;
  auto* analyze = app.add_subcommand("analyze", "locate optima and test the critical condition");
  analyze->add_option("--gap", gap_file, "gap-scan CSV")->required()->check(CLI::ExistingFile);
  analyze->add_option("--ensemble", ens_file, "ensemble-scan CSV")->check(CLI::ExistingFile);
  analyze->add_option("--out", analyze_out, "JSON report (stdout when omitted)");

  std::string manifest_file;
  std::string replay_out;
  std::size_t replay_threads = 1;
  auto* replay = app.add_subcommand("replay", "re-run a command from its manifest and verify the output digest");
  replay->add_option("--manifest", manifest_file, "manifest JSON")->required()->check(CLI::ExistingFile);
  replay->add_option("--out", replay_out, "write here instead of the recorded path");
  replay->add_option("--threads", replay_threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*topo) {
      cmd_topology(topo_kind, topo_cores, out);
    } else if (*gap) {
      const CircuitConfig config = resolve_config(gap_cfg);
      const json a{{"i_min", gap_scan.i_min},
                   {"i_max", gap_scan.i_max},
                   {"method", method},
                   {"include_intercore", !no_intercore}};
      emit("gap-scan", config, a, gap_scan.threads, gap_scan.out, out);
    } else if (*ens) {
      const CircuitConfig config = resolve_config(ens_cfg);
      const json a{{"i_min", ens_scan.i_min}, {"i_max", ens_scan.i_max}, {"haar_seed", haar_seed},
                   {"use_cache", !no_cache}};
      emit("ensemble-scan", config, a, ens_scan.threads, ens_scan.out, out);
    } else if (*analyze) {
      const GapProfile profile = parse_gap_csv(read_file(gap_file), gap_file);
      json a{{"gap", gap_file}};
      if (!ens_file.empty()) a["ensemble"] = ens_file;
      emit("analyze", profile.config, a, 1, analyze_out, out);
    } else if (*replay) {
      return cmd_replay(manifest_file, replay_out, replay_threads, out, err);
    }
  } catch (const Error& e) {
    err << "coregap: error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "coregap: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace coregap::cli
