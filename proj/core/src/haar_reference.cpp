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

#include "coregap/haar_reference.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "coregap/error.hpp"

namespace coregap {
namespace {

constexpr std::array<char, 8> kMagic{'C', 'G', 'H', 'A', 'A', 'R', '\0', '\0'};

template <class T>
void put_le(std::string& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  const U bits = std::bit_cast<U>(value);
  for (std::size_t b = 0; b < sizeof(U); ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFFU));
}

template <class T>
T get_le(const std::string& in, std::size_t& pos) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  if (pos + sizeof(U) > in.size()) fail(Errc::Io, "truncated Haar cache file");
  U bits = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b)
    bits |= static_cast<U>(static_cast<unsigned char>(in[pos + b])) << (8 * b);
  pos += sizeof(U);
  return std::bit_cast<T>(bits);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("COREGAP_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".coregap_cache";
}

std::filesystem::path haar_cache_filename(const HaarReferenceKey& key) {
  return "haar_n" + std::to_string(key.n_qubits) + "_s" + std::to_string(key.n_samples) + "_seed" +
         std::to_string(key.seed) + ".bin";
}

void write_haar_cache(const std::filesystem::path& file, const HaarReferenceKey& key, const EnsembleStats& stats) {
  std::string out(kMagic.begin(), kMagic.end());
  put_le(out, kHaarCacheVersion);
  put_le(out, static_cast<std::uint32_t>(key.n_qubits));
  put_le(out, static_cast<std::uint64_t>(key.n_samples));
  put_le(out, key.seed);
  for (double v : stats.mean) put_le(out, v);
  for (double v : stats.std) put_le(out, v);

  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  // Write to a temporary name and rename so readers never see partial files.
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) fail(Errc::Io, "cannot write Haar cache '" + tmp.string() + "'");
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!os) fail(Errc::Io, "short write to Haar cache '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, file);
}

std::optional<EnsembleStats> read_haar_cache(const std::filesystem::path& file, const HaarReferenceKey& key) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  const std::string in((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (in.size() < kMagic.size() || std::memcmp(in.data(), kMagic.data(), kMagic.size()) != 0) {
    fail(Errc::Io, "'" + file.string() + "' is not a Haar cache file");
  }
  std::size_t pos = kMagic.size();
  const auto version = get_le<std::uint32_t>(in, pos);
  if (version != kHaarCacheVersion) return std::nullopt;
  const auto n = get_le<std::uint32_t>(in, pos);
  const auto samples = get_le<std::uint64_t>(in, pos);
  const auto seed = get_le<std::uint64_t>(in, pos);
  if (n != key.n_qubits || samples != key.n_samples || seed != key.seed) return std::nullopt;
  const std::size_t len = std::size_t{1} << n;
  if (in.size() != pos + 16 * len) fail(Errc::Io, "Haar cache '" + file.string() + "' has the wrong size");
  EnsembleStats stats;
  stats.n_samples = samples;
  stats.mean.resize(len);
  stats.std.resize(len);
  for (double& v : stats.mean) v = get_le<double>(in, pos);
  for (double& v : stats.std) v = get_le<double>(in, pos);
  return stats;
}

EnsembleStats haar_reference(std::size_t n_qubits, std::size_t n_samples, std::uint64_t seed,
                             const HaarReferenceOptions& options) {
  if (n_qubits > options.cap) {
    fail(Errc::CapExceeded, std::to_string(n_qubits) + " qubits exceeds cap " + std::to_string(options.cap));
  }
  const HaarReferenceKey key{n_qubits, n_samples, seed};
  std::filesystem::path file;
  if (options.cache_dir) {
    file = *options.cache_dir / haar_cache_filename(key);
    if (auto cached = read_haar_cache(file, key)) return *std::move(cached);
  }
  EnsembleStats stats = ensemble_stats_parallel(n_samples, options.threads, [&](std::size_t i) {
    RngStream rng(seed, i);
    return sample_haar_state_probs(rng, n_qubits, options.cap);
  });
  if (options.cache_dir) write_haar_cache(file, key, stats);
  return stats;
}

}  // namespace coregap
