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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>

#include "coregap/majorization.hpp"

namespace coregap {

struct HaarReferenceKey {
  std::size_t n_qubits = 0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const HaarReferenceKey&, const HaarReferenceKey&) = default;
};

struct HaarReferenceOptions {
  /// Cache directory; no caching when empty.
  std::optional<std::filesystem::path> cache_dir;
  std::size_t threads = 1;
  std::size_t cap = 14;
};

/// Lorenz statistics of n_samples Haar-random states on n qubits; sample i
/// uses RngStream(seed, i). Loads from / stores to the cache when one is
/// configured. Throws Error(CapExceeded) or Error(TooFewSamples).
EnsembleStats haar_reference(std::size_t n_qubits, std::size_t n_samples, std::uint64_t seed,
                             const HaarReferenceOptions& options = {});

/// Cache directory from the COREGAP_CACHE_DIR environment variable, or
/// ".coregap_cache" in the working directory when unset.
std::filesystem::path default_cache_dir();

/// File name of a cache entry, e.g. "haar_n8_s5000_seed42.bin".
std::filesystem::path haar_cache_filename(const HaarReferenceKey& key);

// Cache file layout, all little-endian:
//   bytes 0..7   magic "CGHAAR\0\0"
//   u32          format version (1)
//   u32          n_qubits
//   u64          n_samples
//   u64          seed
//   f64[2^n]     mean
//   f64[2^n]     std
inline constexpr std::uint32_t kHaarCacheVersion = 1;

void write_haar_cache(const std::filesystem::path& file, const HaarReferenceKey& key, const EnsembleStats& stats);

/// Returns nullopt when the file is absent or its header does not match
/// `key`. Throws Error(Io) for truncated or corrupt files.
std::optional<EnsembleStats> read_haar_cache(const std::filesystem::path& file, const HaarReferenceKey& key);

}  // namespace coregap
