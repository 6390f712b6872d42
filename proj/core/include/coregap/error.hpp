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

#include <stdexcept>
#include <string>
#include <string_view>

namespace coregap {

/// Failure categories raised by the library. Every thrown coregap::Error
/// carries exactly one of these.
enum class Errc {
  InvalidCoreCount,
  DegenerateCore,
  InvalidLink,
  InvalidConfig,
  CapExceeded,
  IndexOutOfRange,
  EqualQubits,
  LengthMismatch,
  NotNormalized,
  TooFewSamples,
  OutOfRange,
  NotUnitary,
  NoConvergence,
  SpectrumAnomaly,
  NoSubleadingEigenvalue,
  TooFewPoints,
  NonpositiveEigenvalue,
  BoundaryPoint,
  NoOverlap,
  ParseError,
  Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace coregap
