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

#include "coregap/error.hpp"

namespace coregap {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidCoreCount: return "InvalidCoreCount";
    case Errc::DegenerateCore: return "DegenerateCore";
    case Errc::InvalidLink: return "InvalidLink";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EqualQubits: return "EqualQubits";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SpectrumAnomaly: return "SpectrumAnomaly";
    case Errc::NoSubleadingEigenvalue: return "NoSubleadingEigenvalue";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NonpositiveEigenvalue: return "NonpositiveEigenvalue";
    case Errc::BoundaryPoint: return "BoundaryPoint";
    case Errc::NoOverlap: return "NoOverlap";
    case Errc::ParseError: return "ParseError";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace coregap
