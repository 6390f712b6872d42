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

#include <string>
#include <string_view>

#include "coregap/gap_analysis.hpp"

namespace coregap::cli {

inline constexpr std::string_view kGapCsvHeader =
    "topology,n_cores,n_qubits_per_core,p_single,c_rand,I,D,lambda,delta,one_minus_delta";
inline constexpr std::string_view kEnsembleCsvHeader =
    "topology,n_cores,n_qubits_per_core,p_single,I,L,n_samples,idh,dh";

/// "# coregap <command> v1" followed by the column header and one row per I.
std::string gap_csv(const GapProfile& profile);
std::string ensemble_csv(const IdhProfile& profile);

/// Inverse of gap_csv. Lambda, D and delta are read back; a = n_cores and
/// b = D - a I must agree on every row. Throws Error(ParseError) naming
/// `source` and the 1-based line.
GapProfile parse_gap_csv(std::string_view text, const std::string& source);
IdhProfile parse_ensemble_csv(std::string_view text, const std::string& source);

}  // namespace coregap::cli
