// Copyright 2026 The pfcycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and CSV encodings of harness results. JSON keys are emitted sorted
// and doubles in shortest round-trip form, so identical summaries give
// identical bytes. CSV never consults the C or C++ locale.

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pfcycles/harness.hpp"

namespace pfc {

void to_json(nlohmann::json& j, const ExperimentConfig& c);
void from_json(const nlohmann::json& j, ExperimentConfig& c);
void to_json(nlohmann::json& j, const ExperimentSummary& s);
void from_json(const nlohmann::json& j, ExperimentSummary& s);
void to_json(nlohmann::json& j, const MgfRow& r);
void from_json(const nlohmann::json& j, MgfRow& r);

std::string summary_to_json(const ExperimentSummary& s);
ExperimentSummary summary_from_json(std::string_view text);

/// Shortest round-trip decimal, '.' separator.
std::string format_double(double x);

/// header: variant,n,t,scaled_log_mgf,target,abs_error
std::string mgf_table_csv(std::span<const MgfRow> rows);
/// header: statistic,bin_lo,bin_hi,count
std::string histogram_csv(const ExperimentSummary& s);

}  // namespace pfc
