// Copyright 2026 The TBMC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbmc/corpus.hpp"
#include "tbmc/estimator.hpp"
#include "tbmc/oracle.hpp"
#include "tbmc/realizer.hpp"

// Text and record renderings of command results. Record mode prints one
// record per line: a kind followed by tab-separated key=value fields in a
// fixed order. Neither mode prints timings or anything else that varies
// between runs.
namespace tbmc::report {

enum class Format { text, records };

std::string render_validation(const corpus::ValidationReport& r, Format f);

std::string render_derivation(const Item& item, const ShiftRecord& record, const ShiftResult& result,
                              const std::optional<SurfaceForm>& surface, Format f);

std::string render_solve(const Template& base, const Template& derived, const FeatureSet& operand, Format f);

/// Box-drawing tree in text mode, one `node` record per item otherwise.
std::string render_trace(const PhyloNode& root, Format f);

std::string render_enumeration(const LanguageProfile& profile, const std::vector<FeatureSet>& sets,
                               bool well_formed, Format f);

std::string render_estimation(const EstimationReport& r, Format f);

std::string render_selfcheck(const std::vector<oracle::CheckResult>& results, Format f);

}  // namespace tbmc::report
