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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tbmc/shift_engine.hpp"

// Initial-template estimation: the most frequent template of each cognitive
// set over a flag-filtered sample of items.
namespace tbmc {

struct EstimationFilter {
  /// An item is kept when it carries at least one of these flags...
  std::set<std::string> require_any_of{"recent_loan", "typical"};
  /// ...and none of these.
  std::set<std::string> exclude{"common"};
  /// Cognitive sets tallied without filtering. Nouns of action keep one
  /// template even in the unreduced sample.
  std::set<std::string> unfiltered{"NA"};

  bool keeps(const Item& item) const;
};

struct EstimationEntry {
  enum class Status { winner, tie, insufficient_data };

  std::string cognitive_set;
  Status status = Status::insufficient_data;
  std::optional<Template> winner;
  /// Canonical rendering -> count.
  std::map<std::string, int> histogram;
  int sample_size = 0;
  int excluded = 0;
};

struct EstimationReport {
  std::string language;
  std::vector<EstimationEntry> entries;  // ordered by cognitive set

  const EstimationEntry* find(const std::string& cognitive_set) const;
  /// True when every entry has a unique winner.
  bool complete() const;
};

/// Tallies the live nouns of `language` (all languages when empty). Throws
/// Error(invalid_argument) for unknown flag names in the filter.
EstimationReport estimate_initial_templates(const Engine& engine, const EstimationFilter& filter,
                                            const std::string& language = "riffian");

std::string_view to_string(EstimationEntry::Status s);

}  // namespace tbmc
