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

#include "tbmc/estimator.hpp"

#include <algorithm>

#include "tbmc/error.hpp"

namespace tbmc {

bool EstimationFilter::keeps(const Item& item) const {
  if (item.cognitive_set && unfiltered.count(*item.cognitive_set)) return true;
  for (const auto& f : exclude)
    if (item.flags.get(f)) return false;
  if (require_any_of.empty()) return true;
  return std::any_of(require_any_of.begin(), require_any_of.end(), [&](const std::string& f) { return item.flags.get(f); });
}

const EstimationEntry* EstimationReport::find(const std::string& cognitive_set) const {
  for (const auto& e : entries)
    if (e.cognitive_set == cognitive_set) return &e;
  return nullptr;
}

bool EstimationReport::complete() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const EstimationEntry& e) {
    return e.status == EstimationEntry::Status::winner;
  });
}

std::string_view to_string(EstimationEntry::Status s) {
  switch (s) {
    case EstimationEntry::Status::winner: return "winner";
    case EstimationEntry::Status::tie: return "tie";
    case EstimationEntry::Status::insufficient_data: return "insufficient data for cognitive set";
  }
  return "?";
}

EstimationReport estimate_initial_templates(const Engine& engine, const EstimationFilter& filter,
                                            const std::string& language) {
  for (const auto* group : {&filter.require_any_of, &filter.exclude})
    for (const auto& f : *group)
      if (!is_flag_name(f)) throw Error(Errc::invalid_argument, "unknown item flag '" + f + "'");

  const LexiconState& state = engine.state();
  std::map<std::string, EstimationEntry> by_set;
  std::map<std::string, std::map<std::string, Template>> exemplars;

  for (const auto& id : state.live_ids()) {
    const Item& item = state.item(id);
    if (item.is_verb() || !item.cognitive_set) continue;
    if (!language.empty() && item.language != language) continue;
    auto& entry = by_set[*item.cognitive_set];
    entry.cognitive_set = *item.cognitive_set;
    if (!filter.keeps(item)) {
      ++entry.excluded;
      continue;
    }
    const Template t = engine.transfer(id).derived;
    const std::string key = canonical_render(t);
    ++entry.histogram[key];
    ++entry.sample_size;
    exemplars[entry.cognitive_set].emplace(key, t);
  }

  EstimationReport report;
  report.language = language;
  for (auto& [cogset, entry] : by_set) {
    if (entry.sample_size == 0) {
      entry.status = EstimationEntry::Status::insufficient_data;
    } else {
      int best = 0;
      int holders = 0;
      std::string best_key;
      for (const auto& [key, count] : entry.histogram) {
        if (count > best) {
          best = count;
          holders = 1;
          best_key = key;
        } else if (count == best) {
          ++holders;
        }
      }
      if (holders == 1) {
        entry.status = EstimationEntry::Status::winner;
        entry.winner = exemplars[cogset].at(best_key);
      } else {
        entry.status = EstimationEntry::Status::tie;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace tbmc
