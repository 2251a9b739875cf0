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

#include "tbmc/realizer.hpp"

#include <algorithm>

#include "tbmc/error.hpp"
#include "tbmc/text.hpp"

namespace tbmc {

namespace {

bool riffian_shaped(const LanguageProfile& p) {
  const std::vector<Slot> expected{{"SG", "PL"}, {"M", "F"}, {"COL", "SING"}};
  if (p.slots().size() != expected.size()) return false;
  return std::is_permutation(p.slots().begin(), p.slots().end(), expected.begin());
}

bool starts_with_any(const std::string& s, const std::vector<std::string>& prefixes) {
  return std::any_of(prefixes.begin(), prefixes.end(),
                     [&](const std::string& p) { return !p.empty() && s.compare(0, p.size(), p) == 0; });
}

std::string final_segment(const std::string& radical, const MarkerInventory& inv) {
  auto cps = text::code_points(radical);
  while (!cps.empty() && std::find(inv.length_marks.begin(), inv.length_marks.end(), cps.back()) != inv.length_marks.end())
    cps.pop_back();
  return cps.empty() ? std::string{} : cps.back();
}

}  // namespace

SurfaceForm realize(const Item& item, const Template& t, const MarkerInventory& inv) {
  if (item.is_verb()) throw Error(Errc::invalid_argument, "cannot realize verb '" + item.id + "'");
  if (!riffian_shaped(t.profile()))
    throw Error(Errc::invalid_argument, "realizer supports Riffian-shaped templates only, got profile " + t.language());

  SurfaceForm out;
  if (item.surface_override) {
    out.segments.push_back({*item.surface_override, "override"});
    out.joined = out.hyphenated = out.display = *item.surface_override;
    out.override_used = true;
    return out;
  }

  const auto& body = t.body();
  const bool plural = body.contains(Atom::plus("PL"));
  const bool feminine = body.contains(Atom::plus("F"));
  const bool collective = body.contains(Atom::plus("COL"));

  const std::string sing = collective ? "" : (plural ? inv.sing_prefix_pl : inv.sing_prefix_sg);

  std::string suffix;
  std::string suffix_label;
  if (plural) {
    suffix = feminine ? inv.pl_fem_suffix : inv.pl_masc_suffix;
    suffix_label = "PL-suffix";
  } else if (feminine && item.fem_suffix) {
    const std::string last = final_segment(item.radical, inv);
    const bool vocalic = std::find(inv.vowels_and_glides.begin(), inv.vowels_and_glides.end(), last) !=
                         inv.vowels_and_glides.end();
    suffix = vocalic ? inv.fem_suffix_postvocalic : inv.fem_suffix;
    suffix_label = "F-suffix";
  }

  std::string prefix;
  if (feminine && item.fem_prefix) {
    const std::string& next = sing.empty() ? item.radical : sing;
    prefix = starts_with_any(next, inv.voiceless) ? inv.fem_prefix_voiceless : inv.fem_prefix;
  }

  if (!prefix.empty()) out.segments.push_back({prefix, "F-prefix"});
  if (!sing.empty()) out.segments.push_back({sing, "SING-prefix"});
  out.segments.push_back({item.radical, "radical"});
  if (!suffix.empty()) out.segments.push_back({suffix, suffix_label});

  out.joined = prefix + sing + item.radical + suffix;
  out.hyphenated = (prefix.empty() ? "" : prefix + "-") + sing + item.radical + (suffix.empty() ? "" : "-" + suffix);
  const std::string block = prefix + sing;
  out.display = (block.empty() ? "" : block + "-") + item.radical + suffix;
  return out;
}

std::string_view to_string(AuditClass c) {
  switch (c) {
    case AuditClass::rule_match: return "rule-match";
    case AuditClass::override_used: return "override-used";
    case AuditClass::mismatch: return "mismatch";
  }
  return "?";
}

std::size_t AuditReport::count(AuditClass c) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [c](const AuditEntry& e) { return e.cls == c; }));
}

double AuditReport::rule_match_ratio() const {
  if (entries.empty()) return 0.0;
  return static_cast<double>(count(AuditClass::rule_match)) / static_cast<double>(entries.size());
}

AuditReport realization_audit(const Engine& engine, const std::map<std::string, std::string>& expected,
                              const MarkerInventory& inventory) {
  AuditReport report;
  for (const auto& [id, form] : expected) {
    AuditEntry entry{id, form, "", AuditClass::mismatch, ""};
    try {
      const Item& item = engine.state().item(id);
      const SurfaceForm s = realize(item, engine.transfer(id).derived, inventory);
      entry.produced = s.display;
      if (s.override_used) {
        if (form == s.joined) entry.cls = AuditClass::override_used;
        else entry.note = "override differs from the expected surface";
      } else if (form == s.joined || form == s.hyphenated || form == s.display) {
        entry.cls = AuditClass::rule_match;
      }
    } catch (const Error& e) {
      entry.note = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace tbmc
