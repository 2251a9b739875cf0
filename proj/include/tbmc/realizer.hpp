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
#include <string>
#include <vector>

#include "tbmc/shift_engine.hpp"

// Spell-out of Riffian item-template pairs. This is a small stand-in for a
// morpheme-pairing component: one affix inventory, two allomorphy rules, and
// per-item overrides for everything else.
namespace tbmc {

struct MarkerInventory {
  std::string fem_prefix = "ð";
  std::string fem_prefix_voiceless = "t";  // before a voiceless consonant
  std::string fem_suffix = "t";
  std::string fem_suffix_postvocalic = "θ";  // after a vowel or glide
  std::string sing_prefix_sg = "a";
  std::string sing_prefix_pl = "i";
  std::string pl_masc_suffix = "en";
  std::string pl_fem_suffix = "in";  // replaces the feminine suffix
  std::vector<std::string> voiceless{"t", "θ", "f", "s", "ʃ", "k", "q", "ħ", "χ", "ts", "tʃ"};
  std::vector<std::string> vowels_and_glides{"a", "e", "i", "o", "u", "ə", "w", "j", "y"};
  /// Skipped when looking for the radical-final segment (gemination mark).
  std::vector<std::string> length_marks{":"};
};

struct Morph {
  std::string text;
  std::string label;  // F-prefix, SING-prefix, radical, F-suffix, PL-suffix, override
};

struct SurfaceForm {
  std::vector<Morph> segments;  // empty morphs are omitted
  std::string joined;
  /// Morph boundaries after the gender prefix and before the suffix:
  /// "ð-aqzin-t", "iqzin-en".
  std::string hyphenated;
  /// One boundary after the whole prefix block, suffix attached:
  /// "ða-senduθ", "a-rgaz", "ð-iʕist".
  std::string display;
  bool override_used = false;
};

/// Throws Error(invalid_argument) for verbs and for templates whose profile is
/// not shaped like the Riffian one.
SurfaceForm realize(const Item& item, const Template& t, const MarkerInventory& inventory = {});

enum class AuditClass { rule_match, override_used, mismatch };

std::string_view to_string(AuditClass c);

struct AuditEntry {
  std::string item;
  std::string expected;
  std::string produced;  // display form, or the override
  AuditClass cls = AuditClass::mismatch;
  std::string note;  // set when the item could not be realized
};

struct AuditReport {
  std::vector<AuditEntry> entries;  // ordered by item id

  std::size_t count(AuditClass c) const;
  /// Rule matches over all audited surfaces; 0 when nothing was audited.
  double rule_match_ratio() const;
};

/// Compares realize() against attested surfaces (item id -> form). A rule
/// output matches when the form equals its joined, hyphenated or display
/// rendering. Items carrying an override are never counted as rule matches.
AuditReport realization_audit(const Engine& engine, const std::map<std::string, std::string>& expected,
                              const MarkerInventory& inventory = {});

}  // namespace tbmc
