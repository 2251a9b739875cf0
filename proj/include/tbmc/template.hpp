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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbmc/algebra.hpp"

namespace tbmc {

using algebra::Atom;
using algebra::FeatureSet;

/// A paradigm slot of a language profile. A linked opposition (SG|PL) holds
/// two features that always carry opposite signs; a free slot (DEF) holds one
/// feature of either sign.
struct Slot {
  std::string first;
  std::optional<std::string> second;

  bool linked() const noexcept { return second.has_value(); }
  std::size_t width() const noexcept { return linked() ? 2 : 1; }
  std::string to_string() const;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Which features a template of one language and category must carry.
class LanguageProfile {
 public:
  LanguageProfile(std::string id, std::string category, std::vector<Slot> slots);

  const std::string& id() const noexcept { return id_; }
  const std::string& category() const noexcept { return category_; }
  const std::vector<Slot>& slots() const noexcept { return slots_; }

  /// Unsigned feature names in declaration order.
  const std::vector<std::string>& inventory() const noexcept { return inventory_; }

  /// Members of a well-formed body: the category plus one atom per feature.
  std::size_t cardinality() const noexcept { return 1 + inventory_.size(); }

  /// Index of the slot declaring `feature`, if any.
  std::optional<std::size_t> slot_of(const std::string& feature) const;

  /// Position of `feature` in inventory(), or inventory().size() when absent.
  std::size_t rank(const std::string& feature) const;

  static LanguageProfile riffian();
  static LanguageProfile french();

  friend bool operator==(const LanguageProfile&, const LanguageProfile&) = default;

 private:
  std::string id_;
  std::string category_;
  std::vector<Slot> slots_;
  std::vector<std::string> inventory_;
};

using ProfilePtr = std::shared_ptr<const LanguageProfile>;

struct Violation {
  std::string slot;  // "category", a slot rendering such as "M|F", or "extra"
  std::string message;
};

/// Checks a template body against a profile. Empty result means well-formed.
std::vector<Violation> validate(const FeatureSet& body, const LanguageProfile& profile);

/// A template body that has passed validate() for its profile.
class Template {
 public:
  /// Throws Error(validation) naming every violation.
  static Template make(FeatureSet body, ProfilePtr profile);

  const FeatureSet& body() const noexcept { return body_; }
  const LanguageProfile& profile() const noexcept { return *profile_; }
  const ProfilePtr& profile_ptr() const noexcept { return profile_; }
  const std::string& language() const noexcept { return profile_->id(); }

  /// The signed features, category removed.
  FeatureSet features() const { return body_.without_categories(); }

  friend bool operator==(const Template& a, const Template& b) {
    return a.profile_->id() == b.profile_->id() && a.body_ == b.body_;
  }

 private:
  Template(FeatureSet body, ProfilePtr profile) : body_(std::move(body)), profile_(std::move(profile)) {}

  FeatureSet body_;
  ProfilePtr profile_;
};

/// "{N, +SG, -PL, -M, +F, -COL, +SING}": category, then features in slot
/// declaration order.
std::string canonical_render(const Template& t);

/// Renders any feature set in the profile's feature order (+ before - for a
/// shared name) without validating it. Atoms unknown to the profile follow
/// in generic order. `spaced` selects ", " over "," as separator.
std::string render_in_profile_order(const FeatureSet& s, const LanguageProfile& profile, bool spaced);

/// Every sign assignment over the profile inventory, category fixed;
/// 2^(cardinality-1) sets. With `well_formed_only`, the validated subset.
std::vector<FeatureSet> enumerate_candidates(const LanguageProfile& profile, bool well_formed_only = false);

/// Well-formed bodies built slot by slot (independent of validate()).
std::vector<FeatureSet> construct_well_formed(const LanguageProfile& profile);

class ProfileRegistry {
 public:
  /// Registry holding the built-in riffian and french profiles.
  static ProfileRegistry with_defaults();

  /// Adds or replaces the profile with the same id.
  void add(LanguageProfile profile);

  ProfilePtr find(const std::string& id) const;
  /// Throws Error(not_found).
  ProfilePtr get(const std::string& id) const;
  std::vector<std::string> ids() const;

  /// The first profile (by id) under which `body` validates.
  ProfilePtr profile_for(const FeatureSet& body) const;

 private:
  std::map<std::string, ProfilePtr> profiles_;
};

/// Default template per (language, cognitive set).
class InitialTemplateRegistry {
 public:
  /// Riffian C, U, NA and NAdr defaults, resolved against `profiles`.
  static InitialTemplateRegistry with_defaults(const ProfileRegistry& profiles);

  void set(const std::string& language, const std::string& cognitive_set, Template t);
  const Template* find(const std::string& language, const std::string& cognitive_set) const;
  const std::map<std::pair<std::string, std::string>, Template>& entries() const noexcept { return entries_; }

 private:
  std::map<std::pair<std::string, std::string>, Template> entries_;
};

/// Throws Error(not_found, "no initial template for cognitive set ...").
Template initial_template(const InitialTemplateRegistry& registry, const std::string& language,
                          const std::string& cognitive_set);

}  // namespace tbmc
