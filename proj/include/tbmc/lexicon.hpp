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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tbmc/template.hpp"

// The item store, its derivation edges, and the backward function that turns
// an item into the record of what produced it.
namespace tbmc {

inline constexpr std::string_view kNoun = "N";
inline constexpr std::string_view kVerb = "V";

/// Word and meaning formation processes: →, ↑, ↔ and ⊇.
enum class Process { conv, borrow, mderiv, widen };

std::string_view to_string(Process p);
/// Accepts CONV, BORROW, MDERIV, WIDEN. Throws Error(invalid_argument).
Process parse_process(std::string_view s);

struct Formation {
  Process process = Process::conv;
  /// Gender feature of the donor word (M or F). Present iff process is borrow.
  std::optional<std::string> donor_gender;

  static Formation conv() { return {Process::conv, std::nullopt}; }
  static Formation mderiv() { return {Process::mderiv, std::nullopt}; }
  static Formation widen() { return {Process::widen, std::nullopt}; }
  static Formation borrow(std::string gender) { return {Process::borrow, std::move(gender)}; }

  friend bool operator==(const Formation&, const Formation&) = default;
};

struct ItemFlags {
  bool recent_loan = false;
  bool typical = false;
  bool common = false;

  /// Looks a flag up by its corpus key. Throws Error(invalid_argument).
  bool get(std::string_view name) const;

  friend bool operator==(const ItemFlags&, const ItemFlags&) = default;
};

bool is_flag_name(std::string_view name);

struct Item {
  std::string id;
  std::string language;
  std::string radical;
  std::string category{kNoun};
  std::optional<std::string> cognitive_set;  // none for verbs
  std::set<algebra::MeaningAtom> meanings;
  std::string gloss;
  bool animate = false;
  ItemFlags flags;
  /// Attested form used verbatim by the realizer.
  std::optional<std::string> surface_override;
  /// Asymmetric feminine encoding: either affix may be missing.
  bool fem_prefix = true;
  bool fem_suffix = true;

  bool is_verb() const noexcept { return category == kVerb; }

  friend bool operator==(const Item&, const Item&) = default;
};

/// One directional derivative: how an item was produced from its base.
struct Edge {
  std::optional<std::string> base;  // absent only for a borrowing with no recorded source
  Formation formation;
  std::optional<std::string> gradcond;  // explicit gradient-condition override

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Input to apply_formation().
struct EdgeSpec {
  Item derived;
  Edge edge;
};

/// An element of K: {process, base template, target meaning, base item}, or
/// the empty record for input heads. The animacy of the derived item and the
/// explicit override travel along as trigger context for the rule table.
struct ShiftRecord {
  Formation formation;
  std::optional<Template> base_template;
  std::string base_category{kNoun};
  std::string target;  // cognitive set of the derived item
  std::optional<std::string> base_item;
  std::string language;
  bool derived_animate = false;
  std::optional<std::string> gradcond;

  static ShiftRecord empty_record() {
    ShiftRecord r;
    r.empty_ = true;
    return r;
  }
  bool empty() const noexcept { return empty_; }

  /// "{CONV, {N, +SG, ...}, C, gland_1}" or "{}" for the empty record.
  std::string to_string() const;

 private:
  bool empty_ = false;
};

class LexiconState {
 public:
  LexiconState();

  /// Adds an underived item. N heads need a template or a cognitive set
  /// with a registered initial template (checked when resolving, not here).
  LexiconState add_head(Item item, std::optional<Template> t) const;

  /// CONV, MDERIV and BORROW add one live item; WIDEN replaces its base,
  /// which stays in the store as superseded. The receiver is unchanged.
  LexiconState apply_formation(const EdgeSpec& spec) const;

  bool contains(const std::string& id) const;
  const Item& item(const std::string& id) const;
  /// nullptr for input heads.
  const Edge* edge(const std::string& id) const;
  const std::optional<Template>& head_template(const std::string& id) const;
  bool is_head(const std::string& id) const { return edge(id) == nullptr; }
  bool is_live(const std::string& id) const;
  int stratum(const std::string& id) const;

  /// Ids in insertion order.
  const std::vector<std::string>& order() const;
  std::vector<std::string> live_ids() const;
  std::size_t live_count() const;
  std::size_t size() const;

  /// Items derived directly from `id`, sorted by id.
  std::vector<std::string> children(const std::string& id) const;

  /// Warnings produced by the transition that created this snapshot.
  const std::vector<std::string>& warnings() const;

 private:
  struct Data;
  explicit LexiconState(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Resolves the template of an item (h). Used by f to close the recursion.
using TemplateResolver = std::function<std::optional<Template>(const std::string& id)>;

/// The backward recursive function. Heads map to the empty record.
/// Throws Error(not_found) for unknown or dangling ids.
ShiftRecord backward(const LexiconState& state, const std::string& id, const TemplateResolver& resolve);

/// Live items of a cognitive set, sorted by id.
std::vector<std::string> cognitive_set_members(const LexiconState& state, const std::string& cognitive_set);

/// Cognitive sets that have at least one live member, sorted.
std::vector<std::string> cognitive_sets(const LexiconState& state);

}  // namespace tbmc
