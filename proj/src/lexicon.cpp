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

#include "tbmc/lexicon.hpp"

#include <algorithm>

#include "tbmc/error.hpp"

namespace tbmc {

std::string_view to_string(Process p) {
  switch (p) {
    case Process::conv: return "CONV";
    case Process::borrow: return "BORROW";
    case Process::mderiv: return "MDERIV";
    case Process::widen: return "WIDEN";
  }
  return "?";
}

Process parse_process(std::string_view s) {
  if (s == "CONV") return Process::conv;
  if (s == "BORROW") return Process::borrow;
  if (s == "MDERIV") return Process::mderiv;
  if (s == "WIDEN") return Process::widen;
  throw Error(Errc::invalid_argument, "unknown formation process '" + std::string(s) + "' (expected CONV, MDERIV, WIDEN or BORROW)");
}

bool is_flag_name(std::string_view name) { return name == "recent_loan" || name == "typical" || name == "common"; }

bool ItemFlags::get(std::string_view name) const {
  if (name == "recent_loan") return recent_loan;
  if (name == "typical") return typical;
  if (name == "common") return common;
  throw Error(Errc::invalid_argument, "unknown item flag '" + std::string(name) + "'");
}

std::string ShiftRecord::to_string() const {
  if (empty()) return "{}";
  std::string out = "{";
  out += tbmc::to_string(formation.process);
  if (formation.donor_gender) out += ":" + *formation.donor_gender;
  out += ", ";
  if (base_template)
    out += canonical_render(*base_template);
  else if (base_item)
    out += base_category;
  else
    out += "-";
  out += ", " + target + ", " + base_item.value_or("-") + "}";
  return out;
}

struct LexiconState::Data {
  std::map<std::string, Item> items;
  std::map<std::string, Edge> edges;
  std::map<std::string, std::optional<Template>> head_templates;
  std::map<std::string, int> strata;
  std::map<std::string, std::vector<std::string>> children;
  std::set<std::string> superseded;
  std::vector<std::string> order;
  std::vector<std::string> warnings;
};

LexiconState::LexiconState() : data_(std::make_shared<const Data>()) {}

namespace {

void check_fresh(const std::map<std::string, Item>& items, const std::string& id) {
  if (!algebra::is_valid_name(id)) throw Error(Errc::invalid_argument, "invalid item id '" + id + "'");
  if (items.count(id)) throw Error(Errc::invalid_argument, "duplicate item id '" + id + "'");
}

void check_category(const Item& item) {
  if (item.category == kVerb) {
    if (item.cognitive_set) throw Error(Errc::validation, "verb '" + item.id + "' cannot belong to a cognitive set");
  } else if (item.category == kNoun) {
    if (!item.cognitive_set) throw Error(Errc::validation, "noun '" + item.id + "' needs a cognitive set");
  } else {
    throw Error(Errc::validation, "item '" + item.id + "' has unsupported category '" + item.category + "'");
  }
}

std::set<algebra::MeaningAtom> lexical_meanings(const Item& item) {
  std::set<algebra::MeaningAtom> out;
  for (const auto& m : item.meanings)
    if (m.kind == algebra::MeaningAtom::Kind::lexical) out.insert(m);
  return out;
}

}  // namespace

LexiconState LexiconState::add_head(Item item, std::optional<Template> t) const {
  check_fresh(data_->items, item.id);
  if (t) {
    if (item.language.empty()) item.language = t->language();
    if (t->language() != item.language)
      throw Error(Errc::validation, "template of '" + item.id + "' uses profile " + t->language() + " but the item is " + item.language);
    if (item.category == kVerb) throw Error(Errc::validation, "verb '" + item.id + "' cannot carry a template");
  }
  check_category(item);
  auto next = std::make_shared<Data>(*data_);
  next->warnings.clear();
  const std::string id = item.id;
  next->items.emplace(id, std::move(item));
  next->head_templates.emplace(id, std::move(t));
  next->strata[id] = 0;
  next->order.push_back(id);
  return LexiconState(std::move(next));
}

LexiconState LexiconState::apply_formation(const EdgeSpec& spec) const {
  Item derived = spec.derived;
  const Edge& edge = spec.edge;
  check_fresh(data_->items, derived.id);

  const bool borrow = edge.formation.process == Process::borrow;
  if (borrow != edge.formation.donor_gender.has_value())
    throw Error(Errc::invalid_argument, "donor gender is required for BORROW and only for BORROW ('" + derived.id + "')");
  if (borrow && edge.formation.donor_gender->empty())
    throw Error(Errc::invalid_argument, "empty donor gender for '" + derived.id + "'");

  auto next = std::make_shared<Data>(*data_);
  next->warnings.clear();

  int stratum = 0;
  if (edge.base) {
    auto it = data_->items.find(*edge.base);
    if (it == data_->items.end())
      throw Error(Errc::not_found, "dangling base reference '" + *edge.base + "' for '" + derived.id + "'");
    if (data_->superseded.count(*edge.base))
      throw Error(Errc::validation, "base '" + *edge.base + "' of '" + derived.id + "' was superseded by semantic widening");
    const Item& base = it->second;
    if (derived.language.empty()) derived.language = base.language;
    if (derived.radical.empty()) derived.radical = base.radical;
    if (derived.category == kNoun && !derived.cognitive_set && base.category == kNoun)
      derived.cognitive_set = base.cognitive_set;
    stratum = data_->strata.at(*edge.base) + 1;

    if (edge.formation.process == Process::widen) {
      const auto b = lexical_meanings(base);
      const auto d = lexical_meanings(derived);
      const bool d_in_b = std::includes(b.begin(), b.end(), d.begin(), d.end());
      const bool b_in_d = std::includes(d.begin(), d.end(), b.begin(), b.end());
      if (!d_in_b && !b_in_d)
        throw Error(Errc::validation, "widening '" + derived.id + "' has meanings incomparable with its base '" + base.id + "'");
      if (!d_in_b)
        next->warnings.push_back("widening '" + derived.id + "' extends the meanings of '" + base.id +
                                 "' (base does not contain derived)");
      next->superseded.insert(base.id);
    }
    next->children[*edge.base].push_back(derived.id);
    std::sort(next->children[*edge.base].begin(), next->children[*edge.base].end());
  } else if (!borrow) {
    throw Error(Errc::invalid_argument, "only BORROW may omit the base ('" + derived.id + "')");
  } else if (derived.language.empty()) {
    throw Error(Errc::invalid_argument, "borrowed item '" + derived.id + "' needs a language");
  }

  check_category(derived);
  const std::string id = derived.id;
  next->items.emplace(id, std::move(derived));
  next->edges.emplace(id, edge);
  next->strata[id] = stratum;
  next->order.push_back(id);
  return LexiconState(std::move(next));
}

bool LexiconState::contains(const std::string& id) const { return data_->items.count(id) > 0; }

const Item& LexiconState::item(const std::string& id) const {
  auto it = data_->items.find(id);
  if (it == data_->items.end()) throw Error(Errc::not_found, "unknown item '" + id + "'");
  return it->second;
}

const Edge* LexiconState::edge(const std::string& id) const {
  item(id);
  auto it = data_->edges.find(id);
  return it == data_->edges.end() ? nullptr : &it->second;
}

const std::optional<Template>& LexiconState::head_template(const std::string& id) const {
  static const std::optional<Template> kNone;
  item(id);
  auto it = data_->head_templates.find(id);
  return it == data_->head_templates.end() ? kNone : it->second;
}

bool LexiconState::is_live(const std::string& id) const { return contains(id) && !data_->superseded.count(id); }

int LexiconState::stratum(const std::string& id) const {
  item(id);
  return data_->strata.at(id);
}

const std::vector<std::string>& LexiconState::order() const { return data_->order; }

std::vector<std::string> LexiconState::live_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : data_->items)
    if (!data_->superseded.count(id)) out.push_back(id);
  return out;
}

std::size_t LexiconState::live_count() const { return data_->items.size() - data_->superseded.size(); }

std::size_t LexiconState::size() const { return data_->items.size(); }

std::vector<std::string> LexiconState::children(const std::string& id) const {
  item(id);
  auto it = data_->children.find(id);
  return it == data_->children.end() ? std::vector<std::string>{} : it->second;
}

const std::vector<std::string>& LexiconState::warnings() const { return data_->warnings; }

ShiftRecord backward(const LexiconState& state, const std::string& id, const TemplateResolver& resolve) {
  const Item& item = state.item(id);
  const Edge* edge = state.edge(id);
  if (!edge) return ShiftRecord::empty_record();

  ShiftRecord r;
  r.formation = edge->formation;
  r.language = item.language;
  r.derived_animate = item.animate;
  r.gradcond = edge->gradcond;
  r.target = item.is_verb() ? std::string(kVerb) : item.cognitive_set.value_or("");
  if (edge->base) {
    if (!state.contains(*edge->base))
      throw Error(Errc::not_found, "dangling base reference '" + *edge->base + "' for '" + id + "'");
    const Item& base = state.item(*edge->base);
    r.base_item = base.id;
    r.base_category = base.category;
    if (!base.is_verb()) r.base_template = resolve(base.id);
  } else {
    r.base_category = "-";
  }
  return r;
}

std::vector<std::string> cognitive_set_members(const LexiconState& state, const std::string& cognitive_set) {
  std::vector<std::string> out;
  for (const auto& id : state.live_ids()) {
    const Item& it = state.item(id);
    if (!it.is_verb() && it.cognitive_set == cognitive_set) out.push_back(id);
  }
  return out;
}

std::vector<std::string> cognitive_sets(const LexiconState& state) {
  std::set<std::string> sets;
  for (const auto& id : state.live_ids()) {
    const Item& it = state.item(id);
    if (!it.is_verb() && it.cognitive_set) sets.insert(*it.cognitive_set);
  }
  return {sets.begin(), sets.end()};
}

}  // namespace tbmc
