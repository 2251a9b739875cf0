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

#include "tbmc/shift_engine.hpp"

#include <algorithm>

#include "tbmc/error.hpp"

namespace tbmc {

namespace {

bool compatible(const std::optional<bool>& a, const std::optional<bool>& b) { return !a || !b || *a == *b; }

bool compatible(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  return !a || !b || *a == *b;
}

bool overlaps(const TriggerClause& a, const TriggerClause& b) {
  if (a.override_only || b.override_only) return false;
  const bool shared_process = std::any_of(a.processes.begin(), a.processes.end(),
                                          [&](Process p) { return b.processes.count(p) > 0; });
  return shared_process && compatible(a.derived_animate, b.derived_animate) &&
         compatible(a.base_category, b.base_category);
}

bool admits(const TriggerClause& c, const ShiftRecord& r) {
  if (!c.processes.count(r.formation.process)) return false;
  if (c.base_category && *c.base_category != r.base_category) return false;
  return true;
}

bool fires(const TriggerClause& c, const ShiftRecord& r) {
  if (c.override_only || !admits(c, r)) return false;
  return !c.derived_animate || *c.derived_animate == r.derived_animate;
}

std::string describe(const ShiftRecord& r) {
  std::string s(to_string(r.formation.process));
  s += " from " + r.base_category + " to " + r.target;
  s += r.derived_animate ? " (animate)" : " (inanimate)";
  return s;
}

FeatureSet flip(std::initializer_list<const char*> names) {
  std::vector<Atom> atoms;
  for (const char* n : names) {
    atoms.push_back(Atom::plus(n));
    atoms.push_back(Atom::minus(n));
  }
  return FeatureSet(std::move(atoms));
}

}  // namespace

RuleRegistry::RuleRegistry(std::vector<GradRule> rules) : rules_(std::move(rules)) {
  std::set<std::string> ids;
  for (const auto& r : rules_) {
    if (!algebra::is_valid_name(r.id)) throw Error(Errc::validation, "invalid rule id '" + r.id + "'");
    if (!ids.insert(r.id).second) throw Error(Errc::validation, "duplicate rule id '" + r.id + "'");
    if (r.clauses.empty()) throw Error(Errc::validation, "rule " + r.id + " has no trigger");
    if (!r.operand.categories().empty())
      throw Error(Errc::validation, "operand of rule " + r.id + " contains a category atom");
    if (r.mode != RuleMode::delta_operand && !r.operand.empty())
      throw Error(Errc::validation, "rule " + r.id + " assigns an initial template and cannot carry an operand");
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = i + 1; j < rules_.size(); ++j) {
      const auto& a = rules_[i];
      const auto& b = rules_[j];
      if (a.mode == RuleMode::delta_operand && b.mode == RuleMode::delta_operand && a.operand == b.operand)
        throw Error(Errc::validation, "rules " + a.id + " and " + b.id + " share the operand " + a.operand.to_string());
      for (const auto& ca : a.clauses)
        for (const auto& cb : b.clauses)
          if (overlaps(ca, cb)) throw Error(Errc::validation, "rules " + a.id + " and " + b.id + " overlap");
    }
  }
}

RuleRegistry RuleRegistry::defaults() {
  const std::string noun(kNoun);
  const std::string verb(kVerb);
  std::vector<GradRule> rules;
  rules.push_back({"R2",
                   {{{Process::widen}, std::nullopt, noun, false}, {{Process::conv}, true, noun, false}},
                   RuleMode::delta_operand,
                   {},
                   "no template shift (semantic widening, or conversion to an animate referent)"});
  rules.push_back({"R1",
                   {{{Process::conv}, false, noun, false}},
                   RuleMode::delta_operand,
                   flip({"M", "F"}),
                   "gender shift on conversion"});
  rules.push_back({"R3",
                   {{{Process::conv}, std::nullopt, noun, true}},
                   RuleMode::delta_operand,
                   flip({"M", "F", "COL", "SING"}),
                   "gender and countability shift (explicit only)"});
  rules.push_back({"R4",
                   {{{Process::mderiv}, std::nullopt, std::nullopt, false}, {{Process::conv}, std::nullopt, verb, false}},
                   RuleMode::initial_assign,
                   {},
                   "initial template of the target cognitive set"});
  rules.push_back({"R5",
                   {{{Process::borrow}, std::nullopt, std::nullopt, false}},
                   RuleMode::initial_assign_with_donor_gender,
                   {},
                   "initial template with the donor language's gender"});
  rules.push_back({"R6",
                   {{{Process::conv}, std::nullopt, noun, true}},
                   RuleMode::delta_operand,
                   flip({"M", "F", "DEF"}),
                   "gender and definiteness shift (explicit only)"});
  return RuleRegistry(std::move(rules));
}

const GradRule* RuleRegistry::find(const std::string& id) const {
  auto it = std::find_if(rules_.begin(), rules_.end(), [&](const GradRule& r) { return r.id == id; });
  return it == rules_.end() ? nullptr : &*it;
}

const GradRule& RuleRegistry::select(const ShiftRecord& record) const {
  if (record.empty()) throw Error(Errc::derivation, "input head has no computed template");
  if (record.gradcond) {
    const GradRule* rule = find(*record.gradcond);
    if (!rule) throw Error(Errc::not_found, "unknown gradient condition '" + *record.gradcond + "'");
    const bool ok = std::any_of(rule->clauses.begin(), rule->clauses.end(),
                                [&](const TriggerClause& c) { return admits(c, record); });
    if (!ok) throw Error(Errc::derivation, "gradient condition " + rule->id + " does not apply to " + describe(record));
    return *rule;
  }
  for (const auto& rule : rules_)
    for (const auto& c : rule.clauses)
      if (fires(c, record)) return rule;
  throw Error(Errc::derivation, "no gradient condition triggers for " + describe(record));
}

ShiftResult apply_gradient(const RuleRegistry& rules, const ShiftRecord& record, const ProfileRegistry& profiles,
                           const InitialTemplateRegistry& initials) {
  const GradRule& rule = rules.select(record);
  try {
    switch (rule.mode) {
      case RuleMode::delta_operand: {
        if (!record.base_template)
          throw Error(Errc::derivation, "rule " + rule.id + " needs the template of the base item");
        const Template& base = *record.base_template;
        auto body = algebra::symmetric_difference(base.body(), rule.operand);
        return {Template::make(std::move(body), base.profile_ptr()), rule.id, rule.operand, 0};
      }
      case RuleMode::initial_assign:
        return {initial_template(initials, record.language, record.target), rule.id, std::nullopt, 0};
      case RuleMode::initial_assign_with_donor_gender: {
        const Template init = initial_template(initials, record.language, record.target);
        if (!record.formation.donor_gender) throw Error(Errc::derivation, "borrowing without a donor gender");
        const std::string& donor = *record.formation.donor_gender;
        const auto& profile = init.profile();
        const auto slot_index = profile.slot_of(donor);
        if (!slot_index || !profile.slots()[*slot_index].linked())
          throw Error(Errc::derivation, "donor gender " + donor + " is not a linked feature of profile " + profile.id());
        const Slot& slot = profile.slots()[*slot_index];
        const std::string other = slot.first == donor ? *slot.second : slot.first;
        std::vector<Atom> atoms;
        for (const auto& a : init.body())
          if (a.is_category() || (a.name != donor && a.name != other)) atoms.push_back(a);
        atoms.push_back(Atom::plus(donor));
        atoms.push_back(Atom::minus(other));
        return {Template::make(FeatureSet(std::move(atoms)), profiles.get(profile.id())), rule.id, std::nullopt, 0};
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::validation)
      throw Error(Errc::derivation, "rule " + rule.id + " produced an ill-formed template: " + e.what());
    throw;
  }
  throw Error(Errc::derivation, "unknown rule mode");
}

FeatureSet solve_operand(const Template& base, const Template& derived) {
  if (base.language() != derived.language())
    throw Error(Errc::invalid_argument,
                "profile mismatch: " + base.language() + " template against " + derived.language() + " template");
  return algebra::symmetric_difference(base.body(), derived.body());
}

Engine::Engine(LexiconState state, RuleRegistry rules, ProfileRegistry profiles, InitialTemplateRegistry initials)
    : state_(std::move(state)),
      rules_(std::move(rules)),
      profiles_(std::move(profiles)),
      initials_(std::move(initials)),
      cache_(std::make_shared<Cache>()) {}

Engine Engine::with_state(LexiconState state) const { return Engine(std::move(state), rules_, profiles_, initials_); }

ShiftRecord Engine::record(const std::string& id) const {
  return backward(state_, id, [this](const std::string& base) { return std::optional<Template>(transfer(base).derived); });
}

ShiftResult Engine::transfer(const std::string& id) const {
  std::vector<std::string> stack;
  return transfer_impl(id, stack);
}

ShiftResult Engine::transfer_impl(const std::string& id, std::vector<std::string>& stack) const {
  const Item& item = state_.item(id);
  if (item.is_verb())
    throw Error(Errc::validation, "category without registered template inventory: '" + id + "' is a verb");
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->results.find(id);
    if (it != cache_->results.end()) return it->second;
  }
  if (std::find(stack.begin(), stack.end(), id) != stack.end())
    throw Error(Errc::cycle, "cycle detected in the derivation of '" + id + "'");
  stack.push_back(id);

  std::optional<ShiftResult> result;
  if (state_.is_head(id)) {
    if (const auto& t = state_.head_template(id)) {
      result = ShiftResult{*t, "head", std::nullopt, 0};
    } else if (item.cognitive_set) {
      result = ShiftResult{initial_template(initials_, item.language, *item.cognitive_set), "initial", std::nullopt, 0};
    } else {
      throw Error(Errc::derivation, "input head '" + id + "' has no template");
    }
  } else {
    auto rec = backward(state_, id, [&](const std::string& base) {
      return std::optional<Template>(transfer_impl(base, stack).derived);
    });
    try {
      result = apply_gradient(rules_, rec, profiles_, initials_);
    } catch (const Error& e) {
      throw Error(e.code(), "'" + id + "': " + e.what());
    }
    result->stratum = state_.stratum(id);
  }
  stack.pop_back();

  std::lock_guard lock(cache_->mutex);
  return cache_->results.emplace(id, *result).first->second;
}

PhyloNode Engine::node_for(const std::string& id) const {
  const Item& item = state_.item(id);
  PhyloNode n;
  n.item = id;
  n.category = item.category;
  if (const Edge* e = state_.edge(id)) n.formation = e->formation;
  n.stratum = state_.stratum(id);
  n.live = state_.is_live(id);
  if (!item.is_verb()) {
    auto r = transfer(id);
    n.rule_id = r.rule_id;
    n.tmpl = r.derived;
  }
  return n;
}

PhyloNode Engine::subtree(const std::string& id) const {
  PhyloNode n = node_for(id);
  for (const auto& child : state_.children(id)) n.children.push_back(subtree(child));
  return n;
}

PhyloNode Engine::trace(const std::string& id) const {
  std::vector<std::string> path{id};
  for (const Edge* e = state_.edge(id); e && e->base; e = state_.edge(path.back())) path.push_back(*e->base);
  std::reverse(path.begin(), path.end());

  PhyloNode leaf = subtree(id);
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    PhyloNode parent = node_for(path[i]);
    parent.children.push_back(std::move(leaf));
    leaf = std::move(parent);
  }
  return leaf;
}

const std::vector<ProcessChain>& riffian_chains() {
  using F = Formation;
  static const std::vector<ProcessChain> kChains = {
      {"alpha", "V", {{{F::mderiv(), "NA"}, {F::widen(), "U"}}}},
      {"mu", "V", {{{F::mderiv(), "NA"}, {F::conv(), "U"}}}},
      {"gamma", "V", {{{F::conv(), "NA"}, {F::mderiv(), "U"}, {F::conv(), "C"}}}},
      {"delta", "V",
       {{{F::conv(), "U"}, {F::widen(), "NA"}},
        {{F::mderiv(), "NAdr", true}, {F::conv(), "C", true}}}},
      {"epsilon", "V", {{{F::mderiv(), "NAdr", true}, {F::conv(), "C", true}}}},
      {"zeta", "C", {{{F::conv(), "U"}}}},
      {"eta", "V", {{{F::mderiv(), "NA"}, {F::mderiv(), "C"}, {F::widen(), "U"}}}},
      {"lambda", "", {{{F::borrow("F"), "U"}, {F::widen(), "C"}}}},
      {"rho", "C", {{{F::mderiv(), "NAdr", true}}}},
      {"nu", "", {{{F::borrow("M"), "U"}, {F::conv(), "C", false, "R3"}}}},
      {"pi", "U", {{{F::conv(), "V"}}}},
  };
  return kChains;
}

LexiconState replay_chain(const LexiconState& state, const ProcessChain& chain, const std::string& head,
                          const std::string& prefix, const std::string& language, std::vector<std::string>* leaves) {
  LexiconState out = state;
  const bool borrowed = chain.start.empty();
  if (!borrowed && !state.contains(head)) throw Error(Errc::not_found, "unknown chain head '" + head + "'");
  for (std::size_t p = 0; p < chain.paths.size(); ++p) {
    std::optional<std::string> base;
    if (!borrowed) base = head;
    const auto& steps = chain.paths[p];
    for (std::size_t s = 0; s < steps.size(); ++s) {
      const ChainStep& step = steps[s];
      Item derived;
      derived.id = prefix + "." + std::to_string(p) + "." + std::to_string(s);
      derived.language = language;
      derived.animate = step.animate;
      if (step.target == kVerb) {
        derived.category = std::string(kVerb);
      } else {
        derived.cognitive_set = step.target;
      }
      if (!base) derived.radical = prefix;
      out = out.apply_formation({derived, Edge{base, step.formation, step.gradcond}});
      base = derived.id;
    }
    if (leaves && base) leaves->push_back(*base);
  }
  return out;
}

std::vector<ChainStep> path_steps(const LexiconState& state, const std::string& id) {
  std::vector<ChainStep> steps;
  std::string cur = id;
  while (const Edge* e = state.edge(cur)) {
    const Item& item = state.item(cur);
    steps.push_back({e->formation, item.is_verb() ? std::string(kVerb) : item.cognitive_set.value_or(""), item.animate,
                     e->gradcond});
    if (!e->base) break;
    cur = *e->base;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace tbmc
