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
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tbmc/lexicon.hpp"
#include "tbmc/template.hpp"

// Gradient conditions, the gradient function g, and the transfer function
// h = g ∘ f evaluated over a lexicon snapshot.
namespace tbmc {

/// When a gradient condition fires. Unset fields match anything.
struct TriggerClause {
  std::set<Process> processes;
  std::optional<bool> derived_animate;
  std::optional<std::string> base_category;
  /// Fires only when the edge names the rule explicitly (gradcond=ID).
  bool override_only = false;
};

enum class RuleMode {
  delta_operand,                     ///< derived = base Δ operand
  initial_assign,                    ///< derived = initial template of the target set
  initial_assign_with_donor_gender,  ///< as above, gender slot forced to the donor's
};

struct GradRule {
  std::string id;
  std::vector<TriggerClause> clauses;
  RuleMode mode = RuleMode::delta_operand;
  FeatureSet operand;  // delta_operand only; never holds a category atom
  std::string summary;
};

/// Ordered, immutable table of gradient conditions. Construction rejects
/// duplicate ids, category atoms in operands, two delta rules sharing an
/// operand, and any two clauses that could fire on the same record.
class RuleRegistry {
 public:
  explicit RuleRegistry(std::vector<GradRule> rules);

  /// R2 (no shift), R1 (gender flip), R3 (gender and countability flip,
  /// override only), R4 (initial template), R5 (initial template with donor
  /// gender), R6 (gender and definiteness flip, override only).
  static RuleRegistry defaults();

  const std::vector<GradRule>& rules() const noexcept { return rules_; }
  const GradRule* find(const std::string& id) const;

  /// The unique rule for a record. Throws Error(derivation) when none fires.
  const GradRule& select(const ShiftRecord& record) const;

 private:
  std::vector<GradRule> rules_;
};

struct ShiftResult {
  Template derived;
  std::string rule_id;             // "head" / "initial" for underived items
  std::optional<FeatureSet> operand;
  int stratum = 0;
};

/// The gradient function g.
ShiftResult apply_gradient(const RuleRegistry& rules, const ShiftRecord& record, const ProfileRegistry& profiles,
                           const InitialTemplateRegistry& initials);

/// The operand p with t_i Δ p = t_j. Throws Error(invalid_argument) when the
/// templates belong to different profiles.
FeatureSet solve_operand(const Template& base, const Template& derived);

/// A node of a phylotemplatic tree.
struct PhyloNode {
  std::string item;
  std::string category;
  std::optional<Formation> formation;  // absent for input heads
  std::string rule_id;                 // empty for verbs
  std::optional<Template> tmpl;        // absent for verbs
  int stratum = 0;
  bool live = true;
  std::vector<PhyloNode> children;
};

/// h = g ∘ f over one lexicon snapshot. Results are memoized; the cache is
/// shared between copies and safe to fill from several threads.
class Engine {
 public:
  Engine(LexiconState state, RuleRegistry rules, ProfileRegistry profiles, InitialTemplateRegistry initials);

  const LexiconState& state() const noexcept { return state_; }
  const RuleRegistry& rules() const noexcept { return rules_; }
  const ProfileRegistry& profiles() const noexcept { return profiles_; }
  const InitialTemplateRegistry& initials() const noexcept { return initials_; }

  /// f: the shift record of an item, base template resolved through h.
  ShiftRecord record(const std::string& id) const;

  /// h. Throws Error(validation) for verbs, Error(cycle) on a cyclic chain.
  ShiftResult transfer(const std::string& id) const;

  /// Path from the input head down to `id`, followed by everything derived
  /// from `id`. Children are ordered by id.
  PhyloNode trace(const std::string& id) const;

  /// Same engine over a different snapshot (fresh cache).
  Engine with_state(LexiconState state) const;

 private:
  ShiftResult transfer_impl(const std::string& id, std::vector<std::string>& stack) const;
  PhyloNode node_for(const std::string& id) const;
  PhyloNode subtree(const std::string& id) const;

  LexiconState state_;
  RuleRegistry rules_;
  ProfileRegistry profiles_;
  InitialTemplateRegistry initials_;

  struct Cache {
    std::mutex mutex;
    std::map<std::string, ShiftResult> results;
  };
  std::shared_ptr<Cache> cache_;
};

/// One step of a prototypical process chain.
struct ChainStep {
  ChainStep(Formation f, std::string target_set, bool animate_item = false,
            std::optional<std::string> rule = std::nullopt)
      : formation(std::move(f)), target(std::move(target_set)), animate(animate_item), gradcond(std::move(rule)) {}

  Formation formation;
  std::string target;  // cognitive set, or "V"
  bool animate = false;
  std::optional<std::string> gradcond;
};

/// A prototypical chain of template shifts. A chain starts at an input head
/// of category/cognitive set `start` (or at a borrowing when `start` is
/// empty) and may branch into several paths.
struct ProcessChain {
  std::string id;
  std::string start;
  std::vector<std::vector<ChainStep>> paths;
};

/// The eleven Riffian gender-formation chains (alpha ... pi).
const std::vector<ProcessChain>& riffian_chains();

/// Applies every path of `chain` starting at `head` (ignored for chains that
/// start with a borrowing). New ids are `<prefix>.<path>.<step>`; the ids of
/// the last item of each path are appended to `leaves` when given.
LexiconState replay_chain(const LexiconState& state, const ProcessChain& chain, const std::string& head,
                          const std::string& prefix, const std::string& language,
                          std::vector<std::string>* leaves = nullptr);

/// Steps from the input head down to `id`.
std::vector<ChainStep> path_steps(const LexiconState& state, const std::string& id);

}  // namespace tbmc
