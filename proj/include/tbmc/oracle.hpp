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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tbmc/lexicon.hpp"

// Exhaustive checks of the set algebra and the lexicon-size ledger. The
// reference side uses its own membership loops over atom lists.
namespace tbmc::oracle {

inline constexpr std::size_t kMaxTripleAtoms = 4;
inline constexpr std::size_t kMaxPairAtoms = 6;

struct UniverseSpec {
  std::vector<Atom> atoms;

  /// The first `n` of +M, -M, +F, -F, +SG, -SG.
  static UniverseSpec standard(std::size_t n);
  /// Positive features with the given names.
  static UniverseSpec of_names(const std::vector<std::string>& names);

  /// All 2^n subsets, ordered by bitmask.
  std::vector<FeatureSet> subsets() const;
};

using DeltaOp = std::function<FeatureSet(const FeatureSet&, const FeatureSet&)>;

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// Named sub-counts, e.g. ("associativity", 512).
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  std::optional<std::string> counterexample;
  double seconds = 0.0;
};

/// Membership-loop Δ used as ground truth.
FeatureSet reference_delta(const FeatureSet& a, const FeatureSet& b);

/// Associativity (triples), commutativity (pairs), identity and inverse
/// (singles) of `op`, by default algebra::symmetric_difference. Throws
/// Error(limit) above kMaxTripleAtoms.
CheckResult verify_group_axioms(const UniverseSpec& u, const DeltaOp& op = {});

/// Both Δ formulations agree with the reference and stay inside the
/// universe, for every pair. Throws Error(limit) above kMaxPairAtoms.
CheckResult verify_theorem1(const UniverseSpec& u);

/// For every t_i, Δ-by-t_i is a bijection on the power set (unique operand)
/// and t_i Δ (t_i Δ t_j) = t_j for every pair. Throws Error(limit) above
/// kMaxPairAtoms.
CheckResult verify_theorem2_lemma31(const UniverseSpec& u);

/// Live-count change of one transition: +1 for CONV, MDERIV and BORROW,
/// 0 for WIDEN.
CheckResult verify_prop2_ledger(const LexiconState& before, const EdgeSpec& edge, const LexiconState& after);

/// Rebuilds `state` from its insertion order, checking every transition,
/// and that the final live count equals heads plus item-adding edges.
CheckResult verify_prop2_replay(const LexiconState& state);

/// Group axioms at min(atoms, 4), the two pair checks at `atoms`, plus a
/// control run showing that union in place of Δ is rejected.
std::vector<CheckResult> run_suite(std::size_t atoms);

}  // namespace tbmc::oracle
