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

#include "tbmc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "tbmc/error.hpp"

namespace tbmc::oracle {

namespace {

using Clock = std::chrono::steady_clock;

bool member(const Atom& x, const FeatureSet& s) {
  for (const Atom& y : s)
    if (y.kind == x.kind && y.name == x.name && (x.is_category() || y.polarity == x.polarity)) return true;
  return false;
}

bool contained(const FeatureSet& a, const std::vector<Atom>& universe) {
  for (const Atom& x : a) {
    bool found = false;
    for (const Atom& y : universe) found = found || (y == x);
    if (!found) return false;
  }
  return true;
}

void check_size(const UniverseSpec& u, std::size_t cap, const char* what) {
  if (u.atoms.size() > cap)
    throw Error(Errc::limit, std::string(what) + " supports at most " + std::to_string(cap) + " atoms, got " +
                                 std::to_string(u.atoms.size()));
}

std::string show(const FeatureSet& s) { return s.to_string(); }

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void fail(CheckResult& r, std::string message) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = std::move(message);
}

}  // namespace

UniverseSpec UniverseSpec::standard(std::size_t n) {
  static const std::vector<Atom> pool{Atom::plus("M"),  Atom::minus("M"), Atom::plus("F"),
                                      Atom::minus("F"), Atom::plus("SG"), Atom::minus("SG")};
  if (n > pool.size()) throw Error(Errc::limit, "standard universe has " + std::to_string(pool.size()) + " atoms");
  return UniverseSpec{std::vector<Atom>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n))};
}

UniverseSpec UniverseSpec::of_names(const std::vector<std::string>& names) {
  UniverseSpec u;
  for (const auto& n : names) u.atoms.push_back(Atom::plus(n));
  return u;
}

std::vector<FeatureSet> UniverseSpec::subsets() const {
  std::set<Atom> distinct(atoms.begin(), atoms.end());
  if (distinct.size() != atoms.size()) throw Error(Errc::invalid_argument, "universe atoms must be distinct");
  const std::size_t n = atoms.size();
  std::vector<FeatureSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Atom> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(atoms[i]);
    out.emplace_back(std::move(members));
  }
  return out;
}

FeatureSet reference_delta(const FeatureSet& a, const FeatureSet& b) {
  std::vector<Atom> out;
  for (const Atom& x : a)
    if (!member(x, b)) out.push_back(x);
  for (const Atom& y : b)
    if (!member(y, a)) out.push_back(y);
  return FeatureSet(std::move(out));
}

CheckResult verify_group_axioms(const UniverseSpec& u, const DeltaOp& op_in) {
  check_size(u, kMaxTripleAtoms, "group-axiom check");
  const auto t0 = Clock::now();
  const DeltaOp op = op_in ? op_in : DeltaOp(algebra::symmetric_difference);
  const auto sets = u.subsets();
  const FeatureSet empty;

  CheckResult r;
  r.name = "group_axioms";
  std::uint64_t identity = 0, inverse = 0, commutativity = 0, associativity = 0;

  for (const auto& a : sets) {
    ++identity;
    if (op(a, empty) != a) fail(r, "identity: " + show(a) + " Δ {} = " + show(op(a, empty)));
    ++inverse;
    if (op(a, a) != empty) fail(r, "inverse: " + show(a) + " Δ " + show(a) + " = " + show(op(a, a)));
  }
  for (const auto& a : sets)
    for (const auto& b : sets) {
      ++commutativity;
      if (op(a, b) != op(b, a)) fail(r, "commutativity: a=" + show(a) + " b=" + show(b));
    }
  for (const auto& a : sets)
    for (const auto& b : sets) {
      const FeatureSet ab = op(a, b);
      for (const auto& c : sets) {
        ++associativity;
        if (op(ab, c) != op(a, op(b, c)))
          fail(r, "associativity: a=" + show(a) + " b=" + show(b) + " c=" + show(c));
      }
    }

  r.counts = {{"identity", identity},
              {"inverse", inverse},
              {"commutativity", commutativity},
              {"associativity", associativity}};
  r.checks = identity + inverse + commutativity + associativity;
  r.seconds = since(t0);
  return r;
}

CheckResult verify_theorem1(const UniverseSpec& u) {
  check_size(u, kMaxPairAtoms, "equivalence check");
  const auto t0 = Clock::now();
  const auto sets = u.subsets();
  CheckResult r;
  r.name = "theorem1_equivalence_closure";
  std::uint64_t pairs = 0;
  for (const auto& a : sets)
    for (const auto& b : sets) {
      ++pairs;
      const FeatureSet expected = reference_delta(a, b);
      const FeatureSet by_difference = algebra::symmetric_difference(a, b);
      const FeatureSet by_union = algebra::symmetric_difference_by_union(a, b);
      if (by_difference != expected)
        fail(r, "(a\\b)∪(b\\a) wrong for a=" + show(a) + " b=" + show(b) + ": " + show(by_difference));
      if (by_union != expected)
        fail(r, "(a∪b)\\(a∩b) wrong for a=" + show(a) + " b=" + show(b) + ": " + show(by_union));
      if (!contained(by_difference, u.atoms) || !contained(by_union, u.atoms))
        fail(r, "closure: result leaves the universe for a=" + show(a) + " b=" + show(b));
    }
  r.counts = {{"pairs", pairs}};
  r.checks = pairs;
  r.seconds = since(t0);
  return r;
}

CheckResult verify_theorem2_lemma31(const UniverseSpec& u) {
  check_size(u, kMaxPairAtoms, "bijection check");
  const auto t0 = Clock::now();
  const auto sets = u.subsets();
  CheckResult r;
  r.name = "theorem2_lemma31";
  std::uint64_t pairs = 0;
  std::uint64_t min_images = sets.size();
  for (const auto& ti : sets) {
    std::set<FeatureSet> images;
    for (const auto& p : sets) {
      const FeatureSet tj = algebra::symmetric_difference(ti, p);
      images.insert(tj);
      if (reference_delta(ti, tj) != p)
        fail(r, "uniqueness: operand " + show(p) + " not recovered from t_i=" + show(ti));
    }
    min_images = std::min<std::uint64_t>(min_images, images.size());
    if (images.size() != sets.size())
      fail(r, "bijection: t_i=" + show(ti) + " has " + std::to_string(images.size()) + " images");
    for (const auto& tj : sets) {
      ++pairs;
      const FeatureSet p = algebra::symmetric_difference(ti, tj);
      if (algebra::symmetric_difference(ti, p) != tj)
        fail(r, "round trip: t_i=" + show(ti) + " t_j=" + show(tj));
    }
  }
  r.counts = {{"pairs", pairs}, {"operands_per_base", sets.size()}, {"distinct_images_min", min_images}};
  r.checks = pairs + sets.size() * sets.size();
  r.seconds = since(t0);
  return r;
}

CheckResult verify_prop2_ledger(const LexiconState& before, const EdgeSpec& edge, const LexiconState& after) {
  CheckResult r;
  r.name = "prop2_ledger";
  r.checks = 1;
  const long expected = edge.edge.formation.process == Process::widen ? 0 : 1;
  const long actual = static_cast<long>(after.live_count()) - static_cast<long>(before.live_count());
  if (actual != expected)
    fail(r, std::string(to_string(edge.edge.formation.process)) + " edge " + edge.derived.id + ": live count changed by " +
                std::to_string(actual) + ", expected " + std::to_string(expected));
  return r;
}

CheckResult verify_prop2_replay(const LexiconState& state) {
  const auto t0 = Clock::now();
  CheckResult r;
  r.name = "prop2_replay";
  LexiconState current;
  std::uint64_t heads = 0, adding = 0, widening = 0;
  for (const auto& id : state.order()) {
    const Edge* e = state.edge(id);
    if (e == nullptr) {
      current = current.add_head(state.item(id), state.head_template(id));
      ++heads;
      continue;
    }
    const EdgeSpec spec{state.item(id), *e};
    LexiconState next = current.apply_formation(spec);
    const CheckResult step = verify_prop2_ledger(current, spec, next);
    if (!step.passed) fail(r, *step.counterexample);
    ++(e->formation.process == Process::widen ? widening : adding);
    current = std::move(next);
  }
  if (current.live_count() != heads + adding)
    fail(r, "final live count " + std::to_string(current.live_count()) + " != heads " + std::to_string(heads) +
                " + item-adding edges " + std::to_string(adding));
  if (current.live_count() != state.live_count()) fail(r, "replayed live count differs from the source state");
  r.counts = {{"heads", heads}, {"adding_edges", adding}, {"widening_edges", widening}};
  r.checks = heads + adding + widening + 1;
  r.seconds = since(t0);
  return r;
}

std::vector<CheckResult> run_suite(std::size_t atoms) {
  if (atoms > kMaxPairAtoms)
    throw Error(Errc::limit, "selfcheck supports at most " + std::to_string(kMaxPairAtoms) + " atoms");
  const UniverseSpec full = UniverseSpec::standard(atoms);
  const UniverseSpec small = UniverseSpec::standard(std::min(atoms, kMaxTripleAtoms));

  std::vector<CheckResult> out;
  out.push_back(verify_group_axioms(small));
  out.push_back(verify_theorem1(full));
  out.push_back(verify_theorem2_lemma31(full));

  const auto t0 = Clock::now();
  const CheckResult broken = verify_group_axioms(small, algebra::set_union);
  CheckResult control;
  control.name = "control_union_rejected";
  control.checks = broken.checks;
  const bool caught = !broken.passed && broken.counterexample->rfind("inverse", 0) == 0;
  // With no atoms there is nothing for union to get wrong.
  control.passed = caught || small.atoms.empty();
  if (!control.passed) control.counterexample = "union passed the group axioms";
  control.seconds = since(t0);
  out.push_back(control);
  return out;
}

}  // namespace tbmc::oracle
