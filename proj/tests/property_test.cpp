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

#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tbmc/oracle.hpp"
#include "tbmc/realizer.hpp"

using namespace tbmc;
using namespace tbmc::test;

namespace {

std::vector<Template> well_formed_riffian() {
  std::vector<Template> out;
  for (auto& body : construct_well_formed(*riffian())) out.push_back(Template::make(std::move(body), riffian()));
  return out;
}

std::vector<FeatureSet> operands() {
  std::vector<FeatureSet> out;
  for (const auto& c : enumerate_candidates(*riffian())) out.push_back(c.without_categories());
  return out;
}

Engine engine_for(LexiconState s) {
  const auto profiles = ProfileRegistry::with_defaults();
  return Engine(std::move(s), RuleRegistry::defaults(), profiles, InitialTemplateRegistry::with_defaults(profiles));
}

std::string segment(const SurfaceForm& f, const std::string& label) {
  for (const auto& m : f.segments)
    if (m.label == label) return m.text;
  return "";
}

}  // namespace

TEST_CASE("R1 is an involution on every well-formed template") {
  const auto rules = RuleRegistry::defaults();
  const auto profiles = ProfileRegistry::with_defaults();
  const auto init = InitialTemplateRegistry::with_defaults(profiles);
  const auto all = well_formed_riffian();
  REQUIRE(all.size() == 8);
  for (const auto& t : all) {
    ShiftRecord r;
    r.formation = Formation::conv();
    r.base_template = t;
    r.base_item = "x";
    r.target = "C";
    r.language = "riffian";
    const ShiftResult once = apply_gradient(rules, r, profiles, init);
    CHECK(once.rule_id == "R1");
    CHECK_FALSE(once.derived == t);
    r.base_template = once.derived;
    CHECK(apply_gradient(rules, r, profiles, init).derived == t);
  }
}

TEST_CASE("apply after solve is the identity") {
  const auto all = well_formed_riffian();
  for (const auto& ti : all)
    for (const auto& tj : all) CHECK(algebra::symmetric_difference(ti.body(), solve_operand(ti, tj)) == tj.body());
}

TEST_CASE("solve after apply recovers every operand") {
  const auto all = well_formed_riffian();
  const auto ps = operands();
  REQUIRE(ps.size() == 64);
  for (const auto& ti : all) {
    for (const auto& p : ps) {
      const FeatureSet tj = algebra::symmetric_difference(ti.body(), p);
      CHECK(oracle::reference_delta(ti.body(), tj) == p);
      if (validate(tj, *riffian()).empty()) {
        CHECK(solve_operand(ti, Template::make(tj, riffian())) == p);
      }
    }
  }
}

TEST_CASE("solve after apply on the well-formed flip operands") {
  const auto all = well_formed_riffian();
  for (const auto& ti : all) {
    for (const auto& tj : all) {
      const FeatureSet p = solve_operand(ti, tj);
      const Template back = Template::make(algebra::symmetric_difference(ti.body(), p), riffian());
      CHECK(solve_operand(ti, back) == p);
    }
  }
}

TEST_CASE("solve is injective for a fixed base") {
  const auto all = well_formed_riffian();
  for (const auto& ti : all) {
    std::set<FeatureSet> images;
    for (const auto& tj : all) images.insert(solve_operand(ti, tj));
    CHECK(images.size() == all.size());
  }
}

TEST_CASE("random replays keep the ledger, preserve widened templates and stay well-formed") {
  std::mt19937 rng(20260415);
  const std::vector<std::string> sets{"C", "U", "NA", "NAdr"};
  for (int run = 0; run < 5; ++run) {
    LexiconState s;
    std::vector<Template> heads = well_formed_riffian();
    for (std::size_t i = 0; i < 4; ++i) {
      Item it;
      it.id = "h" + std::to_string(i);
      it.radical = it.id;
      it.language = "riffian";
      it.cognitive_set = sets[i];
      s = s.add_head(it, heads[rng() % heads.size()]);
    }
    const std::size_t initial_live = s.live_count();
    std::size_t adding = 0, widening = 0;

    for (int e = 0; e < 100; ++e) {
      const auto live = s.live_ids();
      Item d;
      d.id = "e" + std::to_string(e);
      d.radical = d.id;
      d.language = "riffian";
      d.cognitive_set = sets[rng() % sets.size()];
      d.animate = rng() % 4 == 0;
      Edge edge;
      switch (rng() % 4) {
        case 0: edge.formation = Formation::conv(); break;
        case 1: edge.formation = Formation::mderiv(); break;
        case 2: edge.formation = Formation::widen(); break;
        default: edge.formation = Formation::borrow(rng() % 2 ? "M" : "F"); break;
      }
      if (edge.formation.process != Process::borrow || rng() % 2) edge.base = live[rng() % live.size()];
      const EdgeSpec spec{d, edge};
      const LexiconState next = s.apply_formation(spec);
      CHECK(oracle::verify_prop2_ledger(s, spec, next).passed);
      ++(edge.formation.process == Process::widen ? widening : adding);
      s = next;
    }
    CHECK(s.live_count() == initial_live + adding);
    CHECK(oracle::verify_prop2_replay(s).passed);

    const Engine eng = engine_for(s);
    for (const auto& id : s.order()) {
      const ShiftResult r = eng.transfer(id);
      CHECK(validate(r.derived.body(), r.derived.profile()).empty());
      const Edge* e = s.edge(id);
      if (e && e->formation.process == Process::widen) CHECK(r.derived == eng.transfer(*e->base).derived);
    }
    CHECK(widening > 0);
  }
}

TEST_CASE("allomorphy is local to the edges of the radical") {
  const std::vector<std::string> radicals{"qzin", "sendu", "rgaz", "funas", "nedhiw", "iʕis", "sam:er"};
  const std::vector<std::string> finals{"a", "t", "w", "r", "u:"};
  const std::vector<std::string> initials{"a", "s", "b", "θ", "k"};
  for (const auto& body : construct_well_formed(*riffian())) {
    const Template t = Template::make(body, riffian());
    for (const auto& rad : radicals) {
      Item it;
      it.id = rad;
      it.language = "riffian";
      it.cognitive_set = "C";
      it.radical = rad;
      const SurfaceForm ref = realize(it, t);
      for (const auto& f : finals) {
        it.radical = rad + f;
        const SurfaceForm x = realize(it, t);
        CHECK(segment(x, "F-prefix") == segment(ref, "F-prefix"));
        CHECK(segment(x, "SING-prefix") == segment(ref, "SING-prefix"));
      }
      for (const auto& i : initials) {
        it.radical = i + rad;
        const SurfaceForm x = realize(it, t);
        CHECK(segment(x, "F-suffix") == segment(ref, "F-suffix"));
        CHECK(segment(x, "PL-suffix") == segment(ref, "PL-suffix"));
        CHECK(segment(x, "SING-prefix") == segment(ref, "SING-prefix"));
      }
    }
  }
}
