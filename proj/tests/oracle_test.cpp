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

#include "support.hpp"
#include "tbmc/error.hpp"
#include "tbmc/oracle.hpp"

using namespace tbmc;
using namespace tbmc::oracle;
using tbmc::test::fs;

namespace {

std::uint64_t count_of(const CheckResult& r, const std::string& key) {
  for (const auto& [k, v] : r.counts)
    if (k == key) return v;
  FAIL("missing count " << key);
  return 0;
}

}  // namespace

TEST_CASE("reference delta matches hand-worked cases") {
  CHECK(reference_delta(fs("{+M,-F}"), fs("{+M,-M,+F,-F}")) == fs("{-M,+F}"));
  CHECK(reference_delta(fs("{N,+M}"), fs("{N}")) == fs("{+M}"));
  CHECK(reference_delta(FeatureSet{}, FeatureSet{}).empty());
}

TEST_CASE("universes") {
  CHECK(UniverseSpec::standard(0).subsets().size() == 1);
  CHECK(UniverseSpec::standard(4).subsets().size() == 16);
  CHECK(UniverseSpec::of_names({"A", "B", "C"}).subsets().size() == 8);
  CHECK_THROWS_AS(UniverseSpec::standard(7), Error);
  UniverseSpec dup{{Atom::plus("A"), Atom::plus("A")}};
  CHECK_THROWS_AS(dup.subsets(), Error);
}

TEST_CASE("group axioms hold exhaustively at four atoms") {
  const CheckResult r = verify_group_axioms(UniverseSpec::standard(4));
  CHECK(r.passed);
  CHECK(count_of(r, "associativity") == 4096);
}

TEST_CASE("group axioms reject union as the operation") {
  const CheckResult r = verify_group_axioms(UniverseSpec::standard(2), algebra::set_union);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->rfind("inverse", 0) == 0);
}

TEST_CASE("group axioms reject a non-commutative operation") {
  const DeltaOp left = [](const FeatureSet& a, const FeatureSet&) { return a; };
  CHECK_FALSE(verify_group_axioms(UniverseSpec::standard(2), left).passed);
}

TEST_CASE("equivalence and bijection checks at six atoms") {
  const CheckResult t1 = verify_theorem1(UniverseSpec::standard(6));
  CHECK(t1.passed);
  CHECK(t1.checks == 4096);
  const CheckResult t2 = verify_theorem2_lemma31(UniverseSpec::standard(6));
  CHECK(t2.passed);
  CHECK(count_of(t2, "distinct_images_min") == 64);
  CHECK(t2.checks == 8192);
}

TEST_CASE("universe caps") {
  UniverseSpec five = UniverseSpec::of_names({"A", "B", "C", "D", "E"});
  CHECK_THROWS_AS(verify_group_axioms(five), Error);
  CHECK_NOTHROW(verify_theorem1(five));
  CHECK_THROWS_AS(verify_theorem1(UniverseSpec::of_names({"A", "B", "C", "D", "E", "F", "G"})), Error);
  CHECK_THROWS_AS(run_suite(7), Error);
}

TEST_CASE("suite layout") {
  const auto results = run_suite(6);
  REQUIRE(results.size() == 4);
  CHECK(results[0].name == "group_axioms");
  CHECK(results[1].name == "theorem1_equivalence_closure");
  CHECK(results[2].name == "theorem2_lemma31");
  CHECK(results[3].name == "control_union_rejected");
  for (const auto& r : results) CHECK(r.passed);
  for (const auto& r : run_suite(0)) CHECK(r.passed);
}

TEST_CASE("prop2 ledger on single edges") {
  Item a;
  a.id = a.radical = "a";
  a.language = "riffian";
  a.cognitive_set = "C";
  const LexiconState s0 = LexiconState().add_head(a, std::nullopt);
  Item b = a;
  b.id = "b";
  const EdgeSpec conv{b, Edge{"a", Formation::conv(), std::nullopt}};
  CHECK(verify_prop2_ledger(s0, conv, s0.apply_formation(conv)).passed);
  const EdgeSpec widen{b, Edge{"a", Formation::widen(), std::nullopt}};
  CHECK(verify_prop2_ledger(s0, widen, s0.apply_formation(widen)).passed);
  CHECK_FALSE(verify_prop2_ledger(s0, conv, s0).passed);
}
