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
#include "tbmc/estimator.hpp"

using namespace tbmc;
using namespace tbmc::test;

namespace {

EstimationReport run(const std::string& text, const EstimationFilter& f = {}) {
  return estimate_initial_templates(corpus::load_text(text).engine(), f);
}

const char* kC = " cogset=C template={N,+SG,-PL,-M,+F,-COL,+SING}";
const char* kCm = " cogset=C template={N,+SG,-PL,+M,-F,-COL,+SING}";

std::string item(const std::string& id, const char* body, const std::string& extra = "") {
  return "item id=" + id + " lang=riffian radical=\"" + id + "\"" + body + extra + "\n";
}

}  // namespace

TEST_CASE("mode per cognitive set") {
  const auto r = run(item("a", kC, " typical=true") + item("b", kC, " typical=true") + item("c", kCm, " typical=true"));
  const auto* c = r.find("C");
  REQUIRE(c);
  CHECK(c->status == EstimationEntry::Status::winner);
  CHECK(canonical_render(*c->winner) == "{N, +SG, -PL, -M, +F, -COL, +SING}");
  CHECK(c->sample_size == 3);
  CHECK(c->histogram.at("{N, +SG, -PL, -M, +F, -COL, +SING}") == 2);
  CHECK(r.complete());
}

TEST_CASE("singleton group") {
  const auto r = run(item("a", kCm, " recent_loan=true"));
  CHECK(r.find("C")->sample_size == 1);
  CHECK(canonical_render(*r.find("C")->winner) == "{N, +SG, -PL, +M, -F, -COL, +SING}");
}

TEST_CASE("ties assert no winner") {
  const auto r = run(item("a", kC, " typical=true") + item("b", kCm, " typical=true"));
  CHECK(r.find("C")->status == EstimationEntry::Status::tie);
  CHECK_FALSE(r.find("C")->winner);
  CHECK_FALSE(r.complete());
}

TEST_CASE("filtered-out groups report insufficient data") {
  const auto r = run(item("a", kC) + item("b", kC, " typical=true common=true"));
  const auto* c = r.find("C");
  REQUIRE(c);
  CHECK(c->status == EstimationEntry::Status::insufficient_data);
  CHECK(c->excluded == 2);
  CHECK(to_string(c->status) == "insufficient data for cognitive set");
}

TEST_CASE("unfiltered sets ignore flags") {
  const auto r = run(item("a", " cogset=NA template={N,+SG,-PL,+M,-F,-COL,+SING}"));
  CHECK(r.find("NA")->status == EstimationEntry::Status::winner);
}

TEST_CASE("excluding one item never changes another item's count") {
  const std::string base = item("a", kC, " typical=true") + item("b", kC, " typical=true") + item("c", kCm, " typical=true");
  const auto before = run(base);
  const auto after = run(base + item("d", kCm, " typical=true common=true"));
  CHECK(before.find("C")->histogram == after.find("C")->histogram);
  CHECK(after.find("C")->excluded == before.find("C")->excluded + 1);
}

TEST_CASE("language filter") {
  const std::string text = item("a", kC, " typical=true") +
                           "item id=s lang=french radical=\"s\" cogset=C template={N,+SG,-PL,+M,-F,+DEF,-COL} typical=true\n";
  CHECK(estimate_initial_templates(corpus::load_text(text).engine(), {}, "french").find("C")->sample_size == 1);
  CHECK(estimate_initial_templates(corpus::load_text(text).engine(), {}, "").entries.size() == 1);
}

TEST_CASE("unknown filter flags are rejected") {
  EstimationFilter f;
  f.exclude = {"rare"};
  CHECK_THROWS(run(item("a", kC, " typical=true"), f));
}
