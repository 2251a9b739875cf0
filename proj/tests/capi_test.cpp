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

#include <cstring>
#include <string>

#include "tbmc/tbmc.h"

namespace {

std::string fixture(const char* name) { return std::string(TBMC_DATA_DIR) + "/" + name; }

std::string take(char* s) {
  std::string out = s ? s : "";
  tbmc_string_free(s);
  return out;
}

struct Corpus {
  tbmc_corpus* c = nullptr;
  explicit Corpus(const char* name) { REQUIRE(tbmc_corpus_load_file(fixture(name).c_str(), &c) == TBMC_OK); }
  ~Corpus() { tbmc_corpus_free(c); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(tbmc_version()) == "0.1.0");
  CHECK(std::string(tbmc_status_name(TBMC_OK)) == "ok");
  CHECK(std::string(tbmc_status_name(TBMC_E_PARSE)) == "parse error");
  CHECK(std::string(tbmc_status_name(static_cast<tbmc_status>(99))) == "unknown status");
}

TEST_CASE("null arguments are rejected, never dereferenced") {
  char* out = nullptr;
  CHECK(tbmc_solve(nullptr, "{N}", TBMC_FORMAT_TEXT, &out) == TBMC_E_INVALID_ARGUMENT);
  CHECK(std::string(tbmc_last_error()).find("base") != std::string::npos);
  CHECK(tbmc_validate(nullptr, TBMC_FORMAT_TEXT, &out, nullptr) == TBMC_E_INVALID_ARGUMENT);
  CHECK(tbmc_corpus_load_file(nullptr, nullptr) == TBMC_E_INVALID_ARGUMENT);
  CHECK(tbmc_corpus_live_count(nullptr) == 0);
  tbmc_corpus_free(nullptr);
  tbmc_string_free(nullptr);
}

TEST_CASE("load errors map to status codes") {
  tbmc_corpus* c = nullptr;
  CHECK(tbmc_corpus_load_file(fixture("missing.tbmc").c_str(), &c) == TBMC_E_NOT_FOUND);
  CHECK(c == nullptr);
  const char* bad = "item id=a lang=riffian\n";
  CHECK(tbmc_corpus_load_text(bad, std::strlen(bad), &c) == TBMC_E_PARSE);
  CHECK(std::string(tbmc_last_error()).find("line 1") != std::string::npos);
  CHECK(tbmc_corpus_load_text(nullptr, 0, &c) == TBMC_OK);
  CHECK(tbmc_corpus_live_count(c) == 0);
  tbmc_corpus_free(c);
}

TEST_CASE("validate through the C API") {
  Corpus k("riffian_fig2.tbmc");
  char* out = nullptr;
  int all = 0;
  REQUIRE(tbmc_validate(k.c, TBMC_FORMAT_RECORDS, &out, &all) == TBMC_OK);
  const std::string text = take(out);
  CHECK(all == 1);
  CHECK(text.find("summary\ttemplates=29\ttemplate_mismatches=0") != std::string::npos);
  CHECK(tbmc_corpus_live_count(k.c) > 0);
}

TEST_CASE("derive by item and ad hoc") {
  Corpus k("french_example1.tbmc");
  char* out = nullptr;
  REQUIRE(tbmc_derive_item(k.c, "gland_2", TBMC_FORMAT_TEXT, &out) == TBMC_OK);
  const std::string text = take(out);
  CHECK(text.find("record:   {CONV, {N, +SG, -PL, +M, -F, +DEF, -COL}, C, gland_1}") != std::string::npos);
  CHECK(text.find("template: {N, +SG, -PL, -M, +F, +DEF, -COL}") != std::string::npos);

  CHECK(tbmc_derive_item(k.c, "nope", TBMC_FORMAT_TEXT, &out) == TBMC_E_NOT_FOUND);

  tbmc_derive_request req{"sol", "CONV", "C", 0, nullptr, nullptr};
  REQUIRE(tbmc_derive_adhoc(k.c, &req, TBMC_FORMAT_RECORDS, &out) == TBMC_OK);
  CHECK(take(out).find("\trule=R1\t") != std::string::npos);

  req.gradcond = "R3";
  CHECK(tbmc_derive_adhoc(k.c, &req, TBMC_FORMAT_TEXT, &out) == TBMC_E_DERIVATION);
  req.gradcond = nullptr;
  req.via = "SPLICE";
  CHECK(tbmc_derive_adhoc(k.c, &req, TBMC_FORMAT_TEXT, &out) == TBMC_E_INVALID_ARGUMENT);
}

TEST_CASE("solve, enumerate, symmetric difference") {
  char* out = nullptr;
  REQUIRE(tbmc_solve("{N,+SG,-PL,+M,-F,-COL,+SING}", "{N,+SG,-PL,-M,+F,-COL,+SING}", TBMC_FORMAT_TEXT, &out) ==
          TBMC_OK);
  CHECK(take(out) == "{+M,-M,+F,-F}\n");
  CHECK(tbmc_solve("{N,+SG}", "{N}", TBMC_FORMAT_TEXT, &out) == TBMC_E_VALIDATION);
  CHECK(tbmc_solve("not a set", "{N}", TBMC_FORMAT_TEXT, &out) == TBMC_E_INVALID_ARGUMENT);

  size_t n = 0;
  REQUIRE(tbmc_enumerate(nullptr, "riffian", 0, TBMC_FORMAT_TEXT, &out, &n) == TBMC_OK);
  take(out);
  CHECK(n == 64);
  REQUIRE(tbmc_enumerate(nullptr, "riffian", 1, TBMC_FORMAT_TEXT, &out, &n) == TBMC_OK);
  CHECK(take(out).find("8 well-formed templates") != std::string::npos);
  CHECK(n == 8);
  CHECK(tbmc_enumerate(nullptr, "klingon", 0, TBMC_FORMAT_TEXT, &out, &n) == TBMC_E_NOT_FOUND);
  CHECK(tbmc_enumerate(nullptr, "riffian", 0, static_cast<tbmc_format>(7), &out, &n) == TBMC_E_INVALID_ARGUMENT);

  REQUIRE(tbmc_symmetric_difference("{N,+M,-F}", "{+M,-M,+F,-F}", &out) == TBMC_OK);
  CHECK(take(out) == "{N,+F,-M}");
}

TEST_CASE("estimate with default and custom filters") {
  Corpus k("table3_estimation.tbmc");
  char* out = nullptr;
  int complete = 0;
  REQUIRE(tbmc_estimate(k.c, nullptr, TBMC_FORMAT_TEXT, &out, &complete) == TBMC_OK);
  take(out);
  CHECK(complete == 1);

  tbmc_estimate_filter f{"recent_loan", nullptr, nullptr, "riffian"};
  REQUIRE(tbmc_estimate(k.c, &f, TBMC_FORMAT_TEXT, &out, &complete) == TBMC_OK);
  take(out);
  CHECK(complete == 0);

  tbmc_estimate_filter bad{"rare", nullptr, nullptr, nullptr};
  CHECK(tbmc_estimate(k.c, &bad, TBMC_FORMAT_TEXT, &out, &complete) == TBMC_E_INVALID_ARGUMENT);
}

TEST_CASE("trace, selfcheck, serialize") {
  Corpus k("riffian_fig2.tbmc");
  char* out = nullptr;
  REQUIRE(tbmc_trace(k.c, "samer_2", TBMC_FORMAT_TEXT, &out) == TBMC_OK);
  const std::string tree = take(out);
  CHECK(tree.rfind("sumer  V", 0) == 0);
  CHECK(tree.find("└── ") != std::string::npos);

  int passed = 0;
  REQUIRE(tbmc_selfcheck(4, TBMC_FORMAT_RECORDS, &out, &passed) == TBMC_OK);
  CHECK(take(out).find("summary\tstatus=pass") != std::string::npos);
  CHECK(passed == 1);
  CHECK(tbmc_selfcheck(9, TBMC_FORMAT_TEXT, &out, &passed) == TBMC_E_LIMIT);

  REQUIRE(tbmc_serialize(k.c, &out) == TBMC_OK);
  const std::string text = take(out);
  tbmc_corpus* again = nullptr;
  REQUIRE(tbmc_corpus_load_text(text.data(), text.size(), &again) == TBMC_OK);
  REQUIRE(tbmc_serialize(again, &out) == TBMC_OK);
  CHECK(take(out) == text);
  tbmc_corpus_free(again);
}
