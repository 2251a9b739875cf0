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

// tbmc: command-line front end over the C API.
//
// Exit status: 0 success, 1 mismatch or failed check, 2 bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "tbmc/tbmc.h"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct CorpusDeleter {
  void operator()(tbmc_corpus* c) const { tbmc_corpus_free(c); }
};
using CorpusHandle = std::unique_ptr<tbmc_corpus, CorpusDeleter>;

int fail(tbmc_status st) {
  std::cerr << "tbmc: " << tbmc_status_name(st) << ": " << tbmc_last_error() << '\n';
  return (st == TBMC_E_DERIVATION || st == TBMC_E_CYCLE) ? kMismatch : kInputError;
}

// Prints and frees a library string.
void emit(char* s) {
  std::fputs(s, stdout);
  tbmc_string_free(s);
}

int open_corpus(const std::string& path, CorpusHandle& out) {
  tbmc_corpus* c = nullptr;
  const tbmc_status st = tbmc_corpus_load_file(path.c_str(), &c);
  if (st != TBMC_OK) return fail(st);
  out.reset(c);
  return kOk;
}

const char* or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Template shifts of derived lexical items: derive, solve, trace, estimate and self-check."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tbmc_version()));

  std::string format = "text";
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "records"}))->capture_default_str();

  std::string corpus_path;
  std::string item;

  auto* validate = app.add_subcommand("validate", "Check every expectation of a corpus");
  validate->add_option("corpus", corpus_path, "Corpus file (.tbmc)")->required();

  std::string base, via, target, donor_gender, gradcond;
  bool animate = false;
  auto* derive = app.add_subcommand("derive", "Template of a corpus item, or of an ad hoc derivation");
  derive->add_option("corpus", corpus_path, "Corpus file (.tbmc)")->required();
  derive->add_option("item", item, "Item id");
  auto* base_opt = derive->add_option("--base", base, "Base item of an ad hoc derivation");
  derive->add_option("--via", via, "CONV, MDERIV, WIDEN or BORROW")
      ->check(CLI::IsMember({"CONV", "MDERIV", "WIDEN", "BORROW"}));
  derive->add_option("--target", target, "Target cognitive set, or V");
  derive->add_option("--animate", animate, "Animacy of the derived item (true|false)");
  derive->add_option("--donor-gender", donor_gender, "M or F, for BORROW")->check(CLI::IsMember({"M", "F"}));
  derive->add_option("--gradcond", gradcond, "Force a gradient condition by id");

  std::string solve_base, solve_result;
  auto* solve = app.add_subcommand("solve", "Operand p such that base Δ p = result");
  solve->add_option("--base", solve_base, "Base template, e.g. {N,+SG,-PL,...}")->required();
  solve->add_option("--result", solve_result, "Derived template")->required();

  auto* trace = app.add_subcommand("trace", "Phylotemplatic tree through an item");
  trace->add_option("corpus", corpus_path, "Corpus file (.tbmc)")->required();
  trace->add_option("item", item, "Item id")->required();

  std::string profile;
  bool well_formed = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the candidate templates of a profile");
  enumerate->add_option("--profile", profile, "Profile name")->required();
  enumerate->add_flag("--well-formed", well_formed, "Only templates that pass validation");
  enumerate->add_option("corpus", corpus_path, "Corpus declaring extra profiles");

  std::string require_any_of, exclude, unfiltered, language = "riffian";
  bool set_require = false, set_exclude = false, set_unfiltered = false;
  auto* estimate = app.add_subcommand("estimate", "Estimate the initial template of each cognitive set");
  estimate->add_option("corpus", corpus_path, "Corpus file (.tbmc)")->required();
  auto* req_opt = estimate->add_option("--require-any-of", require_any_of, "Keep items with one of these flags");
  auto* exc_opt = estimate->add_option("--exclude", exclude, "Drop items with any of these flags");
  auto* unf_opt = estimate->add_option("--unfiltered", unfiltered, "Cognitive sets tallied without filtering");
  estimate->add_option("--language", language, "Language to tally (empty: all)")->capture_default_str();

  unsigned atoms = 6;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the exhaustive oracle suite");
  selfcheck->add_option("--atoms", atoms, "Universe size (group axioms use at most 4)")->capture_default_str();

  auto* serialize = app.add_subcommand("serialize", "Print a corpus in canonical form");
  serialize->add_option("corpus", corpus_path, "Corpus file (.tbmc)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  set_require = req_opt->count() > 0;
  set_exclude = exc_opt->count() > 0;
  set_unfiltered = unf_opt->count() > 0;

  const tbmc_format fmt = format == "records" ? TBMC_FORMAT_RECORDS : TBMC_FORMAT_TEXT;
  CorpusHandle corpus;
  char* out = nullptr;

  if (validate->parsed()) {
    if (int rc = open_corpus(corpus_path, corpus)) return rc;
    int all_match = 0;
    const tbmc_status st = tbmc_validate(corpus.get(), fmt, &out, &all_match);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return all_match ? kOk : kMismatch;
  }

  if (derive->parsed()) {
    const bool adhoc = base_opt->count() > 0 || !via.empty();
    if (adhoc == !item.empty()) {
      std::cerr << "tbmc: derive takes either an item id or --via (with --base)\n";
      return kInputError;
    }
    if (adhoc && via.empty()) {
      std::cerr << "tbmc: --via is required for an ad hoc derivation\n";
      return kInputError;
    }
    if (int rc = open_corpus(corpus_path, corpus)) return rc;
    tbmc_status st;
    if (adhoc) {
      tbmc_derive_request req{or_null(base), via.c_str(), or_null(target), animate ? 1 : 0, or_null(donor_gender),
                              or_null(gradcond)};
      st = tbmc_derive_adhoc(corpus.get(), &req, fmt, &out);
    } else {
      st = tbmc_derive_item(corpus.get(), item.c_str(), fmt, &out);
    }
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return kOk;
  }

  if (solve->parsed()) {
    const tbmc_status st = tbmc_solve(solve_base.c_str(), solve_result.c_str(), fmt, &out);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return kOk;
  }

  if (trace->parsed()) {
    if (int rc = open_corpus(corpus_path, corpus)) return rc;
    const tbmc_status st = tbmc_trace(corpus.get(), item.c_str(), fmt, &out);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return kOk;
  }

  if (enumerate->parsed()) {
    if (!corpus_path.empty())
      if (int rc = open_corpus(corpus_path, corpus)) return rc;
    const tbmc_status st = tbmc_enumerate(corpus.get(), profile.c_str(), well_formed ? 1 : 0, fmt, &out, nullptr);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return kOk;
  }

  if (estimate->parsed()) {
    if (int rc = open_corpus(corpus_path, corpus)) return rc;
    tbmc_estimate_filter filter{set_require ? require_any_of.c_str() : nullptr,
                                set_exclude ? exclude.c_str() : nullptr,
                                set_unfiltered ? unfiltered.c_str() : nullptr, language.c_str()};
    int complete = 0;
    const tbmc_status st = tbmc_estimate(corpus.get(), &filter, fmt, &out, &complete);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return complete ? kOk : kMismatch;
  }

  if (selfcheck->parsed()) {
    int passed = 0;
    const tbmc_status st = tbmc_selfcheck(atoms, fmt, &out, &passed);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return passed ? kOk : kMismatch;
  }

  if (serialize->parsed()) {
    if (int rc = open_corpus(corpus_path, corpus)) return rc;
    const tbmc_status st = tbmc_serialize(corpus.get(), &out);
    if (st != TBMC_OK) return fail(st);
    emit(out);
    return kOk;
  }
  return kInputError;
}
