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

#include "tbmc/tbmc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "tbmc/corpus.hpp"
#include "tbmc/estimator.hpp"
#include "tbmc/oracle.hpp"
#include "tbmc/realizer.hpp"
#include "tbmc/report.hpp"
#include "tbmc/text.hpp"

struct tbmc_corpus {
  tbmc::corpus::CorpusDocument document;
  tbmc::corpus::LoadedCorpus loaded;
};

namespace {

using namespace tbmc;

thread_local std::string g_last_error;

tbmc_status status_of(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return TBMC_E_INVALID_ARGUMENT;
    case Errc::not_found: return TBMC_E_NOT_FOUND;
    case Errc::validation: return TBMC_E_VALIDATION;
    case Errc::derivation: return TBMC_E_DERIVATION;
    case Errc::cycle: return TBMC_E_CYCLE;
    case Errc::limit: return TBMC_E_LIMIT;
  }
  return TBMC_E_INTERNAL;
}

template <typename F>
tbmc_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return TBMC_OK;
  } catch (const corpus::CorpusError& e) {
    g_last_error = e.what();
    return TBMC_E_PARSE;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return TBMC_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(Errc::invalid_argument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

report::Format fmt(tbmc_format f) {
  if (f == TBMC_FORMAT_TEXT) return report::Format::text;
  if (f == TBMC_FORMAT_RECORDS) return report::Format::records;
  throw Error(Errc::invalid_argument, "unknown output format");
}

std::set<std::string> split_list(const char* s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const std::string item(text::trim(part));
    if (!item.empty()) out.insert(item);
  }
  return out;
}

std::optional<std::string> opt(const char* s) {
  if (s == nullptr || *s == '\0') return std::nullopt;
  return std::string(s);
}

std::optional<SurfaceForm> try_realize(const Item& item, const Template& t) {
  if (item.is_verb()) return std::nullopt;
  try {
    return realize(item, t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

extern "C" {

const char* tbmc_version(void) { return "0.1.0"; }

const char* tbmc_last_error(void) { return g_last_error.c_str(); }

const char* tbmc_status_name(tbmc_status status) {
  switch (status) {
    case TBMC_OK: return "ok";
    case TBMC_E_INVALID_ARGUMENT: return "invalid argument";
    case TBMC_E_NOT_FOUND: return "not found";
    case TBMC_E_VALIDATION: return "validation error";
    case TBMC_E_DERIVATION: return "derivation error";
    case TBMC_E_CYCLE: return "cycle";
    case TBMC_E_LIMIT: return "limit exceeded";
    case TBMC_E_PARSE: return "parse error";
    case TBMC_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void tbmc_string_free(char* s) { std::free(s); }

tbmc_status tbmc_corpus_load_text(const char* text, size_t length, tbmc_corpus** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (text == nullptr && length != 0) throw Error(Errc::invalid_argument, "text must not be NULL");
    auto parsed = corpus::parse(std::string_view(text == nullptr ? "" : text, length));
    if (!parsed.ok()) throw corpus::CorpusError(std::move(parsed.errors));
    auto handle = std::make_unique<tbmc_corpus>();
    handle->loaded = corpus::load(parsed.document);
    handle->document = std::move(parsed.document);
    *out = handle.release();
  });
}

tbmc_status tbmc_corpus_load_file(const char* path, tbmc_corpus** out) {
  std::string content;
  const tbmc_status st = guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    content = corpus::read_file(path);
  });
  if (st != TBMC_OK) return st;
  return tbmc_corpus_load_text(content.data(), content.size(), out);
}

void tbmc_corpus_free(tbmc_corpus* corpus) { delete corpus; }

size_t tbmc_corpus_live_count(const tbmc_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->loaded.state.live_count();
}

tbmc_status tbmc_validate(const tbmc_corpus* corpus, tbmc_format format, char** out, int* all_match) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    const auto report = corpus::validate(corpus->loaded);
    *out = dup(report::render_validation(report, fmt(format)));
    if (all_match) *all_match = report.ok() ? 1 : 0;
  });
}

tbmc_status tbmc_derive_item(const tbmc_corpus* corpus, const char* id, tbmc_format format, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(id, "id");
    require(out, "out");
    const Engine engine = corpus->loaded.engine();
    const Item& item = engine.state().item(id);
    const ShiftRecord record = engine.record(id);
    const ShiftResult result = engine.transfer(id);
    *out = dup(report::render_derivation(item, record, result, try_realize(item, result.derived), fmt(format)));
  });
}

tbmc_status tbmc_derive_adhoc(const tbmc_corpus* corpus, const tbmc_derive_request* request, tbmc_format format,
                              char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(request, "request");
    require(request->via, "request->via");
    require(out, "out");
    corpus::AdhocRequest r;
    r.base = request->base ? request->base : "";
    r.via = parse_process(request->via);
    r.target = opt(request->target);
    r.animate = request->animate != 0;
    r.donor_gender = opt(request->donor_gender);
    r.gradcond = opt(request->gradcond);
    const auto res = corpus::derive_adhoc(corpus->loaded, r);
    *out = dup(report::render_derivation(res.item, res.record, res.result, try_realize(res.item, res.result.derived),
                                         fmt(format)));
  });
}

tbmc_status tbmc_solve(const char* base, const char* result, tbmc_format format, char** out) {
  return guarded([&] {
    require(base, "base");
    require(result, "result");
    require(out, "out");
    const ProfileRegistry profiles = ProfileRegistry::with_defaults();
    const FeatureSet b = FeatureSet::parse(base);
    const ProfilePtr profile = profiles.profile_for(b);
    if (!profile) {
      std::string detail;
      for (const auto& id : profiles.ids())
        for (const auto& v : tbmc::validate(b, *profiles.get(id))) detail += "; " + id + ": " + v.message;
      throw Error(Errc::validation, "base is not a well-formed template of any known profile" + detail);
    }
    const Template tb = Template::make(b, profile);
    const Template tr = Template::make(FeatureSet::parse(result), profile);
    *out = dup(report::render_solve(tb, tr, solve_operand(tb, tr), fmt(format)));
  });
}

tbmc_status tbmc_trace(const tbmc_corpus* corpus, const char* id, tbmc_format format, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(id, "id");
    require(out, "out");
    *out = dup(report::render_trace(corpus->loaded.engine().trace(id), fmt(format)));
  });
}

tbmc_status tbmc_enumerate(const tbmc_corpus* corpus, const char* profile, int well_formed, tbmc_format format,
                           char** out, size_t* count) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    const ProfileRegistry defaults = ProfileRegistry::with_defaults();
    const ProfileRegistry& profiles = corpus ? corpus->loaded.profiles : defaults;
    const ProfilePtr p = profiles.get(profile);
    const auto sets = enumerate_candidates(*p, well_formed != 0);
    *out = dup(report::render_enumeration(*p, sets, well_formed != 0, fmt(format)));
    if (count) *count = sets.size();
  });
}

tbmc_status tbmc_estimate(const tbmc_corpus* corpus, const tbmc_estimate_filter* filter, tbmc_format format,
                          char** out, int* complete) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    EstimationFilter f;
    std::string language = "riffian";
    if (filter) {
      if (filter->require_any_of) f.require_any_of = split_list(filter->require_any_of);
      if (filter->exclude) f.exclude = split_list(filter->exclude);
      if (filter->unfiltered) f.unfiltered = split_list(filter->unfiltered);
      if (filter->language) language = filter->language;
    }
    const auto report = estimate_initial_templates(corpus->loaded.engine(), f, language);
    *out = dup(report::render_estimation(report, fmt(format)));
    if (complete) *complete = report.complete() ? 1 : 0;
  });
}

tbmc_status tbmc_selfcheck(unsigned atoms, tbmc_format format, char** out, int* all_passed) {
  return guarded([&] {
    require(out, "out");
    const auto results = oracle::run_suite(atoms);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    *out = dup(report::render_selfcheck(results, fmt(format)));
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

tbmc_status tbmc_serialize(const tbmc_corpus* corpus, char** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(out, "out");
    *out = dup(corpus::serialize(corpus->document));
  });
}

tbmc_status tbmc_symmetric_difference(const char* a, const char* b, char** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = dup(algebra::symmetric_difference(FeatureSet::parse(a), FeatureSet::parse(b)).to_string());
  });
}

}  // extern "C"
