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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tbmc/corpus.hpp"
#include "tbmc/estimator.hpp"
#include "tbmc/oracle.hpp"
#include "tbmc/realizer.hpp"

namespace {

using namespace tbmc;
namespace tc = tbmc::corpus;
using Clock = std::chrono::steady_clock;

constexpr double kExampleBudgetSeconds = 1.0;
constexpr double kOracleBudgetSeconds = 10.0;
constexpr double kMinRuleMatchRatio = 0.80;
constexpr int kReplayEdges = 100;
constexpr int kReplayRuns = 20;
constexpr unsigned kReplaySeed = 20260415;

std::string fixture(const std::string& name) { return std::string(TBMC_DATA_DIR) + "/" + name; }

// Collects failed conditions for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string render(const FeatureSet& body, const char* profile) {
  const auto reg = ProfileRegistry::with_defaults();
  return canonical_render(Template::make(body, reg.get(profile)));
}

void criterion1(Check& c) {
  struct Case {
    const char* item;
    const char* profile;
    const char* base;
    const char* operand;
    const char* printed;
  };
  const std::vector<Case> cases{
      {"sole", "french", "{N,+SG,-PL,+M,-F,+DEF,-COL}", "{-F,+M,+F,-M}", "{N,+SG,-PL,-M,+F,+DEF,-COL}"},
      {"memoire_2", "french", "{N,+SG,-PL,-M,+F,+DEF,-COL}", "{-F,+M,+F,-M}", "{N,+SG,-PL,+M,-F,+DEF,-COL}"},
      {"hexagone_2", "french", "{N,+SG,-PL,+M,-F,+DEF,-COL}", "∅", "{N,+SG,-PL,+M,-F,+DEF,-COL}"},
      {"kemaf_1", "riffian", "{N,+SG,-PL,+M,-F,-COL,+SING}", "{-F,+M,+F,-M}", "{N,+SG,-PL,-M,+F,-COL,+SING}"},
      {"venza_1", "riffian", "{N,+SG,-PL,-M,+F,-COL,+SING}", "{-F,+M,+F,-M}", "{N,+SG,-PL,+M,-F,-COL,+SING}"},
      {"mhawad_1", "riffian", "{N,+SG,-PL,+M,-F,-COL,+SING}", "∅", "{N,+SG,-PL,+M,-F,-COL,+SING}"},
  };
  const auto t0 = Clock::now();
  const auto engine = tc::load_file(fixture("french_example1.tbmc")).engine();
  for (const auto& k : cases) {
    const std::string printed = render(FeatureSet::parse(k.printed), k.profile);
    const FeatureSet direct = algebra::symmetric_difference(FeatureSet::parse(k.base), FeatureSet::parse(k.operand));
    c.equal(render(direct, k.profile), printed, std::string(k.item) + " by Δ");
    c.equal(canonical_render(engine.transfer(k.item).derived), printed, std::string(k.item) + " by the engine");
  }
  const double s = seconds_since(t0);
  c.expect(s < kExampleBudgetSeconds, "runtime " + std::to_string(s) + " s");
  c.detail = "6 cases";
}

void criterion2(Check& c) {
  const auto fr = tc::load_file(fixture("french_example1.tbmc")).engine();
  c.equal(fr.record("gland_2").to_string(), std::string("{CONV, {N, +SG, -PL, +M, -F, +DEF, -COL}, C, gland_1}"),
          "gland_2 record");
  c.equal(canonical_render(fr.transfer("gland_2").derived), std::string("{N, +SG, -PL, -M, +F, +DEF, -COL}"),
          "gland_2 template");
  const auto app = tc::load_file(fixture("samer_conversion.tbmc")).engine();
  c.equal(canonical_render(app.transfer("sam:er_1").derived), std::string("{N, +SG, -PL, -M, +F, +COL, -SING}"),
          "sam:er_1 template");
  c.equal(app.record("sam:er_2").to_string(), std::string("{CONV, {N, +SG, -PL, -M, +F, +COL, -SING}, C, sam:er_1}"),
          "sam:er_2 record");
  c.equal(canonical_render(app.transfer("sam:er_2").derived), std::string("{N, +SG, -PL, +M, -F, +COL, -SING}"),
          "sam:er_2 template");
  c.detail = "gland, sam:er";
}

void criterion3(Check& c) {
  const auto loaded = tc::load_file(fixture("riffian_fig2.tbmc"));
  const auto r = tc::validate(loaded);
  c.equal(r.template_mismatches(), std::size_t{0}, "template mismatches");
  c.expect(r.failures.empty(), "derivation failures");
  c.expect(r.templates.size() >= 29, "expectation count " + std::to_string(r.templates.size()));
  std::size_t overrides = 0;
  for (const auto& id : loaded.state.order())
    if (const Edge* e = loaded.state.edge(id); e && e->gradcond == std::optional<std::string>("R3")) ++overrides;
  c.equal(overrides, std::size_t{3}, "R3 overrides");
  c.detail = std::to_string(r.templates.size()) + " expectations";
}

void criterion4(Check& c) {
  const auto engine = tc::load_file(fixture("table3_estimation.tbmc")).engine();
  const auto r = estimate_initial_templates(engine, EstimationFilter{});
  const std::vector<std::pair<const char*, const char*>> expected_winners{
      {"C", "{N, +SG, -PL, -M, +F, -COL, +SING}"},
      {"U", "{N, +SG, -PL, -M, +F, +COL, -SING}"},
      {"NA", "{N, +SG, -PL, +M, -F, -COL, +SING}"},
  };
  c.equal(r.entries.size(), expected_winners.size(), "cognitive sets");
  for (const auto& [set, want] : expected_winners) {
    const auto* e = r.find(set);
    if (!e || !e->winner) {
      c.expect(false, std::string("no winner for ") + set);
      continue;
    }
    c.equal(canonical_render(*e->winner), std::string(want), set);
  }
  c.expect(r.complete(), "ties or missing data");
  c.detail = "C, U, NA";
}

void criterion5(Check& c) {
  const auto reg = ProfileRegistry::with_defaults();
  c.equal(enumerate_candidates(*reg.get("riffian")).size(), std::size_t{64}, "riffian candidates");
  c.equal(enumerate_candidates(*reg.get("riffian"), true).size(), std::size_t{8}, "riffian well-formed");
  for (const auto& id : reg.ids()) {
    auto filtered = enumerate_candidates(*reg.get(id), true);
    auto built = construct_well_formed(*reg.get(id));
    std::sort(filtered.begin(), filtered.end());
    std::sort(built.begin(), built.end());
    c.expect(filtered == built, id + ": filter differs from construction");
  }
  c.detail = "64 / 8; french " + std::to_string(construct_well_formed(*reg.get("french")).size());
}

void criterion6(Check& c) {
  const auto t0 = Clock::now();
  const auto results = oracle::run_suite(oracle::kMaxPairAtoms);
  const double s = seconds_since(t0);
  for (const auto& r : results) c.expect(r.passed, r.name + ": " + r.counterexample.value_or(""));
  c.expect(s < kOracleBudgetSeconds, "runtime " + std::to_string(s) + " s");
  std::uint64_t checks = 0;
  for (const auto& r : results) checks += r.checks;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%llu checks, %.2f s", static_cast<unsigned long long>(checks), s);
  c.detail = buf;
}

void criterion7(Check& c) {
  const auto profiles = ProfileRegistry::with_defaults();
  const auto initials = InitialTemplateRegistry::with_defaults(profiles);
  const auto rules = RuleRegistry::defaults();
  const ProfilePtr rif = profiles.get("riffian");
  std::vector<Template> all;
  for (auto& b : construct_well_formed(*rif)) all.push_back(Template::make(std::move(b), rif));

  for (const auto& t : all) {
    ShiftRecord r;
    r.formation = Formation::conv();
    r.base_template = t;
    r.base_item = "x";
    r.target = "C";
    r.language = "riffian";
    r.base_template = apply_gradient(rules, r, profiles, initials).derived;
    c.expect(apply_gradient(rules, r, profiles, initials).derived == t, "R1 involution");
  }

  std::size_t pairs = 0;
  for (const auto& ti : all) {
    for (const auto& tj : all) {
      ++pairs;
      c.expect(algebra::symmetric_difference(ti.body(), solve_operand(ti, tj)) == tj.body(), "apply∘solve");
    }
    for (const auto& cand : enumerate_candidates(*rif)) {
      const FeatureSet p = cand.without_categories();
      ++pairs;
      c.expect(algebra::symmetric_difference(ti.body(), algebra::symmetric_difference(ti.body(), p)) == p,
               "solve∘apply");
    }
  }

  std::mt19937 rng(kReplaySeed);
  const std::vector<std::string> sets{"C", "U", "NA", "NAdr"};
  std::size_t edges = 0, widens = 0;
  for (int run = 0; run < kReplayRuns; ++run) {
    LexiconState s;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      Item it;
      it.id = it.radical = "h" + std::to_string(i);
      it.language = "riffian";
      it.cognitive_set = sets[i];
      s = s.add_head(it, all[rng() % all.size()]);
    }
    const std::size_t initial = s.live_count();
    std::size_t conversions = 0;
    for (int e = 0; e < kReplayEdges; ++e) {
      const auto live = s.live_ids();
      Item d;
      d.id = d.radical = "e" + std::to_string(e);
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
      c.expect(oracle::verify_prop2_ledger(s, spec, next).passed, "ledger step");
      if (edge.formation.process == Process::widen) {
        ++widens;
      } else {
        ++conversions;
      }
      ++edges;
      s = next;
    }
    c.equal(s.live_count() - initial, conversions, "live-count ledger");
    const Engine eng(s, rules, profiles, initials);
    for (const auto& id : s.order()) {
      const Edge* e = s.edge(id);
      if (e && e->formation.process == Process::widen)
        c.expect(eng.transfer(id).derived == eng.transfer(*e->base).derived, "WIDEN preservation of " + id);
    }
  }
  c.detail = std::to_string(pairs) + " algebra pairs, " + std::to_string(edges) + " edges (" + std::to_string(widens) +
             " WIDEN)";
}

void criterion8(Check& c) {
  const auto t2 = tc::load_file(fixture("riffian_number_gender.tbmc"));
  const auto a2 = realization_audit(t2.engine(), t2.expected_surfaces());
  c.equal(a2.count(AuditClass::rule_match), std::size_t{4}, "number and gender rule matches");

  std::size_t total = 0, rule = 0, over = 0, bad = 0;
  for (const char* name : {"riffian_fig2.tbmc", "table3_estimation.tbmc"}) {
    const auto k = tc::load_file(fixture(name));
    const auto a = realization_audit(k.engine(), k.expected_surfaces());
    total += a.entries.size();
    rule += a.count(AuditClass::rule_match);
    over += a.count(AuditClass::override_used);
    bad += a.count(AuditClass::mismatch);
  }
  c.equal(bad, std::size_t{0}, "silent mismatches");
  c.equal(rule + over, total, "classified surfaces");
  const double ratio = total ? static_cast<double>(rule) / static_cast<double>(total) : 0.0;
  c.expect(ratio >= kMinRuleMatchRatio, "rule-match ratio " + std::to_string(ratio));
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu/%zu rule-match (%.1f%%), %zu override-used", rule, total, ratio * 100.0, over);
  c.detail = buf;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(TBMC_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  out += "\n<exit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + ">";
  return out;
}

void criterion9(Check& c) {
  const std::vector<std::string> fixtures{"riffian_fig2.tbmc", "french_example1.tbmc", "table3_estimation.tbmc",
                                          "riffian_number_gender.tbmc", "samer_conversion.tbmc"};
  std::vector<std::string> cmds{
      "solve --base '{N,+SG,-PL,+M,-F,-COL,+SING}' --result '{N,+SG,-PL,-M,+F,-COL,+SING}'",
      "enumerate --profile riffian",
      "enumerate --profile french --well-formed",
      "selfcheck",
      "estimate " + fixture("table3_estimation.tbmc"),
      "derive " + fixture("french_example1.tbmc") + " gland_2",
      "derive " + fixture("riffian_fig2.tbmc") + " --base rgaz --via CONV --target U",
      "trace " + fixture("riffian_fig2.tbmc") + " ndah_1",
  };
  for (const auto& f : fixtures) {
    cmds.push_back("validate " + fixture(f));
    cmds.push_back("serialize " + fixture(f));
  }
  std::size_t runs = 0;
  for (const auto& fmt : {"text", "records"}) {
    for (const auto& cmd : cmds) {
      const std::string full = std::string("--format ") + fmt + " " + cmd;
      c.expect(run_cli(full) == run_cli(full), "output differs: " + full);
      runs += 2;
    }
  }
  for (const auto& f : fixtures) {
    const auto first = tc::parse(tc::read_file(fixture(f)));
    const auto second = tc::parse(tc::serialize(first.document));
    c.expect(first.ok() && second.ok() && first.document == second.document, "round trip: " + f);
  }
  c.detail = std::to_string(runs) + " CLI runs, " + std::to_string(fixtures.size()) + " round trips";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"French and Riffian symmetric differences", criterion1},
      {"worked examples: gland and sam:er", criterion2},
      {"Riffian process chains validate", criterion3},
      {"initial templates recovered by estimation", criterion4},
      {"enumeration counts", criterion5},
      {"oracle suite", criterion6},
      {"property suite", criterion7},
      {"realizer fidelity", criterion8},
      {"determinism and round trip", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
    for (const auto& f : c.failures) std::cout << "    " << f << '\n';
  }
  std::cout << (failed ? "acceptance: FAIL\n" : "acceptance: PASS\n");
  return failed ? 1 : 0;
}
