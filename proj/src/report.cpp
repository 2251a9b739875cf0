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

#include "tbmc/report.hpp"

#include <cstdio>
#include <sstream>

namespace tbmc::report {

namespace {

class Record {
 public:
  explicit Record(std::string kind) : line_(std::move(kind)) {}
  Record& operator()(const std::string& key, const std::string& value) {
    line_ += '\t';
    line_ += key;
    line_ += '=';
    line_ += value;
    return *this;
  }
  Record& operator()(const std::string& key, long long value) { return (*this)(key, std::to_string(value)); }
  std::string str() const { return line_ + '\n'; }

 private:
  std::string line_;
};

std::string formation_name(const Formation& f) {
  std::string s(to_string(f.process));
  if (f.donor_gender) s += ":" + *f.donor_gender;
  return s;
}

std::string operand_text(const std::optional<FeatureSet>& op, const Template& t) {
  if (!op) return "-";
  return render_in_profile_order(*op, t.profile(), false);
}

std::string percent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", ratio * 100.0);
  return buf;
}

std::string node_label(const PhyloNode& n) {
  std::string s;
  if (n.formation) s += formation_name(*n.formation) + " ";
  s += n.item + "  ";
  s += n.tmpl ? canonical_render(*n.tmpl) : n.category;
  if (!n.rule_id.empty()) s += "  " + n.rule_id;
  s += "  stratum " + std::to_string(n.stratum);
  if (!n.live) s += "  superseded";
  return s;
}

void tree_text(const PhyloNode& n, const std::string& indent, bool last, bool root, std::ostringstream& os) {
  if (root) {
    os << node_label(n) << '\n';
  } else {
    os << indent << (last ? "└── " : "├── ") << node_label(n) << '\n';
  }
  const std::string next = root ? "" : indent + (last ? "    " : "│   ");
  for (std::size_t i = 0; i < n.children.size(); ++i)
    tree_text(n.children[i], next, i + 1 == n.children.size(), false, os);
}

void tree_records(const PhyloNode& n, const std::string& parent, int depth, std::ostringstream& os) {
  os << Record("node")("item", n.item)("parent", parent.empty() ? "-" : parent)("depth", depth)(
            "via", n.formation ? formation_name(*n.formation) : "-")("category", n.category)(
            "template", n.tmpl ? canonical_render(*n.tmpl) : "-")("rule", n.rule_id.empty() ? "-" : n.rule_id)(
            "stratum", n.stratum)("live", n.live ? "true" : "false")
            .str();
  for (const auto& c : n.children) tree_records(c, n.item, depth + 1, os);
}

}  // namespace

std::string render_validation(const corpus::ValidationReport& r, Format f) {
  std::ostringstream os;
  const auto& audit = r.surfaces;
  if (f == Format::records) {
    for (const auto& t : r.templates)
      os << Record("template")("item", t.item)("line", t.line)("status", t.match ? "match" : "mismatch")(
                "expected", t.expected)("actual", t.actual.empty() ? "-" : t.actual)(
                "rule", t.rule_id.empty() ? "-" : t.rule_id)
                .str();
    for (const auto& e : audit.entries)
      os << Record("surface")("item", e.item)("class", std::string(to_string(e.cls)))("expected", e.expected)(
                "produced", e.produced.empty() ? "-" : e.produced)
                .str();
    for (const auto& [id, msg] : r.failures) os << Record("failure")("item", id)("message", msg).str();
    for (const auto& w : r.warnings) os << Record("warning")("message", w).str();
    os << Record("summary")("templates", static_cast<long long>(r.templates.size()))(
              "template_mismatches", static_cast<long long>(r.template_mismatches()))(
              "surfaces", static_cast<long long>(audit.entries.size()))(
              "rule_match", static_cast<long long>(audit.count(AuditClass::rule_match)))(
              "override_used", static_cast<long long>(audit.count(AuditClass::override_used)))(
              "surface_mismatches", static_cast<long long>(r.surface_mismatches()))(
              "failures", static_cast<long long>(r.failures.size()))("status", r.ok() ? "ok" : "mismatch")
              .str();
    return os.str();
  }

  os << "templates: " << r.templates.size() << " checked, " << r.template_mismatches() << " mismatches\n";
  for (const auto& t : r.templates) {
    if (t.match) {
      os << "  ok        " << t.item << "  " << t.actual << "  " << t.rule_id << '\n';
    } else {
      os << "  MISMATCH  " << t.item << " (line " << t.line << ")  expected " << t.expected << "  got "
         << (t.actual.empty() ? t.note : t.actual) << '\n';
    }
  }
  os << "surfaces: " << audit.entries.size() << " checked, " << audit.count(AuditClass::rule_match) << " rule-match, "
     << audit.count(AuditClass::override_used) << " override-used, " << audit.count(AuditClass::mismatch)
     << " mismatch (" << percent(audit.rule_match_ratio()) << " by rule)\n";
  for (const auto& e : audit.entries) {
    os << "  " << to_string(e.cls) << "  " << e.item << "  " << e.expected;
    if (e.cls == AuditClass::mismatch) os << "  produced " << (e.produced.empty() ? e.note : e.produced);
    os << '\n';
  }
  for (const auto& [id, msg] : r.failures) os << "failure: " << id << ": " << msg << '\n';
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  os << (r.ok() ? "status: ok\n" : "status: mismatch\n");
  return os.str();
}

std::string render_derivation(const Item& item, const ShiftRecord& record, const ShiftResult& result,
                              const std::optional<SurfaceForm>& surface, Format f) {
  const std::string operand = operand_text(result.operand, result.derived);
  if (f == Format::records) {
    Record rec("derive");
    rec("item", item.id)("record", record.to_string())("rule", result.rule_id)("operand", operand)(
        "template", canonical_render(result.derived))("stratum", result.stratum);
    if (surface) rec("surface", surface->display)("override", surface->override_used ? "true" : "false");
    return rec.str();
  }
  std::ostringstream os;
  os << "item:     " << item.id << '\n'
     << "record:   " << record.to_string() << '\n'
     << "rule:     " << result.rule_id << '\n'
     << "operand:  " << operand << '\n'
     << "template: " << canonical_render(result.derived) << '\n'
     << "stratum:  " << result.stratum << '\n';
  if (surface) os << "surface:  " << surface->display << (surface->override_used ? "  (override)" : "") << '\n';
  return os.str();
}

std::string render_solve(const Template& base, const Template& derived, const FeatureSet& operand, Format f) {
  const std::string p = render_in_profile_order(operand, base.profile(), false);
  if (f == Format::records)
    return Record("solve")("profile", base.language())("base", canonical_render(base))(
               "result", canonical_render(derived))("operand", p)
        .str();
  return p + '\n';
}

std::string render_trace(const PhyloNode& root, Format f) {
  std::ostringstream os;
  if (f == Format::records) {
    tree_records(root, "", 0, os);
  } else {
    tree_text(root, "", true, true, os);
  }
  return os.str();
}

std::string render_enumeration(const LanguageProfile& profile, const std::vector<FeatureSet>& sets, bool well_formed,
                               Format f) {
  std::ostringstream os;
  const std::string noun = well_formed ? "well-formed templates" : "candidates";
  if (f == Format::records) {
    for (std::size_t i = 0; i < sets.size(); ++i)
      os << Record("template")("index", static_cast<long long>(i))(
                "body", render_in_profile_order(sets[i], profile, false))
                .str();
    os << Record("count")("profile", profile.id())("well_formed", well_formed ? "true" : "false")(
              "value", static_cast<long long>(sets.size()))
              .str();
    return os.str();
  }
  for (const auto& s : sets) os << render_in_profile_order(s, profile, true) << '\n';
  os << sets.size() << ' ' << noun << '\n';
  return os.str();
}

std::string render_estimation(const EstimationReport& r, Format f) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    const std::string winner = e.winner ? canonical_render(*e.winner) : "-";
    if (f == Format::records) {
      os << Record("estimate")("language", r.language.empty() ? "*" : r.language)("cogset", e.cognitive_set)(
                "status", std::string(to_string(e.status)))("template", winner)("sample", e.sample_size)(
                "excluded", e.excluded)
                .str();
      for (const auto& [tmpl, count] : e.histogram)
        os << Record("histogram")("cogset", e.cognitive_set)("template", tmpl)("count", count).str();
    } else {
      os << e.cognitive_set << ": " << to_string(e.status);
      if (e.winner) os << "  " << winner;
      os << "  (sample " << e.sample_size << ", excluded " << e.excluded << ")\n";
      for (const auto& [tmpl, count] : e.histogram) os << "    " << count << "  " << tmpl << '\n';
    }
  }
  if (f == Format::records) {
    os << Record("summary")("cogsets", static_cast<long long>(r.entries.size()))(
              "status", r.complete() ? "complete" : "incomplete")
              .str();
  } else {
    os << (r.complete() ? "status: complete\n" : "status: incomplete\n");
  }
  return os.str();
}

std::string render_selfcheck(const std::vector<oracle::CheckResult>& results, Format f) {
  std::ostringstream os;
  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed;
    if (f == Format::records) {
      Record rec("check");
      rec("name", c.name)("status", c.passed ? "pass" : "fail")("checks", static_cast<long long>(c.checks));
      for (const auto& [k, v] : c.counts) rec(k, static_cast<long long>(v));
      if (c.counterexample) rec("counterexample", *c.counterexample);
      os << rec.str();
    } else {
      os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << c.checks << " checks";
      for (const auto& [k, v] : c.counts) os << ", " << k << " " << v;
      os << '\n';
      if (c.counterexample) os << "      counterexample: " << *c.counterexample << '\n';
    }
  }
  if (f == Format::records) {
    os << Record("summary")("status", all ? "pass" : "fail").str();
  } else {
    os << (all ? "all checks passed\n" : "some checks failed\n");
  }
  return os.str();
}

}  // namespace tbmc::report
