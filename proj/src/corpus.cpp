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

#include "tbmc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tbmc/text.hpp"

namespace tbmc::corpus {

namespace {

using algebra::MeaningAtom;

std::string join_messages(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += d.to_string();
  }
  return out;
}

// ---------------------------------------------------------------- lexing

struct Field {
  std::string key;
  std::string value;
  std::size_t key_pos = 0;
  std::size_t value_pos = 0;
  bool has_value = false;
};

class LineParser {
 public:
  LineParser(std::string_view line, int number, std::vector<Diagnostic>& errors)
      : line_(line), number_(number), errors_(errors) {}

  void error(std::size_t pos, std::string message) {
    errors_.push_back({number_, static_cast<int>(text::column_of(line_, pos)), std::move(message)});
    ++count_;
  }
  int error_count() const { return count_; }

  /// Splits the text after `from` into bare words and key=value fields.
  std::vector<Field> fields(std::size_t from) {
    std::vector<Field> out;
    std::size_t i = from;
    while (true) {
      while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t')) ++i;
      if (i >= line_.size() || line_[i] == '#') break;
      Field f;
      f.key_pos = i;
      while (i < line_.size() && line_[i] != '=' && line_[i] != ' ' && line_[i] != '\t') ++i;
      f.key = std::string(line_.substr(f.key_pos, i - f.key_pos));
      if (i < line_.size() && line_[i] == '=') {
        ++i;
        f.has_value = true;
        f.value_pos = i;
        if (!read_value(i, f.value)) return out;
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  std::string_view line() const { return line_; }

 private:
  bool read_value(std::size_t& i, std::string& value) {
    const std::size_t start = i;
    if (i >= line_.size()) return true;
    const char open = line_[i];
    if (open == '"') {
      ++i;
      while (i < line_.size() && line_[i] != '"') {
        if (line_[i] == '\\' && i + 1 < line_.size()) ++i;
        value += line_[i++];
      }
      if (i >= line_.size()) {
        error(start, "unterminated string");
        return false;
      }
      ++i;
    } else if (open == '{' || open == '[') {
      const char close = open == '{' ? '}' : ']';
      const auto end = line_.find(close, i);
      if (end == std::string_view::npos) {
        error(start, std::string("missing '") + close + "'");
        return false;
      }
      value = std::string(line_.substr(i, end - i + 1));
      i = end + 1;
    } else {
      while (i < line_.size() && line_[i] != ' ' && line_[i] != '\t') value += line_[i++];
    }
    if (i < line_.size() && line_[i] != ' ' && line_[i] != '\t' && line_[i] != '#') {
      error(i, "expected whitespace after value");
      return false;
    }
    return true;
  }

  std::string_view line_;
  int number_;
  std::vector<Diagnostic>& errors_;
  int count_ = 0;
};

// ------------------------------------------------------- statement parsing

const std::set<std::string> kItemKeys{"id",        "lang",    "radical",  "cogset",     "template",
                                      "gloss",     "animate", "surface",  "surface_override",
                                      "recent_loan", "typical", "common", "fem_prefix", "fem_suffix"};
const std::set<std::string> kDeriveKeys{"id",          "base",       "via",          "target",       "animate",
                                        "donor_gender", "gradcond",  "gloss",        "expect_template",
                                        "expect_surface", "radical", "lang",         "surface_override",
                                        "recent_loan", "typical",    "common",       "fem_prefix",   "fem_suffix"};

class FieldMap {
 public:
  FieldMap(LineParser& p, const std::vector<Field>& fields, const std::set<std::string>& allowed) : p_(p) {
    for (const auto& f : fields) {
      if (!f.has_value) {
        p.error(f.key_pos, "expected key=value, got '" + f.key + "'");
      } else if (!allowed.count(f.key)) {
        p.error(f.key_pos, "unknown key '" + f.key + "'");
      } else if (!map_.emplace(f.key, f).second) {
        p.error(f.key_pos, "duplicate key '" + f.key + "'");
      }
    }
  }

  const Field* get(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  std::optional<std::string> str(const std::string& key) const {
    const Field* f = get(key);
    if (!f) return std::nullopt;
    return f->value;
  }

  std::optional<std::string> name(const std::string& key) const {
    const Field* f = get(key);
    if (!f) return std::nullopt;
    if (!algebra::is_valid_name(f->value)) {
      p_.error(f->value_pos, "invalid " + key + " '" + f->value + "'");
      return std::nullopt;
    }
    return f->value;
  }

  std::optional<std::string> required_name(const std::string& key, std::size_t stmt_pos) const {
    if (!get(key)) {
      p_.error(stmt_pos, "missing required key '" + key + "'");
      return std::nullopt;
    }
    return name(key);
  }

  std::optional<std::string> prose(const std::string& key) const {
    auto v = str(key);
    if (v) *v = text::normalize(*v);
    return v;
  }

  std::optional<bool> boolean(const std::string& key) const {
    const Field* f = get(key);
    if (!f) return std::nullopt;
    if (f->value == "true") return true;
    if (f->value == "false") return false;
    p_.error(f->value_pos, "expected true or false for '" + key + "', got '" + f->value + "'");
    return std::nullopt;
  }

  /// fem_prefix / fem_suffix: none (or false) suppresses the affix.
  bool affix(const std::string& key) const {
    const Field* f = get(key);
    if (!f) return true;
    if (f->value == "none" || f->value == "false") return false;
    if (f->value == "true") return true;
    p_.error(f->value_pos, "expected none, true or false for '" + key + "', got '" + f->value + "'");
    return true;
  }

  std::optional<FeatureSet> features(const std::string& key) const {
    const Field* f = get(key);
    if (!f) return std::nullopt;
    try {
      return FeatureSet::parse(f->value);
    } catch (const Error& e) {
      p_.error(f->value_pos, e.what());
      return std::nullopt;
    }
  }

 private:
  LineParser& p_;
  std::map<std::string, Field> map_;
};

ItemFields common_fields(const FieldMap& m, std::size_t stmt_pos) {
  ItemFields f;
  if (auto id = m.required_name("id", stmt_pos)) f.id = *id;
  f.language = m.name("lang");
  f.radical = m.prose("radical");
  f.gloss = m.prose("gloss").value_or("");
  f.animate = m.boolean("animate");
  f.flags.recent_loan = m.boolean("recent_loan").value_or(false);
  f.flags.typical = m.boolean("typical").value_or(false);
  f.flags.common = m.boolean("common").value_or(false);
  f.surface_override = m.boolean("surface_override").value_or(false);
  f.fem_prefix = m.affix("fem_prefix");
  f.fem_suffix = m.affix("fem_suffix");
  return f;
}

std::optional<ProfileStmt> parse_profile(LineParser& p, std::size_t rest) {
  auto fields = p.fields(rest);
  if (fields.empty() || fields[0].has_value) {
    p.error(rest, "expected a profile name");
    return std::nullopt;
  }
  ProfileStmt s;
  s.name = fields[0].key;
  if (!algebra::is_valid_name(s.name)) p.error(fields[0].key_pos, "invalid profile name '" + s.name + "'");
  fields.erase(fields.begin());
  FieldMap m(p, fields, {"category", "slots"});
  if (auto c = m.required_name("category", rest)) s.category = *c;
  const Field* slots = m.get("slots");
  if (!slots) {
    p.error(rest, "missing required key 'slots'");
  } else if (slots->value.size() < 2 || slots->value.front() != '[' || slots->value.back() != ']') {
    p.error(slots->value_pos, "slots must be a bracketed list");
  } else {
    const std::string body = slots->value.substr(1, slots->value.size() - 2);
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const std::string item(text::trim(part));
      if (item.empty()) {
        if (!text::trim(body).empty()) p.error(slots->value_pos, "empty slot");
        continue;
      }
      const auto bar = item.find('|');
      Slot slot;
      slot.first = std::string(text::trim(std::string_view(item).substr(0, bar)));
      if (bar != std::string::npos) slot.second = std::string(text::trim(std::string_view(item).substr(bar + 1)));
      const bool ok = algebra::is_valid_name(slot.first) && (!slot.second || algebra::is_valid_name(*slot.second));
      if (!ok) p.error(slots->value_pos, "invalid slot '" + item + "'");
      s.slots.push_back(std::move(slot));
    }
  }
  return s;
}

std::optional<InitialStmt> parse_initial(LineParser& p, std::size_t rest) {
  const std::string_view line = p.line();
  const auto eq = line.find('=', rest);
  if (eq == std::string_view::npos) {
    p.error(rest, "expected 'LANG.COGSET = {TEMPLATE}'");
    return std::nullopt;
  }
  const std::string lhs(text::trim(line.substr(rest, eq - rest)));
  const auto dot = lhs.find('.');
  InitialStmt s;
  if (dot == std::string::npos) {
    p.error(rest, "expected LANG.COGSET before '='");
  } else {
    s.language = lhs.substr(0, dot);
    s.cognitive_set = lhs.substr(dot + 1);
    if (!algebra::is_valid_name(s.language) || !algebra::is_valid_name(s.cognitive_set))
      p.error(rest, "invalid initial-template key '" + lhs + "'");
  }
  std::string_view rhs = line.substr(eq + 1);
  if (const auto hash = rhs.find('#'); hash != std::string_view::npos) rhs = rhs.substr(0, hash);
  std::size_t rhs_pos = line.find_first_not_of(" \t", eq + 1);
  if (rhs_pos == std::string_view::npos) rhs_pos = eq + 1;
  try {
    s.body = FeatureSet::parse(text::trim(rhs));
  } catch (const Error& e) {
    p.error(std::min(rhs_pos, line.size()), e.what());
  }
  return s;
}

std::optional<ItemStmt> parse_item(LineParser& p, std::size_t rest) {
  FieldMap m(p, p.fields(rest), kItemKeys);
  ItemStmt s;
  s.fields = common_fields(m, rest);
  s.fields.surface = m.prose("surface");
  s.cognitive_set = m.name("cogset");
  s.template_body = m.features("template");
  if (!m.get("lang")) p.error(rest, "missing required key 'lang'");
  if (!m.get("radical")) p.error(rest, "missing required key 'radical'");
  if (!m.get("cogset") && !m.get("template")) p.error(rest, "item needs cogset or template");
  if (s.fields.surface_override && !s.fields.surface) p.error(rest, "surface_override needs surface");
  return s;
}

std::optional<DeriveStmt> parse_derive(LineParser& p, std::size_t rest) {
  FieldMap m(p, p.fields(rest), kDeriveKeys);
  DeriveStmt s;
  s.fields = common_fields(m, rest);
  s.fields.surface = m.prose("expect_surface");
  s.base = m.name("base");
  s.target = m.name("target");
  s.gradcond = m.name("gradcond");
  s.expect_template = m.features("expect_template");
  if (const Field* via = m.get("via")) {
    try {
      s.via = parse_process(via->value);
    } catch (const Error& e) {
      p.error(via->value_pos, e.what());
    }
  } else {
    p.error(rest, "missing required key 'via'");
  }
  if (const Field* g = m.get("donor_gender")) {
    if (g->value != "M" && g->value != "F") p.error(g->value_pos, "donor_gender must be M or F");
    s.donor_gender = g->value;
  }
  const bool borrow = s.via == Process::borrow;
  if (borrow && !s.donor_gender) p.error(rest, "BORROW needs donor_gender");
  if (!borrow && s.donor_gender) p.error(rest, "donor_gender is only valid with BORROW");
  if (!borrow && !m.get("base")) p.error(rest, "missing required key 'base'");
  if (borrow && !s.base && !s.fields.language) p.error(rest, "BORROW without base needs lang");
  if (s.fields.surface_override && !s.fields.surface) p.error(rest, "surface_override needs expect_surface");
  return s;
}

// ------------------------------------------------------------ serializing

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void put_common(std::ostringstream& os, const ItemFields& f, const char* surface_key) {
  if (f.radical) os << " radical=" << quote(*f.radical);
  if (!f.gloss.empty()) os << " gloss=" << quote(f.gloss);
  if (f.animate) os << " animate=" << (*f.animate ? "true" : "false");
  if (f.surface) os << ' ' << surface_key << '=' << quote(*f.surface);
  if (f.surface_override) os << " surface_override=true";
  if (f.flags.recent_loan) os << " recent_loan=true";
  if (f.flags.typical) os << " typical=true";
  if (f.flags.common) os << " common=true";
  if (!f.fem_prefix) os << " fem_prefix=none";
  if (!f.fem_suffix) os << " fem_suffix=none";
}

// ---------------------------------------------------------------- loading

std::set<MeaningAtom> meanings_for(const std::string& category, const std::optional<std::string>& cogset,
                                   const std::string& gloss) {
  std::set<MeaningAtom> out{{MeaningAtom::Kind::category, category}};
  if (cogset) out.insert({MeaningAtom::Kind::cognitive_set, *cogset});
  if (!gloss.empty()) out.insert({MeaningAtom::Kind::lexical, gloss});
  return out;
}

void fill_item(Item& item, const ItemFields& f) {
  item.id = f.id;
  item.language = f.language.value_or("");
  item.radical = f.radical.value_or("");
  item.gloss = f.gloss;
  item.animate = f.animate.value_or(false);
  item.flags = f.flags;
  if (f.surface_override) item.surface_override = f.surface;
  item.fem_prefix = f.fem_prefix;
  item.fem_suffix = f.fem_suffix;
}

std::string render_for(const FeatureSet& body, const ProfileRegistry& profiles, const std::string& language) {
  if (auto p = profiles.find(language)) return render_in_profile_order(body, *p, true);
  return body.to_string();
}

}  // namespace

std::string Diagnostic::to_string() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

CorpusError::CorpusError(std::vector<Diagnostic> diagnostics)
    : Error(Errc::invalid_argument, join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ParseResult parse(std::string_view input) {
  ParseResult result;
  const std::string normalized = text::nfc(input);
  std::map<std::string, int> id_lines;
  struct BaseRef {
    std::size_t index;
    int line;
    int column;
    std::string id;
    std::string base;
  };
  std::vector<BaseRef> refs;
  std::set<std::size_t> dropped;

  std::istringstream in(normalized);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (number == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    const std::string_view line = raw;
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos || line[start] == '#') continue;

    LineParser p(line, number, result.errors);
    auto kw_end = line.find_first_of(" \t", start);
    if (kw_end == std::string_view::npos) kw_end = line.size();
    const std::string keyword(line.substr(start, kw_end - start));

    std::optional<StatementBody> body;
    if (keyword == "profile") {
      if (auto s = parse_profile(p, kw_end)) body = std::move(*s);
    } else if (keyword == "initial") {
      if (auto s = parse_initial(p, kw_end)) body = std::move(*s);
    } else if (keyword == "item") {
      if (auto s = parse_item(p, kw_end)) body = std::move(*s);
    } else if (keyword == "derive") {
      if (auto s = parse_derive(p, kw_end)) body = std::move(*s);
    } else {
      p.error(start, "unknown statement '" + keyword + "'");
    }
    if (!body) continue;

    const ItemFields* fields = nullptr;
    if (auto* it = std::get_if<ItemStmt>(&*body)) fields = &it->fields;
    if (auto* d = std::get_if<DeriveStmt>(&*body)) fields = &d->fields;
    if (fields && !fields->id.empty()) {
      auto [pos, fresh] = id_lines.emplace(fields->id, number);
      if (!fresh)
        p.error(start, "duplicate id '" + fields->id + "' (first declared on line " + std::to_string(pos->second) + ")");
    }
    if (p.error_count() > 0) continue;
    if (auto* d = std::get_if<DeriveStmt>(&*body); d && d->base) {
      const auto col = line.find("base=");
      refs.push_back({result.document.statements.size(), number,
                      static_cast<int>(text::column_of(line, col == std::string_view::npos ? start : col)),
                      d->fields.id, *d->base});
    }
    result.document.statements.push_back({number, std::move(*body)});
  }

  for (const auto& r : refs) {
    auto it = id_lines.find(r.base);
    if (it == id_lines.end()) {
      result.errors.push_back({r.line, r.column, "unknown base '" + r.base + "' for '" + r.id + "'"});
    } else if (it->second > r.line) {
      result.errors.push_back({r.line, r.column,
                               "forward reference: '" + r.id + "' on line " + std::to_string(r.line) +
                                   " derives from '" + r.base + "', which is declared later on line " +
                                   std::to_string(it->second)});
    } else {
      continue;
    }
    dropped.insert(r.index);
  }
  if (!dropped.empty()) {
    std::vector<Statement> kept;
    for (std::size_t i = 0; i < result.document.statements.size(); ++i)
      if (!dropped.count(i)) kept.push_back(std::move(result.document.statements[i]));
    result.document.statements = std::move(kept);
  }
  std::stable_sort(result.errors.begin(), result.errors.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  return result;
}

std::string serialize(const CorpusDocument& doc) {
  ProfileRegistry profiles = ProfileRegistry::with_defaults();
  std::map<std::string, std::string> languages;
  std::ostringstream os;
  auto render = [&](const FeatureSet& body, const std::string& language) {
    if (auto p = profiles.find(language)) return render_in_profile_order(body, *p, false);
    return body.to_string();
  };

  for (const auto& st : doc.statements) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ProfileStmt>) {
            os << "profile " << s.name << " category=" << s.category << " slots=[";
            for (std::size_t i = 0; i < s.slots.size(); ++i) os << (i ? ", " : "") << s.slots[i].to_string();
            os << "]\n";
            try {
              profiles.add(LanguageProfile(s.name, s.category, s.slots));
            } catch (const Error&) {
            }
          } else if constexpr (std::is_same_v<T, InitialStmt>) {
            os << "initial " << s.language << '.' << s.cognitive_set << " = " << render(s.body, s.language) << '\n';
          } else if constexpr (std::is_same_v<T, ItemStmt>) {
            const std::string lang = s.fields.language.value_or("");
            languages[s.fields.id] = lang;
            os << "item id=" << s.fields.id;
            if (s.fields.language) os << " lang=" << *s.fields.language;
            if (s.cognitive_set) os << " cogset=" << *s.cognitive_set;
            if (s.template_body) os << " template=" << render(*s.template_body, lang);
            put_common(os, s.fields, "surface");
            os << '\n';
          } else {
            std::string lang = s.fields.language.value_or("");
            if (lang.empty() && s.base) lang = languages[*s.base];
            languages[s.fields.id] = lang;
            os << "derive id=" << s.fields.id;
            if (s.base) os << " base=" << *s.base;
            os << " via=" << to_string(s.via);
            if (s.target) os << " target=" << *s.target;
            if (s.donor_gender) os << " donor_gender=" << *s.donor_gender;
            if (s.gradcond) os << " gradcond=" << *s.gradcond;
            if (s.fields.language) os << " lang=" << *s.fields.language;
            if (s.expect_template) os << " expect_template=" << render(*s.expect_template, lang);
            put_common(os, s.fields, "expect_surface");
            os << '\n';
          }
        },
        st.body);
  }
  return os.str();
}

Engine LoadedCorpus::engine() const { return Engine(state, rules, profiles, initials); }

std::map<std::string, std::string> LoadedCorpus::expected_surfaces() const {
  std::map<std::string, std::string> out;
  for (const auto& e : expectations)
    if (e.surface) out.emplace(e.item, *e.surface);
  return out;
}

LoadedCorpus load(const CorpusDocument& doc) {
  LoadedCorpus c;
  c.initials = InitialTemplateRegistry::with_defaults(c.profiles);
  const std::set<std::string> builtin{"riffian", "french"};
  std::vector<Diagnostic> diags;

  for (const auto& st : doc.statements) {
    try {
      std::visit(
          [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ProfileStmt>) {
              LanguageProfile profile(s.name, s.category, s.slots);
              if (auto existing = c.profiles.find(s.name)) {
                if (builtin.count(s.name) && *existing == profile) return;
                throw Error(Errc::validation, "profile '" + s.name + "' is already defined");
              }
              c.profiles.add(std::move(profile));
            } else if constexpr (std::is_same_v<T, InitialStmt>) {
              c.initials.set(s.language, s.cognitive_set, Template::make(s.body, c.profiles.get(s.language)));
            } else if constexpr (std::is_same_v<T, ItemStmt>) {
              Item item;
              fill_item(item, s.fields);
              const bool verb = s.cognitive_set && *s.cognitive_set == kVerb;
              item.category = std::string(verb ? kVerb : kNoun);
              if (!verb) item.cognitive_set = s.cognitive_set;
              item.meanings = meanings_for(item.category, item.cognitive_set, item.gloss);
              std::optional<Template> t;
              if (s.template_body) {
                t = Template::make(*s.template_body, c.profiles.get(item.language));
              } else if (!verb && item.cognitive_set) {
                initial_template(c.initials, item.language, *item.cognitive_set);
              }
              c.state = c.state.add_head(std::move(item), std::move(t));
              if (s.template_body || s.fields.surface)
                c.expectations.push_back({s.fields.id, st.line, s.template_body, s.fields.surface});
            } else {
              if (s.gradcond && !c.rules.find(*s.gradcond))
                throw Error(Errc::not_found, "unknown gradient condition '" + *s.gradcond + "'");
              Item item;
              fill_item(item, s.fields);
              const bool verb = s.target && *s.target == kVerb;
              item.category = std::string(verb ? kVerb : kNoun);
              std::optional<std::string> cogset;
              if (!verb) cogset = s.target;
              std::set<MeaningAtom> inherited;
              if (s.base) {
                const Item& base = c.state.item(*s.base);
                if (!cogset && !verb && base.category == kNoun) cogset = base.cognitive_set;
                if (s.via == Process::widen)
                  for (const auto& m : base.meanings)
                    if (m.kind == MeaningAtom::Kind::lexical) inherited.insert(m);
              }
              if (!verb) item.cognitive_set = s.target;
              item.meanings = meanings_for(item.category, cogset, item.gloss);
              item.meanings.insert(inherited.begin(), inherited.end());
              Formation formation{s.via, s.donor_gender};
              c.state = c.state.apply_formation({std::move(item), Edge{s.base, formation, s.gradcond}});
              for (const auto& w : c.state.warnings()) c.warnings.push_back("line " + std::to_string(st.line) + ": " + w);
              if (s.expect_template || s.fields.surface)
                c.expectations.push_back({s.fields.id, st.line, s.expect_template, s.fields.surface});
            }
          },
          st.body);
    } catch (const Error& e) {
      diags.push_back({st.line, 1, e.what()});
    }
  }
  if (!diags.empty()) throw CorpusError(std::move(diags));
  return c;
}

LoadedCorpus load_text(std::string_view text) {
  ParseResult parsed = parse(text);
  if (!parsed.ok()) throw CorpusError(std::move(parsed.errors));
  return load(parsed.document);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::not_found, "cannot read corpus file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedCorpus load_file(const std::string& path) { return load_text(read_file(path)); }

std::size_t ValidationReport::template_mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(templates.begin(), templates.end(), [](const TemplateCheck& t) { return !t.match; }));
}

std::size_t ValidationReport::surface_mismatches() const { return surfaces.count(AuditClass::mismatch); }

ValidationReport validate(const LoadedCorpus& corpus) {
  ValidationReport report;
  const Engine engine = corpus.engine();
  const LexiconState& state = corpus.state;

  for (const auto& id : state.order()) {
    if (state.item(id).is_verb()) continue;
    try {
      engine.transfer(id);
    } catch (const Error& e) {
      report.failures.emplace_back(id, e.what());
    }
  }

  for (const auto& e : corpus.expectations) {
    if (!e.tmpl) continue;
    TemplateCheck check;
    check.item = e.item;
    check.line = e.line;
    const Item& item = state.item(e.item);
    check.expected = render_for(*e.tmpl, corpus.profiles, item.language);
    try {
      const ShiftResult r = engine.transfer(e.item);
      check.actual = canonical_render(r.derived);
      check.rule_id = r.rule_id;
      check.match = r.derived.body() == *e.tmpl;
    } catch (const Error& err) {
      check.note = err.what();
    }
    report.templates.push_back(std::move(check));
  }

  report.surfaces = realization_audit(engine, corpus.expected_surfaces());
  report.warnings = corpus.warnings;
  return report;
}

AdhocResult derive_adhoc(const LoadedCorpus& corpus, const AdhocRequest& request) {
  std::string id = "adhoc";
  for (int n = 2; corpus.state.contains(id); ++n) id = "adhoc_" + std::to_string(n);

  Item item;
  item.id = id;
  const bool verb = request.target && *request.target == kVerb;
  item.category = std::string(verb ? kVerb : kNoun);
  if (!verb) item.cognitive_set = request.target;
  item.animate = request.animate;
  if (request.base.empty()) {
    if (request.via != Process::borrow) throw Error(Errc::invalid_argument, "--base is required unless --via BORROW");
    item.language = "riffian";
  }
  if (request.via == Process::borrow && !request.donor_gender)
    throw Error(Errc::invalid_argument, "--donor-gender is required with --via BORROW");
  if (request.gradcond && !corpus.rules.find(*request.gradcond))
    throw Error(Errc::not_found, "unknown gradient condition '" + *request.gradcond + "'");

  if (!request.base.empty() && request.via == Process::widen) item.meanings = corpus.state.item(request.base).meanings;
  Edge edge{request.base.empty() ? std::nullopt : std::optional<std::string>(request.base),
            Formation{request.via, request.donor_gender}, request.gradcond};
  const LexiconState next = corpus.state.apply_formation({item, edge});
  const Engine engine = corpus.engine().with_state(next);
  ShiftRecord record = engine.record(id);
  ShiftResult result = engine.transfer(id);
  return AdhocResult{next.item(id), std::move(record), std::move(result)};
}

}  // namespace tbmc::corpus
