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

#include "tbmc/template.hpp"

#include <algorithm>
#include <set>

#include "tbmc/error.hpp"

namespace tbmc {

using algebra::Polarity;

std::string Slot::to_string() const { return linked() ? first + "|" + *second : first; }

LanguageProfile::LanguageProfile(std::string id, std::string category, std::vector<Slot> slots)
    : id_(std::move(id)), category_(std::move(category)), slots_(std::move(slots)) {
  if (!algebra::is_valid_name(id_)) throw Error(Errc::invalid_argument, "invalid profile id '" + id_ + "'");
  if (!algebra::is_valid_name(category_))
    throw Error(Errc::invalid_argument, "invalid category '" + category_ + "' in profile " + id_);
  std::set<std::string> seen;
  for (const auto& slot : slots_) {
    std::vector<std::string> names{slot.first};
    if (slot.second) names.push_back(*slot.second);
    for (const auto& n : names) {
      if (!algebra::is_valid_name(n)) throw Error(Errc::invalid_argument, "invalid feature name '" + n + "' in profile " + id_);
      if (n == category_) throw Error(Errc::invalid_argument, "feature '" + n + "' collides with the category in profile " + id_);
      if (!seen.insert(n).second)
        throw Error(Errc::invalid_argument, "feature '" + n + "' declared twice in profile " + id_);
      inventory_.push_back(n);
    }
  }
}

std::optional<std::size_t> LanguageProfile::slot_of(const std::string& feature) const {
  for (std::size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i].first == feature || slots_[i].second == feature) return i;
  return std::nullopt;
}

std::size_t LanguageProfile::rank(const std::string& feature) const {
  auto it = std::find(inventory_.begin(), inventory_.end(), feature);
  return static_cast<std::size_t>(it - inventory_.begin());
}

LanguageProfile LanguageProfile::riffian() {
  return LanguageProfile("riffian", "N", {{"SG", "PL"}, {"M", "F"}, {"COL", "SING"}});
}

LanguageProfile LanguageProfile::french() {
  return LanguageProfile("french", "N", {{"SG", "PL"}, {"M", "F"}, {"DEF", std::nullopt}, {"COL", std::nullopt}});
}

std::vector<Violation> validate(const FeatureSet& body, const LanguageProfile& profile) {
  std::vector<Violation> out;

  const auto cats = body.categories();
  if (cats.size() != 1 || cats.front() != profile.category()) {
    std::string found;
    for (const auto& c : cats) found += (found.empty() ? "" : ",") + c;
    out.push_back({"category", "expected exactly one category atom " + profile.category() + ", found {" + found + "}"});
  }

  auto signs_of = [&](const std::string& name) {
    std::vector<Polarity> s;
    if (body.contains(Atom::plus(name))) s.push_back(Polarity::plus);
    if (body.contains(Atom::minus(name))) s.push_back(Polarity::minus);
    return s;
  };

  for (const auto& slot : profile.slots()) {
    const auto a = signs_of(slot.first);
    if (!slot.linked()) {
      if (a.size() != 1)
        out.push_back({slot.to_string(), a.empty() ? "missing " + slot.first : "both +" + slot.first + " and -" + slot.first});
      continue;
    }
    const auto b = signs_of(*slot.second);
    if (a.size() != 1 || b.size() != 1) {
      out.push_back({slot.to_string(), "each of " + slot.first + " and " + *slot.second + " must appear with exactly one sign"});
    } else if (a.front() == b.front()) {
      out.push_back({slot.to_string(), std::string("linked opposition needs opposite signs, found ") +
                                           algebra::sign_char(a.front()) + slot.first + " and " +
                                           algebra::sign_char(b.front()) + *slot.second});
    }
  }

  for (const auto& atom : body) {
    if (atom.is_category()) continue;
    if (!profile.slot_of(atom.name)) out.push_back({"extra", "feature " + atom.to_string() + " is not in profile " + profile.id()});
  }
  return out;
}

Template Template::make(FeatureSet body, ProfilePtr profile) {
  if (!profile) throw Error(Errc::invalid_argument, "template needs a profile");
  const auto violations = validate(body, *profile);
  if (!violations.empty()) {
    std::string msg = "template " + body.to_string() + " violates profile " + profile->id() + ":";
    for (const auto& v : violations) msg += " [" + v.slot + "] " + v.message + ";";
    msg.pop_back();
    throw Error(Errc::validation, msg);
  }
  return Template(std::move(body), std::move(profile));
}

std::string render_in_profile_order(const FeatureSet& s, const LanguageProfile& profile, bool spaced) {
  std::vector<Atom> atoms(s.begin(), s.end());
  const std::size_t unknown = profile.inventory().size();
  auto key = [&](const Atom& a) {
    if (a.is_category()) return std::make_tuple(0, std::size_t{0}, a.name, 0);
    const std::size_t r = profile.rank(a.name);
    const int sign = a.polarity == Polarity::plus ? 0 : 1;
    // Unknown atoms sort after the inventory, by name.
    return std::make_tuple(1, r, r == unknown ? a.name : std::string{}, sign);
  };
  std::stable_sort(atoms.begin(), atoms.end(), [&](const Atom& x, const Atom& y) { return key(x) < key(y); });
  std::string out = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += spaced ? ", " : ",";
    out += atoms[i].to_string();
  }
  return out + "}";
}

std::string canonical_render(const Template& t) {
  const auto& profile = t.profile();
  std::string out = "{" + profile.category();
  for (const auto& name : profile.inventory()) {
    const bool plus = t.body().contains(Atom::plus(name));
    out += ", ";
    out += plus ? '+' : '-';
    out += name;
  }
  return out + "}";
}

std::vector<FeatureSet> enumerate_candidates(const LanguageProfile& profile, bool well_formed_only) {
  const auto& inv = profile.inventory();
  const std::size_t n = inv.size();
  if (n >= 32) throw Error(Errc::limit, "profile " + profile.id() + " has too many features to enumerate");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<FeatureSet> out;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Atom> atoms{Atom::category(profile.category())};
    for (std::size_t i = 0; i < n; ++i) {
      // The first inventory feature is the most significant bit; 0 means +.
      const bool minus = (mask >> (n - 1 - i)) & 1u;
      atoms.push_back(Atom::feature(inv[i], minus ? Polarity::minus : Polarity::plus));
    }
    FeatureSet body(std::move(atoms));
    if (well_formed_only && !validate(body, profile).empty()) continue;
    out.push_back(std::move(body));
  }
  return out;
}

std::vector<FeatureSet> construct_well_formed(const LanguageProfile& profile) {
  std::vector<std::vector<Atom>> partial{{Atom::category(profile.category())}};
  for (const auto& slot : profile.slots()) {
    std::vector<std::vector<Atom>> choices;
    if (slot.linked()) {
      choices = {{Atom::plus(slot.first), Atom::minus(*slot.second)},
                 {Atom::minus(slot.first), Atom::plus(*slot.second)}};
    } else {
      choices = {{Atom::plus(slot.first)}, {Atom::minus(slot.first)}};
    }
    std::vector<std::vector<Atom>> next;
    for (const auto& p : partial) {
      for (const auto& c : choices) {
        auto extended = p;
        extended.insert(extended.end(), c.begin(), c.end());
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<FeatureSet> out;
  for (auto& atoms : partial) out.emplace_back(std::move(atoms));
  return out;
}

ProfileRegistry ProfileRegistry::with_defaults() {
  ProfileRegistry r;
  r.add(LanguageProfile::riffian());
  r.add(LanguageProfile::french());
  return r;
}

void ProfileRegistry::add(LanguageProfile profile) {
  auto id = profile.id();
  profiles_[id] = std::make_shared<const LanguageProfile>(std::move(profile));
}

ProfilePtr ProfileRegistry::find(const std::string& id) const {
  auto it = profiles_.find(id);
  return it == profiles_.end() ? nullptr : it->second;
}

ProfilePtr ProfileRegistry::get(const std::string& id) const {
  auto p = find(id);
  if (!p) throw Error(Errc::not_found, "unknown language profile '" + id + "'");
  return p;
}

std::vector<std::string> ProfileRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : profiles_) out.push_back(id);
  return out;
}

ProfilePtr ProfileRegistry::profile_for(const FeatureSet& body) const {
  for (const auto& [id, p] : profiles_)
    if (validate(body, *p).empty()) return p;
  return nullptr;
}

InitialTemplateRegistry InitialTemplateRegistry::with_defaults(const ProfileRegistry& profiles) {
  InitialTemplateRegistry r;
  auto riffian = profiles.find("riffian");
  if (!riffian) return r;
  auto put = [&](const char* cogset, const char* body) {
    r.set("riffian", cogset, Template::make(FeatureSet::parse(body), riffian));
  };
  put("C", "{N,+SG,-PL,-M,+F,-COL,+SING}");
  put("U", "{N,+SG,-PL,-M,+F,+COL,-SING}");
  put("NA", "{N,+SG,-PL,+M,-F,-COL,+SING}");
  // Nouns of address: read off the chains that end in one.
  put("NAdr", "{N,+SG,-PL,+M,-F,+COL,-SING}");
  return r;
}

void InitialTemplateRegistry::set(const std::string& language, const std::string& cognitive_set, Template t) {
  if (t.language() != language)
    throw Error(Errc::validation, "initial template for " + language + "." + cognitive_set + " uses profile " + t.language());
  entries_.insert_or_assign({language, cognitive_set}, std::move(t));
}

const Template* InitialTemplateRegistry::find(const std::string& language, const std::string& cognitive_set) const {
  auto it = entries_.find({language, cognitive_set});
  return it == entries_.end() ? nullptr : &it->second;
}

Template initial_template(const InitialTemplateRegistry& registry, const std::string& language,
                          const std::string& cognitive_set) {
  if (const Template* t = registry.find(language, cognitive_set)) return *t;
  throw Error(Errc::not_found, "no initial template for cognitive set " + cognitive_set + " in language " + language);
}

}  // namespace tbmc
