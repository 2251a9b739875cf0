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

#include "tbmc/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "tbmc/error.hpp"
#include "tbmc/text.hpp"

namespace tbmc::algebra {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c >= 0x80) continue;  // non-ASCII letters are allowed
    if (std::isalnum(c) || c == '_' || c == '.' || c == ':') continue;
    return false;
  }
  return true;
}

Atom Atom::category(std::string name) {
  if (!is_valid_name(name)) throw Error(Errc::invalid_argument, "invalid category name '" + name + "'");
  return Atom{Kind::category, std::move(name), Polarity::plus};
}

Atom Atom::feature(std::string name, Polarity polarity) {
  if (!is_valid_name(name)) throw Error(Errc::invalid_argument, "invalid feature name '" + name + "'");
  return Atom{Kind::feature, std::move(name), polarity};
}

std::string Atom::to_string() const {
  if (is_category()) return name;
  return std::string(1, sign_char(polarity)) + name;
}

bool operator==(const Atom& a, const Atom& b) noexcept {
  if (a.kind != b.kind || a.name != b.name) return false;
  return a.is_category() || a.polarity == b.polarity;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name.compare(b.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_category()) return std::strong_ordering::equal;
  return a.polarity <=> b.polarity;
}

FeatureSet::FeatureSet(std::initializer_list<Atom> atoms) : FeatureSet(std::vector<Atom>(atoms)) {}

FeatureSet::FeatureSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

FeatureSet FeatureSet::parse(std::string_view input) {
  std::string_view s = text::trim(input);
  if (s == "∅") return {};
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error(Errc::invalid_argument, "feature set must be enclosed in braces: '" + std::string(input) + "'");
  std::string_view body = text::trim(s.substr(1, s.size() - 2));
  std::vector<Atom> atoms;
  if (body.empty()) return {};
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = text::trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (tok.empty()) throw Error(Errc::invalid_argument, "empty atom in '" + std::string(input) + "'");
    static constexpr std::string_view kUnicodeMinus = "−";
    if (tok.front() == '+') {
      atoms.push_back(Atom::plus(std::string(tok.substr(1))));
    } else if (tok.front() == '-') {
      atoms.push_back(Atom::minus(std::string(tok.substr(1))));
    } else if (tok.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
      atoms.push_back(Atom::minus(std::string(tok.substr(kUnicodeMinus.size()))));
    } else {
      atoms.push_back(Atom::category(std::string(tok)));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FeatureSet(std::move(atoms));
}

bool FeatureSet::contains(const Atom& a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }

std::vector<std::string> FeatureSet::categories() const {
  std::vector<std::string> out;
  for (const auto& a : atoms_)
    if (a.is_category()) out.push_back(a.name);
  return out;
}

FeatureSet FeatureSet::without_categories() const {
  std::vector<Atom> out;
  std::copy_if(atoms_.begin(), atoms_.end(), std::back_inserter(out), [](const Atom& a) { return !a.is_category(); });
  return FeatureSet(std::move(out));
}

std::string FeatureSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& a : atoms_) {
    if (!first) out += ',';
    out += a.to_string();
    first = false;
  }
  return out + "}";
}

FeatureSet symmetric_difference(const FeatureSet& a, const FeatureSet& b) {
  return set_union(difference(a, b), difference(b, a));
}

FeatureSet symmetric_difference_by_union(const FeatureSet& a, const FeatureSet& b) {
  return difference(set_union(a, b), intersection(a, b));
}

FeatureSet set_union(const FeatureSet& a, const FeatureSet& b) {
  std::vector<Atom> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FeatureSet(std::move(out));
}

FeatureSet intersection(const FeatureSet& a, const FeatureSet& b) {
  std::vector<Atom> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FeatureSet(std::move(out));
}

FeatureSet difference(const FeatureSet& a, const FeatureSet& b) {
  std::vector<Atom> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FeatureSet(std::move(out));
}

bool subset_of(const FeatureSet& a, const FeatureSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<std::string> strip_polarity(const FeatureSet& a) {
  std::set<std::string> out;
  for (const auto& atom : a) out.insert(atom.name);
  return out;
}

}  // namespace tbmc::algebra
