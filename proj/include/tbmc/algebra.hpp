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

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

// Signed grammatical features and the set algebra over them.
//
// A feature set holds signed features (+SG, -PL, ...) and, when it is the body
// of a template, one syntactic-category atom (N). Category atoms take part in
// the set operations like any other member: when two template bodies share
// their category it cancels under symmetric difference.
namespace tbmc::algebra {

enum class Polarity : std::uint8_t { plus, minus };

constexpr Polarity opposite(Polarity p) noexcept {
  return p == Polarity::plus ? Polarity::minus : Polarity::plus;
}

constexpr char sign_char(Polarity p) noexcept { return p == Polarity::plus ? '+' : '-'; }

/// True for tokens usable as feature or category names.
bool is_valid_name(std::string_view name);

/// One member of a feature set: a category atom or a signed feature.
struct Atom {
  enum class Kind : std::uint8_t { category, feature };

  Kind kind = Kind::feature;
  std::string name;
  Polarity polarity = Polarity::plus;  // meaningless for categories

  static Atom category(std::string name);
  static Atom feature(std::string name, Polarity polarity);
  static Atom plus(std::string name) { return feature(std::move(name), Polarity::plus); }
  static Atom minus(std::string name) { return feature(std::move(name), Polarity::minus); }

  bool is_category() const noexcept { return kind == Kind::category; }

  /// "N", "+SG", "-PL".
  std::string to_string() const;

  friend bool operator==(const Atom& a, const Atom& b) noexcept;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept;
};

/// Items carry opaque meaning atoms; only their kind is interpreted.
struct MeaningAtom {
  enum class Kind : std::uint8_t { category, cognitive_set, lexical };
  Kind kind = Kind::lexical;
  std::string name;

  friend auto operator<=>(const MeaningAtom&, const MeaningAtom&) = default;
};

class FeatureSet {
 public:
  using const_iterator = std::vector<Atom>::const_iterator;

  FeatureSet() = default;
  FeatureSet(std::initializer_list<Atom> atoms);
  explicit FeatureSet(std::vector<Atom> atoms);

  /// Parses `{` atom (`,` atom)* `}` or `{}`. Bare names are categories,
  /// `+NAME` / `-NAME` are signed features. U+2212 is accepted as a minus.
  static FeatureSet parse(std::string_view text);

  bool contains(const Atom& a) const;
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const_iterator begin() const noexcept { return atoms_.begin(); }
  const_iterator end() const noexcept { return atoms_.end(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  std::vector<std::string> categories() const;
  FeatureSet without_categories() const;

  /// Profile-independent rendering: categories first, then features by name,
  /// + before -, no spaces. Example: "{N,+F,-F,+M,-M}".
  std::string to_string() const;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
  friend auto operator<=>(const FeatureSet& a, const FeatureSet& b) {
    return a.atoms_ <=> b.atoms_;
  }

 private:
  std::vector<Atom> atoms_;  // sorted, unique
};

/// Δ as (a \ b) ∪ (b \ a).
FeatureSet symmetric_difference(const FeatureSet& a, const FeatureSet& b);

/// Δ as (a ∪ b) \ (a ∩ b). Must agree with symmetric_difference().
FeatureSet symmetric_difference_by_union(const FeatureSet& a, const FeatureSet& b);

FeatureSet set_union(const FeatureSet& a, const FeatureSet& b);
FeatureSet intersection(const FeatureSet& a, const FeatureSet& b);
FeatureSet difference(const FeatureSet& a, const FeatureSet& b);
bool subset_of(const FeatureSet& a, const FeatureSet& b);

/// Drops polarity: {+SG,-PL} -> {SG,PL}. Category atoms pass through by name.
std::set<std::string> strip_polarity(const FeatureSet& a);

}  // namespace tbmc::algebra
