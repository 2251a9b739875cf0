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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tbmc/error.hpp"
#include "tbmc/realizer.hpp"
#include "tbmc/shift_engine.hpp"

// The .tbmc corpus format.
//
//   # comment
//   profile NAME category=ATOM slots=[A|B, C]
//   initial LANG.COGSET = {N,+SG,...}
//   item id=.. lang=.. radical=".." cogset=..|template={..} [gloss=".."] ...
//   derive id=.. base=.. via=CONV|MDERIV|WIDEN|BORROW [target=COGSET|V] ...
//
// Besides the keys listed in the header of each statement, items and derives
// accept radical, lang, surface_override, fem_prefix/fem_suffix and the three
// estimation flags. BORROW may omit base.
namespace tbmc::corpus {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  /// "line 3, column 12: message"
  std::string to_string() const;
};

/// Thrown by load(); holds every problem found.
class CorpusError : public Error {
 public:
  explicit CorpusError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct ProfileStmt {
  std::string name;
  std::string category;
  std::vector<Slot> slots;

  friend bool operator==(const ProfileStmt&, const ProfileStmt&) = default;
};

struct InitialStmt {
  std::string language;
  std::string cognitive_set;
  FeatureSet body;

  friend bool operator==(const InitialStmt&, const InitialStmt&) = default;
};

/// Fields shared by item and derive statements.
struct ItemFields {
  std::string id;
  std::optional<std::string> language;
  std::optional<std::string> radical;
  std::string gloss;
  std::optional<bool> animate;
  ItemFlags flags;
  std::optional<std::string> surface;  // expected surface form
  bool surface_override = false;       // realize `surface` verbatim
  bool fem_prefix = true;
  bool fem_suffix = true;

  friend bool operator==(const ItemFields&, const ItemFields&) = default;
};

struct ItemStmt {
  ItemFields fields;
  std::optional<std::string> cognitive_set;  // "V" declares a verb
  std::optional<FeatureSet> template_body;

  friend bool operator==(const ItemStmt&, const ItemStmt&) = default;
};

struct DeriveStmt {
  ItemFields fields;
  std::optional<std::string> base;
  Process via = Process::conv;
  std::optional<std::string> target;  // cognitive set or "V"
  std::optional<std::string> donor_gender;
  std::optional<std::string> gradcond;
  std::optional<FeatureSet> expect_template;

  friend bool operator==(const DeriveStmt&, const DeriveStmt&) = default;
};

using StatementBody = std::variant<ProfileStmt, InitialStmt, ItemStmt, DeriveStmt>;

struct Statement {
  int line = 0;
  StatementBody body;

  /// Line numbers are provenance, not structure.
  friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct CorpusDocument {
  std::vector<Statement> statements;

  friend bool operator==(const CorpusDocument&, const CorpusDocument&) = default;
};

struct ParseResult {
  CorpusDocument document;
  std::vector<Diagnostic> errors;

  bool ok() const noexcept { return errors.empty(); }
};

/// Never throws on malformed input; statements with errors are dropped and
/// every error is collected. Text is NFC-normalized and string values are
/// mapped onto the house transliteration.
ParseResult parse(std::string_view text);

/// Canonical text: one statement per line in document order, keys in fixed
/// order, defaults omitted, LF line endings, no comments.
std::string serialize(const CorpusDocument& doc);

struct Expectation {
  std::string item;
  int line = 0;
  std::optional<FeatureSet> tmpl;
  std::optional<std::string> surface;
};

struct LoadedCorpus {
  ProfileRegistry profiles = ProfileRegistry::with_defaults();
  InitialTemplateRegistry initials;
  LexiconState state;
  RuleRegistry rules = RuleRegistry::defaults();
  std::vector<Expectation> expectations;  // document order
  std::vector<std::string> warnings;

  Engine engine() const;
  /// Item id -> expected surface, for realization_audit().
  std::map<std::string, std::string> expected_surfaces() const;
};

/// Builds registries and the lexicon. Throws CorpusError.
LoadedCorpus load(const CorpusDocument& doc);
/// parse() then load(). Throws CorpusError.
LoadedCorpus load_text(std::string_view text);
/// Throws Error(not_found) when the file cannot be read, CorpusError otherwise.
LoadedCorpus load_file(const std::string& path);
std::string read_file(const std::string& path);

struct TemplateCheck {
  std::string item;
  int line = 0;
  bool match = false;
  std::string expected;  // profile-order rendering
  std::string actual;    // empty when h failed
  std::string rule_id;
  std::string note;
};

struct ValidationReport {
  std::vector<TemplateCheck> templates;  // one per expect_template / head template
  AuditReport surfaces;
  /// Live nouns for which h failed.
  std::vector<std::pair<std::string, std::string>> failures;
  std::vector<std::string> warnings;

  std::size_t template_mismatches() const;
  /// Surfaces that neither matched by rule nor by override.
  std::size_t surface_mismatches() const;
  bool ok() const { return template_mismatches() == 0 && surface_mismatches() == 0 && failures.empty(); }
};

/// Runs h over every noun and compares all expectations.
ValidationReport validate(const LoadedCorpus& corpus);

/// One derivation built from command-line arguments instead of the corpus.
struct AdhocRequest {
  std::string base;
  Process via = Process::conv;
  std::optional<std::string> target;
  bool animate = false;
  std::optional<std::string> donor_gender;
  std::optional<std::string> gradcond;
};

struct AdhocResult {
  Item item;
  ShiftRecord record;
  ShiftResult result;
};

/// Applies the request to a copy of the lexicon as a fresh item "adhoc".
AdhocResult derive_adhoc(const LoadedCorpus& corpus, const AdhocRequest& request);

}  // namespace tbmc::corpus
