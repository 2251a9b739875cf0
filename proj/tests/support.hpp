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

#include <string>

#include "tbmc/corpus.hpp"
#include "tbmc/shift_engine.hpp"
#include "tbmc/template.hpp"

namespace tbmc::test {

inline FeatureSet fs(const char* s) { return FeatureSet::parse(s); }

inline ProfilePtr riffian() {
  static const ProfilePtr p = std::make_shared<const LanguageProfile>(LanguageProfile::riffian());
  return p;
}

inline ProfilePtr french() {
  static const ProfilePtr p = std::make_shared<const LanguageProfile>(LanguageProfile::french());
  return p;
}

inline Template rif(const char* body) { return Template::make(fs(body), riffian()); }
inline Template fr(const char* body) { return Template::make(fs(body), french()); }

inline std::string corpus_path(const std::string& name) { return std::string(TBMC_DATA_DIR) + "/" + name; }

inline const FeatureSet& gender_flip() {
  static const FeatureSet p = fs("{+M,-M,+F,-F}");
  return p;
}

}  // namespace tbmc::test
