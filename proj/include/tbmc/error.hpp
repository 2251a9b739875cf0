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

#include <stdexcept>
#include <string>

namespace tbmc {

/// Coarse error classes. The C API maps these onto status codes.
enum class Errc {
  invalid_argument,  ///< malformed input text or bad parameter
  not_found,         ///< unknown item, profile, rule or initial template
  validation,        ///< a template or corpus failed a well-formedness check
  derivation,        ///< no rule triggers, or a rule produced an ill-formed result
  cycle,             ///< the derivation graph is not acyclic
  limit,             ///< oracle universe exceeds the enumeration cap
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tbmc
