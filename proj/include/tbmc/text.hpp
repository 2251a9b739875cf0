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
#include <string_view>
#include <vector>

// UTF-8 helpers shared by the corpus reader and the realizer.
namespace tbmc::text {

/// Splits a UTF-8 string into code points, each kept as its own UTF-8 string.
/// Invalid bytes are passed through one at a time.
std::vector<std::string> code_points(std::string_view s);

/// NFC-normalizes UTF-8 text.
std::string nfc(std::string_view s);

/// Maps transliteration variants onto the house alphabet: ḍ and δ become ð,
/// ʿ becomes ʕ.
std::string normalize_transliteration(std::string_view s);

/// nfc() followed by normalize_transliteration().
std::string normalize(std::string_view s);

std::string_view trim(std::string_view s);

/// Column number (1-based, in code points) of byte offset `byte` in `line`.
std::size_t column_of(std::string_view line, std::size_t byte);

}  // namespace tbmc::text
