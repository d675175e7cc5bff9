// Copyright 2026 The aglint Authors
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

#ifndef AGLINT_UTF8_HPP_
#define AGLINT_UTF8_HPP_

#include <string>
#include <string_view>

// Minimal UTF-8 helpers. All document offsets in aglint count Unicode code
// points, so text is decoded once on document construction and encoded back
// only at the output boundary.

namespace aglint::utf8 {

/// Decodes UTF-8 bytes; invalid sequences become U+FFFD.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

/// Number of code points in a UTF-8 string.
std::size_t length(std::string_view bytes);

bool is_whitespace(char32_t cp);
bool is_digit(char32_t cp);

/// Letters of the Latin, Greek and Cyrillic ranges. Everything outside
/// these scripts tokenizes as punctuation, which is all the bundled
/// grammars need.
bool is_letter(char32_t cp);

/// Simple one-to-one lowercasing for ASCII, Latin-1 and Cyrillic.
char32_t to_lower(char32_t cp);

/// Case-folds a UTF-8 string (per-code-point lowercasing).
std::string fold_case(std::string_view bytes);

}  // namespace aglint::utf8

#endif  // AGLINT_UTF8_HPP_
