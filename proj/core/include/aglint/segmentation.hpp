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

#ifndef AGLINT_SEGMENTATION_HPP_
#define AGLINT_SEGMENTATION_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "aglint/annotation.hpp"

namespace aglint {

/// Token classification stored in the "kind" feature.
enum class TokenKind { word, number, punct };

std::string_view to_string(TokenKind kind);

/// Sentence splitter configuration. A sentence ends at a punct token whose
/// text is a terminator, unless the terminator is "." and the immediately
/// preceding word token is a known abbreviation.
struct SplitterConfig {
  std::set<std::string> terminators = {".", "!", "?", "…"};
  std::set<std::string> abbreviations = {"г", "гр", "стр", "т", "н", "напр"};
};

/// Adds a Token annotation for every maximal run of letters (kind=word)
/// or digits (kind=number) and for each remaining non-whitespace code
/// point (kind=punct). Tokens carry features "string" (covered text) and
/// "kind". Returns the number of tokens added.
///
/// Throws StateError if the document already has Token annotations; the
/// tokenizer is the first pipeline stage and never double-annotates.
std::size_t tokenize(Document& doc);

/// Groups existing tokens into Sentence annotations that partition the
/// token sequence. Trailing tokens without a terminator form a final
/// sentence. Returns the number of sentences added.
///
/// Throws StateError if the document has no Token annotations.
std::size_t split_sentences(Document& doc, const SplitterConfig& cfg = {});

}  // namespace aglint

#endif  // AGLINT_SEGMENTATION_HPP_
