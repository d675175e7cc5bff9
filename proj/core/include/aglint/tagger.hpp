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

#ifndef AGLINT_TAGGER_HPP_
#define AGLINT_TAGGER_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aglint/annotation.hpp"

namespace aglint {

/// Word-form to BTB-TS tag table. Keys are case-folded; values are
/// non-empty tag strings. Immutable after load and shareable across
/// threads.
struct Lexicon {
  std::unordered_map<std::string, std::string> entries;
  std::string source_path;

  /// Tag for a case-folded form, or nullptr on miss.
  const std::string* lookup(const std::string& folded_form) const {
    auto it = entries.find(folded_form);
    return it == entries.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries.size(); }

  /// Distinct tag strings, sorted.
  std::vector<std::string> tag_inventory() const;
};

struct TaggingPolicy {
  std::string unknown_tag = "Unknown";  // decodes to PosClass::other
  bool case_fold = true;
};

/// Loads a lexicon file: UTF-8, LF or CRLF, one `form<TAB>tag` entry per
/// line, '#' starts a comment line, blank lines are skipped. The first
/// occurrence of a form wins (files are frequency-ordered by their
/// authors).
///
/// Throws IoError when the file cannot be read and ParseError (with line
/// number) on a line without exactly one TAB or with an empty field.
Lexicon load_lexicon(const std::filesystem::path& path);

/// Same format, parsed from memory.
Lexicon parse_lexicon(std::string_view text,
                      std::string source_name = "<lexicon>");

/// Sets the "category" feature on every Token: lexicon lookup of the
/// (case-folded) text for words, "M" for numbers, "PT" for punctuation,
/// policy.unknown_tag on a lexicon miss. Returns the number of tokens
/// that received a category other than policy.unknown_tag.
///
/// Throws StateError if the document has no Token annotations.
std::size_t tag_tokens(Document& doc, const Lexicon& lex,
                       const TaggingPolicy& policy = {});

/// Reads vertical format (`form<TAB>tag` lines, blank line = sentence
/// boundary) and builds a fully annotated document: forms joined by
/// single spaces within a sentence, a single newline between sentences,
/// Token and Sentence annotations already in place. The gold-tag entry
/// point that bypasses tokenizer, splitter and tagger.
///
/// Throws ParseError (with line number) on a malformed line.
Document ingest_pretagged(std::istream& in, std::string source_name = "-");
Document ingest_pretagged(std::string_view text, std::string source_name = "-");

}  // namespace aglint

#endif  // AGLINT_TAGGER_HPP_
