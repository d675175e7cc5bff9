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

#include "aglint/segmentation.hpp"

#include "aglint/errors.hpp"
#include "aglint/utf8.hpp"

namespace aglint {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word:
      return "word";
    case TokenKind::number:
      return "number";
    case TokenKind::punct:
      return "punct";
  }
  return "word";
}

std::size_t tokenize(Document& doc) {
  if (doc.has_type("Token")) {
    throw StateError("tokenize: document already has Token annotations");
  }

  const std::u32string& text = doc.text();
  const std::size_t n = text.size();
  std::size_t added = 0;
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = text[i];
    if (utf8::is_whitespace(cp)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    TokenKind kind;
    if (utf8::is_letter(cp)) {
      kind = TokenKind::word;
      while (i < n && utf8::is_letter(text[i])) ++i;
    } else if (utf8::is_digit(cp)) {
      kind = TokenKind::number;
      while (i < n && utf8::is_digit(text[i])) ++i;
    } else {
      kind = TokenKind::punct;
      ++i;
    }
    doc.add_annotation("Token", start, i,
                       {{"string", doc.covered_text(start, i)},
                        {"kind", std::string(to_string(kind))}});
    ++added;
  }
  return added;
}

std::size_t split_sentences(Document& doc, const SplitterConfig& cfg) {
  if (cfg.terminators.empty()) {
    throw ValidationError("split_sentences: terminator set must be non-empty");
  }
  const std::vector<Annotation> tokens = doc.annotations_of_type("Token");
  if (tokens.empty()) {
    throw StateError("split_sentences: no Token annotations (run tokenize first)");
  }

  auto is_terminator = [&](const Annotation& t) {
    const std::string* kind = t.feature("kind");
    const std::string* text = t.feature("string");
    return kind && *kind == "punct" && text && cfg.terminators.count(*text) > 0;
  };

  std::size_t added = 0;
  std::size_t first = 0;  // index of the current sentence's first token
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_terminator(tokens[i])) continue;

    // "." after a known abbreviation does not end the sentence
    if (*tokens[i].feature("string") == ".") {
      if (i > 0) {
        const Annotation& prev = tokens[i - 1];
        const std::string* kind = prev.feature("kind");
        const std::string* text = prev.feature("string");
        if (kind && *kind == "word" && text &&
            cfg.abbreviations.count(utf8::fold_case(*text)) > 0) {
          continue;
        }
      }
    }

    doc.add_annotation("Sentence", tokens[first].start, tokens[i].end);
    ++added;
    first = i + 1;
  }

  if (first < tokens.size()) {
    doc.add_annotation("Sentence", tokens[first].start, tokens.back().end);
    ++added;
  }
  return added;
}

}  // namespace aglint
