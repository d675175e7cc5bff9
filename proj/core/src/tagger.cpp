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

#include "aglint/tagger.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "aglint/errors.hpp"
#include "aglint/tagset.hpp"
#include "aglint/utf8.hpp"

namespace aglint {

namespace {

// Splits text into lines, accepting LF and CRLF.
std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.emplace_back(text.substr(pos));
      break;
    }
    std::string line(text.substr(pos, nl - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = nl + 1;
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

// Parses one `form<TAB>tag` line; the line number is 1-based.
std::pair<std::string, std::string> parse_entry(const std::string& source,
                                                const std::string& line,
                                                std::size_t line_no) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string::npos ||
      line.find('\t', tab + 1) != std::string::npos) {
    throw ParseError(source, static_cast<int>(line_no),
                     "expected exactly one TAB between form and tag");
  }
  std::string form = line.substr(0, tab);
  std::string tag = line.substr(tab + 1);
  if (form.empty() || tag.empty()) {
    throw ParseError(source, static_cast<int>(line_no),
                     "form and tag must be non-empty");
  }
  return {std::move(form), std::move(tag)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

std::vector<std::string> Lexicon::tag_inventory() const {
  std::vector<std::string> tags;
  tags.reserve(entries.size());
  for (const auto& [form, tag] : entries) tags.push_back(tag);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

Lexicon parse_lexicon(std::string_view text, std::string source_name) {
  Lexicon lex;
  lex.source_path = std::move(source_name);

  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank(line) || line[0] == '#') continue;
    auto [form, tag] = parse_entry(lex.source_path, line, i + 1);
    // first occurrence wins
    lex.entries.emplace(utf8::fold_case(form), std::move(tag));
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_file(path), path.string());
}

std::size_t tag_tokens(Document& doc, const Lexicon& lex,
                       const TaggingPolicy& policy) {
  // the fallback tag must stay inert: agreement rules never fire on it
  if (decode_tag(policy.unknown_tag).pos_class != PosClass::other) {
    throw ValidationError("tag_tokens: unknown_tag '" + policy.unknown_tag +
                          "' decodes to an adjective or noun");
  }
  const std::vector<Annotation> tokens = doc.annotations_of_type("Token");
  if (tokens.empty()) {
    throw StateError("tag_tokens: no Token annotations (run tokenize first)");
  }

  std::size_t tagged = 0;
  for (const Annotation& t : tokens) {
    const std::string* kind = t.feature("kind");
    std::string category;
    if (kind && *kind == "number") {
      category = "M";
    } else if (kind && *kind == "punct") {
      category = "PT";
    } else {
      const std::string* text = t.feature("string");
      std::string form = text ? *text : doc.covered_text(t.span());
      if (policy.case_fold) form = utf8::fold_case(form);
      const std::string* tag = lex.lookup(form);
      category = tag ? *tag : policy.unknown_tag;
    }
    if (category != policy.unknown_tag) ++tagged;
    doc.set_feature(t.id, "category", std::move(category));
  }
  return tagged;
}

Document ingest_pretagged(std::string_view text, std::string source_name) {
  struct Entry {
    std::string form;
    std::string tag;
  };
  std::vector<std::vector<Entry>> sentences;
  std::vector<Entry> current;

  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank(line)) {
      if (!current.empty()) sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    auto [form, tag] = parse_entry(source_name, line, i + 1);
    current.push_back({std::move(form), std::move(tag)});
  }
  if (!current.empty()) sentences.push_back(std::move(current));

  // Reconstruct the text: single spaces within a sentence, a single
  // newline between sentences; offsets are code points of this text.
  std::u32string doc_text;
  struct TokenSpan {
    Span span;
    const Entry* entry;
  };
  std::vector<std::vector<TokenSpan>> token_spans(sentences.size());
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (s > 0) doc_text.push_back(U'\n');
    for (std::size_t t = 0; t < sentences[s].size(); ++t) {
      if (t > 0) doc_text.push_back(U' ');
      const std::size_t start = doc_text.size();
      doc_text += utf8::decode(sentences[s][t].form);
      token_spans[s].push_back(
          {{start, doc_text.size()}, &sentences[s][t]});
    }
  }

  Document doc(std::move(doc_text), std::move(source_name));
  for (const auto& sentence : token_spans) {
    for (const TokenSpan& ts : sentence) {
      doc.add_annotation("Token", ts.span.start, ts.span.end,
                         {{"string", ts.entry->form},
                          {"kind", "word"},
                          {"category", ts.entry->tag}});
    }
    doc.add_annotation("Sentence", sentence.front().span.start,
                       sentence.back().span.end);
  }
  return doc;
}

Document ingest_pretagged(std::istream& in, std::string source_name) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_pretagged(std::string_view(buf.view()), std::move(source_name));
}

}  // namespace aglint
