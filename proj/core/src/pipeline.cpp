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

#include "aglint/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "aglint/errors.hpp"
#include "aglint/transducer.hpp"

namespace aglint {

namespace {

ErrorReport make_report(const Document& doc, const Annotation& ann,
                        const std::string& rule_name,
                        std::size_t sentence_index) {
  ErrorReport report;
  const std::string* rule = ann.feature("rule");
  report.rule = rule ? *rule : rule_name;
  report.annotation_type = ann.type;
  report.start = ann.start;
  report.end = ann.end;
  report.text = doc.covered_text(ann.span());
  report.sentence_index = sentence_index;
  for (const Annotation* t : doc.annotations_in("Token", ann.span())) {
    const std::string* text = t->feature("string");
    const std::string* category = t->feature("category");
    report.tokens.push_back({text ? *text : doc.covered_text(t->span()),
                             category ? *category : ""});
  }
  return report;
}

std::vector<ErrorReport> analyse_document(const Pipeline& p, Document& doc) {
  if (!p.assume_pretagged) {
    // A document with no tokens (empty or all whitespace) legitimately
    // yields an empty annotation set; the later stages have nothing to do.
    if (tokenize(doc) == 0) return {};
    split_sentences(doc, p.splitter);
    tag_tokens(doc, p.lexicon, p.policy);
  }

  // One transducer run per sentence: matches never cross a sentence
  // boundary.
  std::vector<ErrorReport> reports;
  std::size_t sentence_index = 0;
  for (const Annotation& sentence : doc.annotations_of_type("Sentence")) {
    const auto matches = run_transducer(p.grammar, doc, sentence.span());
    for (const MatchResult& m : matches) {
      for (AnnotationId id : m.created) {
        const Annotation* ann = doc.find(id);
        if (ann == nullptr || !std::string_view(ann->type).ends_with("AgrError")) {
          continue;
        }
        reports.push_back(make_report(doc, *ann, m.rule_name, sentence_index));
      }
    }
    ++sentence_index;
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ErrorReport& a, const ErrorReport& b) {
                     return a.start < b.start;
                   });
  return reports;
}

}  // namespace

std::size_t RunSummary::total_errors() const {
  std::size_t n = 0;
  for (const DocumentResult& d : documents) n += d.errors.size();
  return n;
}

Pipeline build_pipeline(const std::filesystem::path& lexicon_path,
                        const std::filesystem::path& grammar_path,
                        std::optional<ControlStyle> control_override) {
  Pipeline p;
  try {
    p.lexicon = load_lexicon(lexicon_path);
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot build pipeline: ") + e.what());
  }
  try {
    p.grammar = load_grammar(grammar_path);
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot build pipeline: ") + e.what());
  }
  if (control_override) p.grammar.control = *control_override;
  return p;
}

Pipeline build_pipeline_from_text(std::string_view lexicon_text,
                                  std::string_view grammar_text,
                                  std::optional<ControlStyle> control_override) {
  Pipeline p;
  try {
    p.lexicon = parse_lexicon(lexicon_text);
    p.grammar = parse_grammar(grammar_text);
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot build pipeline: ") + e.what());
  }
  if (control_override) p.grammar.control = *control_override;
  return p;
}

RunSummary run_pipeline(const Pipeline& p, Corpus& corpus) {
  RunSummary summary;
  bool any_failure = false;
  for (Document& doc : corpus.documents) {
    DocumentResult result;
    result.source = doc.source_name();
    try {
      result.errors = analyse_document(p, doc);
      ++summary.documents_processed;
    } catch (const Error& e) {
      // the failed document is reported and skipped; the rest still run
      result.failed = true;
      result.failure = e.what();
      any_failure = true;
    }
    summary.documents.push_back(std::move(result));
  }
  summary.exit_code =
      any_failure ? 2 : (summary.total_errors() > 0 ? 1 : 0);
  return summary;
}

std::string render_report(const RunSummary& s, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::ostringstream os;
    for (const DocumentResult& doc : s.documents) {
      for (const ErrorReport& e : doc.errors) {
        os << doc.source << ':' << e.start << '-' << e.end << ": [" << e.rule
           << "] \"" << e.text << "\"\n";
      }
    }
    return std::move(os).str();
  }

  nlohmann::ordered_json root;
  root["documents"] = nlohmann::ordered_json::array();
  for (const DocumentResult& doc : s.documents) {
    nlohmann::ordered_json jdoc;
    jdoc["source"] = doc.source;
    jdoc["errors"] = nlohmann::ordered_json::array();
    for (const ErrorReport& e : doc.errors) {
      nlohmann::ordered_json je;
      je["rule"] = e.rule;
      je["type"] = e.annotation_type;
      je["start"] = e.start;
      je["end"] = e.end;
      je["text"] = e.text;
      je["sentence"] = e.sentence_index;
      je["tokens"] = nlohmann::ordered_json::array();
      for (const ErrorReport::TokenInfo& t : e.tokens) {
        je["tokens"].push_back({{"text", t.text}, {"category", t.category}});
      }
      jdoc["errors"].push_back(std::move(je));
    }
    root["documents"].push_back(std::move(jdoc));
  }
  root["total_errors"] = s.total_errors();
  return root.dump(2) + "\n";
}

}  // namespace aglint
