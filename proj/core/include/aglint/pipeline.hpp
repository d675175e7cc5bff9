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

#ifndef AGLINT_PIPELINE_HPP_
#define AGLINT_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aglint/annotation.hpp"
#include "aglint/grammar.hpp"
#include "aglint/segmentation.hpp"
#include "aglint/tagger.hpp"

namespace aglint {

/// The assembled analyser chain. Stage order is fixed: tokenize, split
/// sentences, tag tokens, transduce once per sentence; run_pipeline never
/// reorders stages. With assume_pretagged the first three stages are
/// skipped and documents must already carry Token and Sentence
/// annotations (see ingest_pretagged).
struct Pipeline {
  SplitterConfig splitter;
  Lexicon lexicon;
  TaggingPolicy policy;
  Grammar grammar;
  bool assume_pretagged = false;
};

/// One detected agreement error, surfaced to the user.
struct ErrorReport {
  struct TokenInfo {
    std::string text;
    std::string category;

    bool operator==(const TokenInfo&) const = default;
  };

  std::string rule;
  std::string annotation_type;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;           // covered text of [start, end)
  std::size_t sentence_index = 0;
  std::vector<TokenInfo> tokens;
};

/// Per-document outcome. A failed document keeps its diagnostics here;
/// the remaining documents still run.
struct DocumentResult {
  std::string source;
  std::vector<ErrorReport> errors;
  bool failed = false;
  std::string failure;
};

/// exit_code: 0 = clean, 1 = at least one error found, 2 = an
/// operational failure occurred.
struct RunSummary {
  std::size_t documents_processed = 0;
  std::vector<DocumentResult> documents;
  int exit_code = 0;

  std::size_t total_errors() const;
};

/// Loads lexicon and grammar and assembles the four-stage pipeline. The
/// grammar is compiled once; control_override replaces the grammar's
/// declared control style.
///
/// Throws ConfigError carrying the underlying I/O or parse diagnostic.
Pipeline build_pipeline(const std::filesystem::path& lexicon_path,
                        const std::filesystem::path& grammar_path,
                        std::optional<ControlStyle> control_override = {});

/// Same, from in-memory lexicon and grammar text.
Pipeline build_pipeline_from_text(std::string_view lexicon_text,
                                  std::string_view grammar_text,
                                  std::optional<ControlStyle> control_override = {});

/// Runs every stage over each document in corpus order. The transducer is
/// invoked once per Sentence region, so matches never cross a sentence
/// boundary. Every annotation whose type ends in "AgrError" becomes one
/// ErrorReport; reports are ordered by (document order, start offset).
/// A stage error aborts only its document and makes the run exit_code 2.
RunSummary run_pipeline(const Pipeline& p, Corpus& corpus);

enum class ReportFormat { text, json };

/// Renders a summary. text: one `<source>:<start>-<end>: [<rule>] "<text>"`
/// line per error. json: stable schema and key order, UTF-8, suitable for
/// byte-for-byte comparison across runs.
std::string render_report(const RunSummary& s, ReportFormat format);

}  // namespace aglint

#endif  // AGLINT_PIPELINE_HPP_
