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

#include "aglint/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aglint/builtin_data.hpp"
#include "aglint/errors.hpp"
#include "aglint/pipeline.hpp"

namespace aglint {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string read_file_or_stdin(const std::string& path, std::istream& in) {
  if (path == "-") return read_stream(in);
  if (std::filesystem::is_directory(path)) {
    throw IoError(path + " is a directory");
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  return read_stream(f);
}

std::string strip_bom(std::string text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  return text;
}

// --lexicon beats AGLINT_LEXICON beats the builtin lexicon.
Lexicon resolve_lexicon(const std::string& flag_path) {
  if (!flag_path.empty()) return load_lexicon(flag_path);
  if (const char* env = std::getenv("AGLINT_LEXICON"); env != nullptr && *env) {
    return load_lexicon(env);
  }
  return parse_lexicon(builtin_lexicon(), "<builtin>");
}

Grammar resolve_grammar(const std::string& flag_path) {
  if (!flag_path.empty()) return load_grammar(flag_path);
  return parse_grammar(builtin_grammar(), "<builtin>");
}

struct CheckOptions {
  std::vector<std::string> paths;
  std::string lexicon;
  std::string grammar;
  std::string format = "text";
  std::string control;
  bool pretagged = false;
};

int do_check(const CheckOptions& opt, std::ostream& out, std::ostream& err,
             std::istream& in) {
  Pipeline pipeline;
  pipeline.lexicon = resolve_lexicon(opt.lexicon);
  pipeline.grammar = resolve_grammar(opt.grammar);
  if (opt.control == "appelt") pipeline.grammar.control = ControlStyle::appelt;
  if (opt.control == "all") pipeline.grammar.control = ControlStyle::all;
  pipeline.assume_pretagged = opt.pretagged;

  Corpus corpus;
  for (const std::string& path : opt.paths) {
    std::string text = strip_bom(read_file_or_stdin(path, in));
    corpus.documents.push_back(opt.pretagged
                                   ? ingest_pretagged(text, path)
                                   : Document(text, path));
  }

  const RunSummary summary = run_pipeline(pipeline, corpus);
  out << render_report(summary, opt.format == "json" ? ReportFormat::json
                                                     : ReportFormat::text);
  for (const DocumentResult& doc : summary.documents) {
    if (doc.failed) err << "aglint: " << doc.source << ": " << doc.failure << '\n';
  }
  return summary.exit_code;
}

int do_tag(const std::string& path, const std::string& lexicon_flag,
           std::ostream& out, std::istream& in) {
  const Lexicon lexicon = resolve_lexicon(lexicon_flag);
  Document doc(strip_bom(read_file_or_stdin(path, in)), path);
  if (tokenize(doc) == 0) return 0;
  split_sentences(doc);
  tag_tokens(doc, lexicon);

  const auto tokens = doc.annotations_of_type("Token");
  bool first_sentence = true;
  for (const Annotation& sentence : doc.annotations_of_type("Sentence")) {
    if (!first_sentence) out << '\n';
    first_sentence = false;
    for (const Annotation& t : tokens) {
      if (t.start < sentence.start || t.end > sentence.end) continue;
      const std::string* text = t.feature("string");
      const std::string* category = t.feature("category");
      out << (text ? *text : doc.covered_text(t.span())) << '\t'
          << (category ? *category : "") << '\n';
    }
  }
  return 0;
}

int do_grammar_check(const std::string& path, std::ostream& out,
                     std::ostream& err) {
  Grammar grammar;
  try {
    grammar = load_grammar(path);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }
  out << "OK, " << grammar.rules.size()
      << (grammar.rules.size() == 1 ? " rule" : " rules") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream* input) {
  std::istream& in = input != nullptr ? *input : std::cin;

  CLI::App app{"agreement-error linter for Bulgarian text", "aglint"};
  app.set_version_flag("--version", std::string("aglint ") + kVersion);
  app.require_subcommand(1);

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "Detect agreement errors in text");
  check->add_option("path", check_opt.paths,
                    "input file(s); - reads standard input")
      ->required()
      ->expected(-1);
  check->add_option("--lexicon", check_opt.lexicon,
                    "lexicon file (overrides AGLINT_LEXICON and the builtin)");
  check->add_option("--grammar", check_opt.grammar,
                    "grammar file (default: builtin agreement grammar)");
  check->add_flag("--pretagged", check_opt.pretagged,
                  "input is vertical form<TAB>tag format; skip tokenizer, "
                  "splitter and tagger");
  check->add_option("--format", check_opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--control", check_opt.control,
                    "override the grammar's control style")
      ->check(CLI::IsMember({"appelt", "all"}));

  std::string tag_path;
  std::string tag_lexicon;
  CLI::App* tag = app.add_subcommand(
      "tag", "Tokenize, split and tag a text; emit vertical format");
  tag->add_option("path", tag_path, "input file; - reads standard input")
      ->required();
  tag->add_option("--lexicon", tag_lexicon,
                  "lexicon file (overrides AGLINT_LEXICON and the builtin)");

  std::string grammar_file;
  CLI::App* grammar_check =
      app.add_subcommand("grammar-check", "Parse a grammar file and report diagnostics");
  grammar_check->add_option("file", grammar_file, "grammar file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (check->parsed()) return do_check(check_opt, out, err, in);
    if (tag->parsed()) return do_tag(tag_path, tag_lexicon, out, in);
    if (grammar_check->parsed()) return do_grammar_check(grammar_file, out, err);
  } catch (const Error& e) {
    err << "aglint: error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace aglint
