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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits non-zero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aglint/cli.hpp"
#include "aglint/errors.hpp"
#include "aglint/pipeline.hpp"
#include "aglint/tagset.hpp"
#include "aglint/transducer.hpp"
#include "support/test_support.hpp"

using namespace aglint;

namespace {

const char* kLexiconPath = AGLINT_REPO_DIR "/lexicons/bulgarian.lex";
const char* kGrammarPath = AGLINT_REPO_DIR "/grammars/agreement.jape";

const std::vector<std::string> kFixtureCorpus = {
    AGLINT_REPO_DIR "/tests/fixtures/bg.txt",
    AGLINT_REPO_DIR "/tests/fixtures/agree.txt",
    AGLINT_REPO_DIR "/tests/fixtures/multi.txt",
    AGLINT_REPO_DIR "/tests/fixtures/definite.txt",
    AGLINT_REPO_DIR "/tests/fixtures/cross.txt",
    AGLINT_REPO_DIR "/tests/fixtures/empty.txt",
};

int failures = 0;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
  try {
    body();
    std::printf("PASS %d: %s\n", number, title.c_str());
  } catch (const std::exception& e) {
    ++failures;
    std::printf("FAIL %d: %s\n        %s\n", number, title.c_str(), e.what());
  }
  std::fflush(stdout);
}

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli_capture(const std::vector<std::string>& args,
                          const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, &in);
  return {code, out.str()};
}

CliResult run_binary(const std::vector<std::string>& args) {
  std::string cmd = "\"" AGLINT_CLI_BIN "\"";
  for (const std::string& a : args) cmd += " \"" + a + "\"";
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunSummary check_phrase(const std::string& phrase) {
  Pipeline p = build_pipeline(kLexiconPath, kGrammarPath);
  Corpus corpus;
  corpus.documents.emplace_back(phrase, "phrase");
  return run_pipeline(p, corpus);
}

// The randomized documents shared by the oracle and consistency
// criteria: 1000 tag sequences of up to 10 tokens, fixed seed.
std::vector<std::vector<std::string>> random_documents() {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> len(0, 10);
  std::uniform_int_distribution<std::size_t> pick(
      0, test::tag_alphabet().size() - 1);
  std::vector<std::vector<std::string>> docs(1000);
  for (auto& tags : docs) {
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      tags.push_back(test::tag_alphabet()[pick(rng)]);
    }
  }
  return docs;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criteria ---------------------------------------------------------------

void pair_rule_reproduction() {
  const auto start = Clock::now();
  const CliResult r = run_cli_capture({"check", "-", "--lexicon", kLexiconPath,
                                       "--grammar", kGrammarPath, "--format",
                                       "json"},
                                      "щастливи дете.");
  const double elapsed = seconds_since(start);
  require(r.exit_code == 1, "expected exit code 1");

  const RunSummary s = check_phrase("щастливи дете.");
  require(s.documents.size() == 1, "expected one document");
  require(s.documents[0].errors.size() == 1,
          "expected exactly one report, got " +
              std::to_string(s.documents[0].errors.size()));
  const ErrorReport& e = s.documents[0].errors[0];
  require(e.rule == "PluralSingularPair", "wrong rule: " + e.rule);
  require(e.annotation_type == "PSAgrError", "wrong type: " + e.annotation_type);
  require(e.start == 0 && e.end == 13,
          "report must span both words (0,13), got (" +
              std::to_string(e.start) + "," + std::to_string(e.end) + ")");
  require(e.text == "щастливи дете", "wrong covered text: " + e.text);
  require(elapsed < 1.0,
          "check took " + std::to_string(elapsed) + "s, limit is 1s");
}

void intro_example_phrases() {
  const RunSummary sp = check_phrase("щастливо деца");
  require(sp.documents[0].errors.size() == 1 &&
              sp.documents[0].errors[0].annotation_type == "SPAgrError",
          "'щастливо деца' must yield exactly one SPAgrError");

  const RunSummary gender = check_phrase("щастлив дете");
  require(gender.documents[0].errors.size() == 1 &&
              gender.documents[0].errors[0].annotation_type == "GenderAgrError",
          "'щастлив дете' must yield exactly one GenderAgrError");

  for (const char* phrase : {"щастливо дете", "щастливи деца"}) {
    const RunSummary clean = check_phrase(phrase);
    require(clean.total_errors() == 0 && clean.exit_code == 0,
            std::string("'") + phrase + "' must be clean with exit code 0");
  }
}

void oracle_equivalence() {
  const Grammar grammar = load_grammar(kGrammarPath);
  require(grammar.control == ControlStyle::all,
          "the bundled grammar must declare control = all");
  const auto docs = random_documents();

  const auto start = Clock::now();
  std::size_t agreeing = 0;
  for (const auto& tags : docs) {
    Document doc = test::tagged_doc(tags);
    std::vector<std::pair<std::string, Span>> engine;
    for (const MatchResult& m : run_transducer(grammar, doc, {0, doc.length()})) {
      engine.emplace_back(m.rule_name, m.span);
    }
    const auto oracle = test::sliding_window_oracle(grammar, tags);
    if (test::sorted_pairs(engine) == test::sorted_pairs(oracle)) ++agreeing;
  }
  const double elapsed = seconds_since(start);
  require(agreeing == docs.size(),
          std::to_string(agreeing) + "/" + std::to_string(docs.size()) +
              " trials agreed with the oracle");
  require(elapsed < 10.0,
          "oracle comparison took " + std::to_string(elapsed) + "s, limit is 10s");
}

void agreement_check_consistency() {
  Pipeline p = build_pipeline(kLexiconPath, kGrammarPath);
  p.assume_pretagged = true;

  std::size_t agreeing = 0;
  const auto docs = random_documents();
  for (const auto& tags : docs) {
    if (tags.empty()) {
      ++agreeing;
      continue;
    }
    std::string vertical;
    for (std::size_t i = 0; i < tags.size(); ++i) {
      vertical += "w" + std::to_string(i) + "\t" + tags[i] + "\n";
    }
    Corpus corpus;
    corpus.documents.push_back(ingest_pretagged(vertical));
    const auto tokens = corpus.documents[0].annotations_of_type("Token");
    const RunSummary s = run_pipeline(p, corpus);

    bool doc_ok = s.exit_code != 2;
    for (std::size_t i = 0; doc_ok && i + 1 < tokens.size(); ++i) {
      const Span pair{tokens[i].start, tokens[i + 1].end};
      std::set<Disagreement> reported;
      for (const ErrorReport& e : s.documents[0].errors) {
        if (Span{e.start, e.end} != pair) continue;
        if (e.annotation_type == "PSAgrError" ||
            e.annotation_type == "SPAgrError") {
          reported.insert(Disagreement::number_mismatch);
        } else if (e.annotation_type == "GenderAgrError") {
          reported.insert(Disagreement::gender_mismatch);
        } else if (e.annotation_type == "DefAgrError") {
          reported.insert(Disagreement::definiteness_placement);
        }
      }
      std::set<Disagreement> expected;
      const MorphFeatures a = decode_tag(tags[i]);
      const MorphFeatures b = decode_tag(tags[i + 1]);
      if (a.pos_class == PosClass::adjective && b.pos_class == PosClass::noun) {
        for (Disagreement d : agreement_check(a, b)) expected.insert(d);
      }
      doc_ok = reported == expected;
    }
    if (doc_ok) ++agreeing;
  }
  require(agreeing == docs.size(),
          std::to_string(agreeing) + "/" + std::to_string(docs.size()) +
              " trials matched agreement_check");
}

void tagset_round_trip() {
  const Lexicon lex = load_lexicon(kLexiconPath);
  require(lex.size() > 0, "bundled lexicon is empty");
  // the article letters normalize to 'd' in the definiteness slot only
  auto normalize = [](std::string tag) {
    const std::size_t def_pos = tag.starts_with("A") ? 3 : 4;
    if (def_pos < tag.size() && (tag[def_pos] == 'h' || tag[def_pos] == 'f')) {
      tag[def_pos] = 'd';
    }
    return tag;
  };
  for (const std::string& tag : lex.tag_inventory()) {
    if (tag.starts_with("Np")) continue;
    const std::string round = encode_tag(decode_tag(tag));
    require(round == normalize(tag),
            "round-trip failed for '" + tag + "': got '" + round + "'");
  }

  std::mt19937 rng(555);
  std::uniform_int_distribution<int> ch(32, 126);
  std::uniform_int_distribution<int> len(1, 8);
  for (int i = 0; i < 100000; ++i) {
    std::string tag;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) tag.push_back(static_cast<char>(ch(rng)));
    try {
      decode_tag(tag);
    } catch (const std::exception& e) {
      throw Failure("decode_tag failed on '" + tag + "': " + e.what());
    }
  }
}

void appelt_semantics() {
  const Grammar longest = parse_grammar(R"(
Input: Token
Options: control = appelt
Rule: Short
Priority: 50
( { Token.category == "X" } ): m
-->
:m.ShortHit = { rule = "Short" }
Rule: Long
Priority: 10
( { Token.category == "X" } { Token.category == "Y" } ): m
-->
:m.LongHit = { rule = "Long" }
)");
  Document doc = test::tagged_doc({"X", "Y"});
  const auto results = run_transducer(longest, doc, {0, doc.length()});
  require(results.size() == 1 && results[0].rule_name == "Long",
          "the two-token rule must win under appelt");

  auto equal_span = [](int first, int second) {
    std::string src = R"(
Input: Token
Options: control = appelt
Rule: A
Priority: )" + std::to_string(first) +
                      R"(
( { Token.category == "X" } ): m
-->
:m.AHit = { rule = "A" }
Rule: B
Priority: )" + std::to_string(second) +
                      R"(
( { Token.category == "X" } ): m
-->
:m.BHit = { rule = "B" }
)";
    Document d = test::tagged_doc({"X"});
    const auto r = run_transducer(parse_grammar(src), d, {0, d.length()});
    require(r.size() == 1, "expected exactly one fired rule");
    return r[0].rule_name;
  };
  require(equal_span(10, 20) == "B", "higher priority must win");
  require(equal_span(20, 10) == "A", "swapping priorities must flip the result");
}

void segmentation_invariants() {
  std::size_t nonempty = 0;
  for (const std::string& path : kFixtureCorpus) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "missing fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Document doc(buf.str(), path);

    if (tokenize(doc) == 0) continue;
    ++nonempty;
    split_sentences(doc);

    const auto tokens = doc.annotations_of_type("Token");
    const auto sentences = doc.annotations_of_type("Sentence");

    std::u32string rebuilt;
    std::size_t cursor = 0;
    for (const Annotation& t : tokens) {
      rebuilt += doc.text().substr(cursor, t.start - cursor);
      rebuilt += doc.text().substr(t.start, t.end - t.start);
      cursor = t.end;
    }
    rebuilt += doc.text().substr(cursor);
    require(rebuilt == doc.text(), "reconstruction failed for " + path);

    for (const Annotation& t : tokens) {
      std::size_t containing = 0;
      for (const Annotation& s : sentences) {
        if (t.start >= s.start && t.end <= s.end) ++containing;
      }
      require(containing == 1, "token not in exactly one sentence in " + path);
    }
  }
  require(nonempty >= 4, "fixture corpus must include several non-empty documents");

  // the multi-sentence fixture must exercise the abbreviation rule
  std::ifstream multi(kFixtureCorpus[2], std::ios::binary);
  std::ostringstream buf;
  buf << multi.rdbuf();
  Document doc(buf.str(), "multi");
  tokenize(doc);
  split_sentences(doc);
  require(doc.annotations_of_type("Sentence").size() == 3,
          "the abbreviation must not split its sentence");
}

void determinism() {
  std::vector<std::string> args = {"check"};
  for (const std::string& path : kFixtureCorpus) args.push_back(path);
  args.insert(args.end(), {"--lexicon", kLexiconPath, "--grammar", kGrammarPath,
                           "--format", "json"});

  const CliResult first = run_binary(args);
  const CliResult second = run_binary(args);
  require(first.exit_code == 1 && second.exit_code == 1,
          "fixture corpus must report errors with exit code 1");
  require(!first.out.empty(), "no output captured from the binary");
  require(first.out == second.out, "two binary runs are not byte-identical");

  const CliResult in_process_1 = run_cli_capture(args);
  const CliResult in_process_2 = run_cli_capture(args);
  require(in_process_1.out == in_process_2.out,
          "two in-process runs must be byte-identical");
  require(in_process_1.out == first.out,
          "in-process and binary output must be byte-identical");

  // the cross-sentence fixture has an adjective ending sentence one and a
  // noun opening sentence two: no report may span the boundary
  const RunSummary cross = check_phrase("щастливи. дете.");
  require(cross.total_errors() == 0, "cross-sentence pair must not be reported");
}

void grammar_parser_diagnostics() {
  const char* pair_rule = R"(Input: Token

Rule: PluralSingularPair
Priority: 20
(
  { Token.category =~ "^A.p" }
  { Token.category =~ "^N..s" }
): pair
-->
:pair.PSAgrError = { rule = "PluralSingularPair" }
)";
  const Grammar g = parse_grammar(pair_rule);
  require(g.rules.size() == 1, "expected one rule");
  require(g.rules[0].priority == 20, "expected priority 20");
  require(g.rules[0].element_count() == 2, "expected two elements");
  require(g.rules[0].actions.size() == 1, "expected one action");

  try {
    parse_grammar("Input: Token\nRule: R\n( { Token } : x\n-->\n:x.T = { }\n");
    throw Failure("malformed grammar must not parse");
  } catch (const ParseError& e) {
    require(e.line() >= 1, "diagnostic must carry a line number");
    require(std::string(e.what()).find(std::to_string(e.line())) !=
                std::string::npos,
            "diagnostic text must name the line");
  }

  const CliResult ok = run_cli_capture({"grammar-check", kGrammarPath});
  require(ok.exit_code == 0, "grammar-check must exit 0 on the bundled grammar");
  require(ok.out == "OK, 6 rules\n", "unexpected grammar-check output: " + ok.out);

  const auto bad = write_temp("aglint_acceptance_bad.jape",
                              "Input: Token\nRule: R\n( { Token } ): x\n");
  require(run_cli_capture({"grammar-check", bad.string()}).exit_code == 1,
          "grammar-check must exit 1 on a malformed grammar");
  require(run_cli_capture({"grammar-check", "/nonexistent.jape"}).exit_code == 2,
          "grammar-check must exit 2 on a missing file");
}

}  // namespace

int main() {
  criterion(1, "pair rule reproduction on 'щастливи дете.'",
            pair_rule_reproduction);
  criterion(2, "intro example phrases", intro_example_phrases);
  criterion(3, "oracle equivalence over 1000 randomized documents",
            oracle_equivalence);
  criterion(4, "agreement-check consistency over the same documents",
            agreement_check_consistency);
  criterion(5, "tagset round-trip and decode totality", tagset_round_trip);
  criterion(6, "appelt longest-match and priority semantics", appelt_semantics);
  criterion(7, "segmentation invariants on the fixture corpus",
            segmentation_invariants);
  criterion(8, "byte-identical reruns and sentence isolation", determinism);
  criterion(9, "grammar parser and grammar-check exit codes",
            grammar_parser_diagnostics);

  if (failures > 0) {
    std::printf("%d of 9 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
