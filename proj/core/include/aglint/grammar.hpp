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

#ifndef AGLINT_GRAMMAR_HPP_
#define AGLINT_GRAMMAR_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aglint/annotation.hpp"

// The annotation-pattern DSL (a JAPE-style subset):
//
//   Input: Token
//   Options: control = appelt
//
//   Rule: PluralSingularPair
//   Priority: 20
//   (
//     { Token.category =~ "^A.p" }
//     { Token.category =~ "^N..s" }
//   ): pair
//   -->
//   :pair.PSAgrError = { rule = "PluralSingularPair" }
//
// A brace group is one pattern element: a conjunction of constraints that
// must all hold on a single annotation. Elements and parenthesized
// subgroups take an optional quantifier (?, *, +) and an optional
// ": label" binding. Constraint operators: bare type (exists), == (string
// equality), =~ (regex found anywhere in the feature value). Action
// feature values are literal strings only; there is no embedded code.
// "//" comments are ignored.

namespace aglint {

enum class ConstraintOp { exists, equals, regex };

/// One test against a single annotation. For op == regex the pattern is
/// compiled at grammar load; match time never compiles.
struct Constraint {
  std::string ann_type;
  std::string feature;  // empty iff op == exists
  ConstraintOp op = ConstraintOp::exists;
  std::string value;
  std::shared_ptr<const std::regex> compiled;  // set iff op == regex

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.ann_type == b.ann_type && a.feature == b.feature &&
           a.op == b.op && a.value == b.value;
  }
};

enum class Quantifier { one, optional, star, plus };

struct PatternItem;

/// A brace group: constraints on one annotation.
struct PatternElement {
  std::vector<Constraint> constraints;
  Quantifier quant = Quantifier::one;
  std::optional<std::string> label;

  bool operator==(const PatternElement&) const = default;
};

/// A parenthesized sequence of elements and subgroups.
struct PatternGroup {
  std::vector<PatternItem> items;
  Quantifier quant = Quantifier::one;
  std::optional<std::string> label;

  bool operator==(const PatternGroup&) const;
};

struct PatternItem {
  std::variant<PatternElement, PatternGroup> node;

  bool operator==(const PatternItem&) const = default;
};

inline bool PatternGroup::operator==(const PatternGroup& o) const {
  return items == o.items && quant == o.quant && label == o.label;
}

/// Right-hand side of a rule: create one annotation of new_type spanning
/// the region bound to label, carrying the given literal features.
struct Action {
  std::string label;
  std::string new_type;
  FeatureMap features;

  bool operator==(const Action&) const = default;
};

struct Rule {
  std::string name;
  int priority = 0;
  PatternGroup pattern;  // the rule's top-level parenthesized group
  std::vector<Action> actions;

  /// Number of leaf (brace-group) elements in the pattern.
  std::size_t element_count() const;

  bool operator==(const Rule&) const = default;
};

/// Match-selection policy. appelt: longest match wins, then priority,
/// then declaration order, and matching resumes after the fired match.
/// all: every rule fires at every position; matches may overlap.
enum class ControlStyle { appelt, all };

std::string_view to_string(ControlStyle c);

struct Grammar {
  std::vector<std::string> input_types;
  ControlStyle control = ControlStyle::appelt;
  std::vector<Rule> rules;

  bool operator==(const Grammar&) const = default;
};

/// Parses grammar source. Regexes are compiled here; an invalid regex is
/// a ParseError naming the rule and the pattern, never a match-time
/// failure.
///
/// Throws ParseError with a line number on any malformed input.
Grammar parse_grammar(std::string_view source,
                      std::string source_name = "<grammar>");

/// Reads and parses a grammar file (conventionally *.jape).
Grammar load_grammar(const std::filesystem::path& path);

/// Canonical source text for a grammar; parse(pretty_print(g)) is
/// structurally equal to g.
std::string pretty_print(const Grammar& g);

}  // namespace aglint

#endif  // AGLINT_GRAMMAR_HPP_
