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

#include "aglint/transducer.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "aglint/errors.hpp"

namespace aglint {

namespace {

using Bindings = std::map<std::string, Span>;

using InputSeq = std::vector<const Annotation*>;

// Offset span of the consumed annotations input[i, j), j > i. The input
// is walked in annotation_order, so the first annotation has the
// smallest start; ends may need a scan when annotations overlap.
Span span_over(const InputSeq& input, std::size_t i, std::size_t j) {
  Span s{input[i]->start, input[i]->end};
  for (std::size_t k = i + 1; k < j; ++k) {
    s.end = std::max(s.end, input[k]->end);
  }
  return s;
}

void bind(Bindings& b, const std::string& label, Span s) {
  auto [it, inserted] = b.emplace(label, s);
  if (!inserted) {
    // a repeated group extends its label's span across iterations
    it->second.start = std::min(it->second.start, s.start);
    it->second.end = std::max(it->second.end, s.end);
  }
}

bool element_matches(const PatternElement& e, const Annotation& a) {
  return std::all_of(e.constraints.begin(), e.constraints.end(),
                     [&](const Constraint& c) { return eval_constraint(c, a); });
}

std::optional<std::size_t> match_group(const PatternGroup& g,
                                       const InputSeq& input, std::size_t pos,
                                       Bindings& b);

std::optional<std::size_t> match_sequence(const std::vector<PatternItem>& items,
                                          const InputSeq& input,
                                          std::size_t pos, Bindings& b);

// Matching is greedy with no backtracking: a quantifier consumes as much
// as it can and the walk never revisits that choice. A failed optional or
// repetition attempt rolls its bindings back and consumes nothing.
std::optional<std::size_t> match_item(const PatternItem& item,
                                      const InputSeq& input, std::size_t pos,
                                      Bindings& b) {
  if (const auto* element = std::get_if<PatternElement>(&item.node)) {
    auto ok = [&](std::size_t k) {
      return k < input.size() && element_matches(*element, *input[k]);
    };
    std::size_t p = pos;
    switch (element->quant) {
      case Quantifier::one:
        if (!ok(p)) return std::nullopt;
        ++p;
        break;
      case Quantifier::optional:
        if (ok(p)) ++p;
        break;
      case Quantifier::plus:
        if (!ok(p)) return std::nullopt;
        ++p;
        [[fallthrough]];
      case Quantifier::star:
        while (ok(p)) ++p;
        break;
    }
    if (element->label && p > pos) {
      bind(b, *element->label, span_over(input, pos, p));
    }
    return p;
  }
  return match_group(std::get<PatternGroup>(item.node), input, pos, b);
}

std::optional<std::size_t> match_sequence(const std::vector<PatternItem>& items,
                                          const InputSeq& input,
                                          std::size_t pos, Bindings& b) {
  for (const PatternItem& item : items) {
    auto next = match_item(item, input, pos, b);
    if (!next) return std::nullopt;
    pos = *next;
  }
  return pos;
}

std::optional<std::size_t> match_group(const PatternGroup& g,
                                       const InputSeq& input, std::size_t pos,
                                       Bindings& b) {
  const std::size_t start = pos;
  switch (g.quant) {
    case Quantifier::one: {
      auto r = match_sequence(g.items, input, pos, b);
      if (!r) return std::nullopt;
      pos = *r;
      break;
    }
    case Quantifier::optional: {
      Bindings saved = b;
      auto r = match_sequence(g.items, input, pos, b);
      if (r) {
        pos = *r;
      } else {
        b = std::move(saved);
      }
      break;
    }
    case Quantifier::plus:
    case Quantifier::star: {
      std::size_t iterations = 0;
      while (true) {
        Bindings saved = b;
        auto r = match_sequence(g.items, input, pos, b);
        if (!r || *r == pos) {
          // a zero-width success would repeat forever; stop iterating
          b = std::move(saved);
          break;
        }
        pos = *r;
        ++iterations;
      }
      if (g.quant == Quantifier::plus && iterations == 0) return std::nullopt;
      break;
    }
  }
  if (g.label && pos > start) {
    bind(b, *g.label, span_over(input, start, pos));
  }
  return pos;
}

struct Attempt {
  std::size_t next;  // input index after the consumed run
  Bindings bindings;
};

// Anchored match of a rule at input[at]. A match must consume at least
// one annotation.
std::optional<Attempt> try_rule(const Rule& rule, const InputSeq& input,
                                std::size_t at) {
  Bindings b;
  auto r = match_group(rule.pattern, input, at, b);
  if (!r || *r == at) return std::nullopt;
  return Attempt{*r, std::move(b)};
}

}  // namespace

bool eval_constraint(const Constraint& c, const Annotation& a) {
  if (a.type != c.ann_type) return false;
  switch (c.op) {
    case ConstraintOp::exists:
      return true;
    case ConstraintOp::equals: {
      const std::string* v = a.feature(c.feature);
      return v != nullptr && *v == c.value;
    }
    case ConstraintOp::regex: {
      const std::string* v = a.feature(c.feature);
      if (v == nullptr) return false;
      if (c.compiled) return std::regex_search(*v, *c.compiled);
      // hand-built constraint without a precompiled pattern
      return std::regex_search(*v, std::regex(c.value, std::regex::ECMAScript));
    }
  }
  return false;
}

std::vector<MatchResult> run_transducer(const Grammar& g, Document& doc,
                                        Span region) {
  if (region.start > region.end || region.end > doc.length()) {
    throw RangeError("transducer region (" + std::to_string(region.start) +
                     "," + std::to_string(region.end) +
                     ") out of bounds for document of " +
                     std::to_string(doc.length()) + " code points");
  }

  // Snapshot the input sequence up front: annotations the rules create
  // are not visible to this run's matching. Annotation storage is
  // stable, so the pointers survive the appends made by fired actions.
  InputSeq input;
  std::set<std::string> seen_types;
  for (const std::string& type : g.input_types) {
    if (!seen_types.insert(type).second) continue;
    for (const Annotation* a : doc.annotations_in(type, region)) {
      input.push_back(a);
    }
  }
  if (seen_types.size() > 1) {
    std::sort(input.begin(), input.end(),
              [](const Annotation* a, const Annotation* b) {
                return annotation_order(*a, *b);
              });
  }

  std::vector<MatchResult> results;
  auto fire = [&](const Rule& rule, std::size_t at, Attempt&& attempt) {
    MatchResult m;
    m.rule_name = rule.name;
    m.span = span_over(input, at, attempt.next);
    m.bound_spans = std::move(attempt.bindings);
    for (const Action& action : rule.actions) {
      auto it = m.bound_spans.find(action.label);
      if (it == m.bound_spans.end()) continue;  // the label consumed nothing
      m.created.push_back(doc.add_annotation(
          action.new_type, it->second.start, it->second.end, action.features));
    }
    results.push_back(std::move(m));
  };

  if (g.control == ControlStyle::all) {
    // every rule fires at every position; matches may overlap
    for (std::size_t i = 0; i < input.size(); ++i) {
      for (const Rule& rule : g.rules) {
        if (auto attempt = try_rule(rule, input, i)) {
          fire(rule, i, std::move(*attempt));
        }
      }
    }
  } else {
    // appelt: longest consumed span wins (largest end offset), ties go to
    // the higher priority, remaining ties to the earlier declaration;
    // matching resumes after the fired match
    std::size_t i = 0;
    while (i < input.size()) {
      const Rule* best_rule = nullptr;
      std::optional<Attempt> best;
      Span best_span{};
      for (const Rule& rule : g.rules) {
        auto attempt = try_rule(rule, input, i);
        if (!attempt) continue;
        const Span span = span_over(input, i, attempt->next);
        bool better = best_rule == nullptr;
        if (!better && span.end != best_span.end) {
          better = span.end > best_span.end;
        } else if (!better && rule.priority != best_rule->priority) {
          better = rule.priority > best_rule->priority;
        }
        if (better) {
          best_rule = &rule;
          best = std::move(attempt);
          best_span = span;
        }
      }
      if (best_rule != nullptr) {
        const std::size_t next = best->next;
        fire(*best_rule, i, std::move(*best));
        i = next;
      } else {
        ++i;
      }
    }
  }
  return results;
}

std::vector<MatchResult> run_transducer(const Grammar& g, Document& doc) {
  return run_transducer(g, doc, Span{0, doc.length()});
}

}  // namespace aglint
