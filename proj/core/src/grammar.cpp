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

#include "aglint/grammar.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "aglint/errors.hpp"

namespace aglint {

namespace {

enum class TokKind {
  ident,
  integer,
  str,
  lbrace,
  rbrace,
  lparen,
  rparen,
  colon,
  dot,
  comma,
  eq,
  eq_eq,
  regex_op,  // =~
  arrow,     // -->
  question,
  star,
  plus,
  eof,
};

struct Token {
  TokKind kind;
  std::string text;
  long value = 0;
  int line = 1;
};

const char* describe(TokKind k) {
  switch (k) {
    case TokKind::ident:
      return "identifier";
    case TokKind::integer:
      return "integer";
    case TokKind::str:
      return "string";
    case TokKind::lbrace:
      return "'{'";
    case TokKind::rbrace:
      return "'}'";
    case TokKind::lparen:
      return "'('";
    case TokKind::rparen:
      return "')'";
    case TokKind::colon:
      return "':'";
    case TokKind::dot:
      return "'.'";
    case TokKind::comma:
      return "','";
    case TokKind::eq:
      return "'='";
    case TokKind::eq_eq:
      return "'=='";
    case TokKind::regex_op:
      return "'=~'";
    case TokKind::arrow:
      return "'-->'";
    case TokKind::question:
      return "'?'";
    case TokKind::star:
      return "'*'";
    case TokKind::plus:
      return "'+'";
    case TokKind::eof:
      return "end of input";
  }
  return "token";
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view src, const std::string& source_name) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;

  auto fail = [&](const std::string& msg) -> ParseError {
    return {source_name, line, msg};
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({TokKind::ident, std::string(src.substr(start, i - start)),
                     0, line});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < src.size() &&
         std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t start = i;
      if (c == '-') ++i;
      while (i < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i]))) {
        ++i;
      }
      Token t{TokKind::integer, std::string(src.substr(start, i - start)), 0,
              line};
      t.value = std::stol(t.text);
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      ++i;
      std::string value;
      bool closed = false;
      while (i < src.size()) {
        const char d = src[i];
        if (d == '"') {
          closed = true;
          ++i;
          break;
        }
        if (d == '\n') break;
        if (d == '\\' && i + 1 < src.size()) {
          const char e = src[i + 1];
          if (e == '"' || e == '\\') {
            value.push_back(e);
          } else {
            // keep unknown escapes verbatim; regex sources need them
            value.push_back('\\');
            value.push_back(e);
          }
          i += 2;
          continue;
        }
        value.push_back(d);
        ++i;
      }
      if (!closed) throw fail("unterminated string literal");
      out.push_back({TokKind::str, std::move(value), 0, line});
      continue;
    }
    if (c == '-') {
      if (i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
        out.push_back({TokKind::arrow, "-->", 0, line});
        i += 3;
        continue;
      }
      throw fail("unexpected '-'");
    }
    if (c == '=') {
      if (i + 1 < src.size() && src[i + 1] == '~') {
        out.push_back({TokKind::regex_op, "=~", 0, line});
        i += 2;
        continue;
      }
      if (i + 1 < src.size() && src[i + 1] == '=') {
        out.push_back({TokKind::eq_eq, "==", 0, line});
        i += 2;
        continue;
      }
      out.push_back({TokKind::eq, "=", 0, line});
      ++i;
      continue;
    }
    TokKind kind;
    switch (c) {
      case '{':
        kind = TokKind::lbrace;
        break;
      case '}':
        kind = TokKind::rbrace;
        break;
      case '(':
        kind = TokKind::lparen;
        break;
      case ')':
        kind = TokKind::rparen;
        break;
      case ':':
        kind = TokKind::colon;
        break;
      case '.':
        kind = TokKind::dot;
        break;
      case ',':
        kind = TokKind::comma;
        break;
      case '?':
        kind = TokKind::question;
        break;
      case '*':
        kind = TokKind::star;
        break;
      case '+':
        kind = TokKind::plus;
        break;
      default:
        throw fail(std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), 0, line});
    ++i;
  }
  out.push_back({TokKind::eof, "", 0, line});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::string source_name)
      : source_(std::move(source_name)), toks_(lex(src, source_)) {}

  Grammar parse() {
    while (peek().kind != TokKind::eof) {
      const Token& t = peek();
      if (t.kind != TokKind::ident) {
        throw err(t.line, std::string("expected a directive, got ") +
                              describe(t.kind));
      }
      if (t.text == "Input") {
        parse_input();
      } else if (t.text == "Options") {
        parse_options();
      } else if (t.text == "Rule") {
        parse_rule();
      } else {
        throw err(t.line, "unknown directive '" + t.text + "'");
      }
    }
    if (!saw_input_) {
      throw err(1, "missing 'Input:' declaration");
    }
    return std::move(grammar_);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  Token expect(TokKind kind, const std::string& context) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw err(t.line, "expected " + std::string(describe(kind)) + " " +
                            context + ", got " + describe(t.kind) +
                            (t.text.empty() ? "" : " '" + t.text + "'"));
    }
    return next();
  }

  ParseError err(int line, const std::string& msg) const {
    return {source_, line, msg};
  }

  void parse_input() {
    const int line = next().line;  // Input
    expect(TokKind::colon, "after 'Input'");
    // header directives are line-based: the type list ends with the line
    bool any = false;
    while (peek().kind == TokKind::ident && peek().line == line) {
      grammar_.input_types.push_back(next().text);
      any = true;
    }
    if (!any) {
      throw err(line, "expected at least one annotation type after 'Input:'");
    }
    saw_input_ = true;
  }

  void parse_options() {
    const int line = next().line;  // Options
    expect(TokKind::colon, "after 'Options'");
    bool any = false;
    while (peek().kind == TokKind::ident && peek().line == line &&
           peek(1).kind == TokKind::eq) {
      const Token key = next();
      next();  // =
      const Token value = expect(TokKind::ident, "as option value");
      if (key.text == "control") {
        if (value.text == "appelt") {
          grammar_.control = ControlStyle::appelt;
        } else if (value.text == "all") {
          grammar_.control = ControlStyle::all;
        } else {
          throw err(value.line,
                    "unknown control style '" + value.text + "' (expected appelt or all)");
        }
      } else {
        throw err(key.line, "unknown option '" + key.text + "'");
      }
      any = true;
    }
    if (!any) {
      throw err(peek().line, "expected `key = value` after 'Options:'");
    }
  }

  void parse_rule() {
    next();  // Rule
    expect(TokKind::colon, "after 'Rule'");
    Rule rule;
    const Token name_tok = expect(TokKind::ident, "as rule name");
    rule.name = name_tok.text;
    for (const Rule& r : grammar_.rules) {
      if (r.name == rule.name) {
        throw err(name_tok.line, "duplicate rule name '" + rule.name + "'");
      }
    }
    current_rule_ = rule.name;
    rule_line_ = name_tok.line;

    if (peek().kind == TokKind::ident && peek().text == "Priority" &&
        peek(1).kind == TokKind::colon) {
      next();
      next();
      const Token& t = peek();
      if (t.kind != TokKind::integer) {
        throw err(t.line, "expected integer after 'Priority:', got " +
                              std::string(describe(t.kind)) +
                              (t.text.empty() ? "" : " '" + t.text + "'"));
      }
      rule.priority = static_cast<int>(next().value);
    }

    rule.pattern = parse_group();
    expect(TokKind::arrow, "between pattern and actions");

    std::vector<int> action_lines;
    while (peek().kind == TokKind::colon) {
      action_lines.push_back(peek().line);
      rule.actions.push_back(parse_action());
    }
    if (rule.actions.empty()) {
      throw err(peek().line, "rule '" + rule.name + "' has no actions");
    }

    // every action label must be bound by exactly one pattern unit
    std::set<std::string> labels;
    collect_labels(rule.pattern, labels);
    for (std::size_t i = 0; i < rule.actions.size(); ++i) {
      if (labels.count(rule.actions[i].label) == 0) {
        throw err(action_lines[i], "unbound label '" + rule.actions[i].label +
                                       "' in rule '" + rule.name + "'");
      }
    }

    grammar_.rules.push_back(std::move(rule));
    current_rule_.clear();
  }

  PatternGroup parse_group() {
    const Token open = expect(TokKind::lparen, "to open a pattern group");
    PatternGroup group;
    while (peek().kind != TokKind::rparen) {
      if (peek().kind == TokKind::lbrace) {
        group.items.push_back({parse_element()});
      } else if (peek().kind == TokKind::lparen) {
        group.items.push_back({parse_group()});
      } else if (peek().kind == TokKind::eof) {
        throw err(open.line, "unclosed '(' in pattern");
      } else {
        throw err(peek().line, std::string("expected '{' or '(' in pattern, got ") +
                                   describe(peek().kind));
      }
    }
    next();  // )
    if (group.items.empty()) {
      throw err(open.line, "empty pattern group");
    }
    group.quant = parse_quantifier();
    group.label = parse_label();
    return group;
  }

  PatternElement parse_element() {
    expect(TokKind::lbrace, "to open a constraint group");
    PatternElement element;
    element.constraints.push_back(parse_constraint());
    while (peek().kind == TokKind::comma) {
      next();
      element.constraints.push_back(parse_constraint());
    }
    expect(TokKind::rbrace, "to close the constraint group");
    element.quant = parse_quantifier();
    element.label = parse_label();
    return element;
  }

  Constraint parse_constraint() {
    Constraint c;
    c.ann_type = expect(TokKind::ident, "as annotation type").text;
    if (peek().kind != TokKind::dot) {
      c.op = ConstraintOp::exists;
      return c;
    }
    next();  // .
    c.feature = expect(TokKind::ident, "as feature name").text;
    const Token op = next();
    if (op.kind == TokKind::eq_eq) {
      c.op = ConstraintOp::equals;
      c.value = expect(TokKind::str, "as comparison value").text;
    } else if (op.kind == TokKind::regex_op) {
      c.op = ConstraintOp::regex;
      const Token pattern = expect(TokKind::str, "as regex pattern");
      c.value = pattern.text;
      try {
        c.compiled = std::make_shared<const std::regex>(
            c.value, std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        throw err(pattern.line, "invalid regex \"" + c.value + "\" in rule '" +
                                    current_rule_ + "': " + e.what());
      }
    } else {
      throw err(op.line, std::string("expected '==' or '=~' after feature name, got ") +
                             describe(op.kind));
    }
    return c;
  }

  Quantifier parse_quantifier() {
    switch (peek().kind) {
      case TokKind::question:
        next();
        return Quantifier::optional;
      case TokKind::star:
        next();
        return Quantifier::star;
      case TokKind::plus:
        next();
        return Quantifier::plus;
      default:
        return Quantifier::one;
    }
  }

  std::optional<std::string> parse_label() {
    if (peek().kind != TokKind::colon) return std::nullopt;
    next();
    return expect(TokKind::ident, "as label name").text;
  }

  Action parse_action() {
    expect(TokKind::colon, "to start an action");
    Action action;
    action.label = expect(TokKind::ident, "as action label").text;
    expect(TokKind::dot, "after the action label");
    action.new_type = expect(TokKind::ident, "as the new annotation type").text;
    expect(TokKind::eq, "after the annotation type");
    expect(TokKind::lbrace, "to open the feature list");
    if (peek().kind != TokKind::rbrace) {
      while (true) {
        const std::string key = expect(TokKind::ident, "as feature name").text;
        expect(TokKind::eq, "after the feature name");
        action.features[key] = expect(TokKind::str, "as feature value").text;
        if (peek().kind != TokKind::comma) break;
        next();
      }
    }
    expect(TokKind::rbrace, "to close the feature list");
    return action;
  }

  void collect_labels(const PatternGroup& group, std::set<std::string>& out) {
    if (group.label) {
      if (!out.insert(*group.label).second) {
        throw err(rule_line_, "duplicate label '" + *group.label + "' in rule '" +
                                  current_rule_ + "'");
      }
    }
    for (const PatternItem& item : group.items) {
      if (const auto* element = std::get_if<PatternElement>(&item.node)) {
        if (element->label && !out.insert(*element->label).second) {
          throw err(rule_line_, "duplicate label '" + *element->label +
                                    "' in rule '" + current_rule_ + "'");
        }
      } else {
        collect_labels(std::get<PatternGroup>(item.node), out);
      }
    }
  }

  std::string source_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Grammar grammar_;
  bool saw_input_ = false;
  std::string current_rule_;
  int rule_line_ = 1;
};

std::size_t count_elements(const PatternGroup& group) {
  std::size_t n = 0;
  for (const PatternItem& item : group.items) {
    if (std::holds_alternative<PatternElement>(item.node)) {
      ++n;
    } else {
      n += count_elements(std::get<PatternGroup>(item.node));
    }
  }
  return n;
}

std::string escape_string(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

char quant_suffix(Quantifier q) {
  switch (q) {
    case Quantifier::optional:
      return '?';
    case Quantifier::star:
      return '*';
    case Quantifier::plus:
      return '+';
    default:
      return '\0';
  }
}

void print_constraint(std::ostream& os, const Constraint& c) {
  os << c.ann_type;
  if (c.op == ConstraintOp::exists) return;
  os << '.' << c.feature << (c.op == ConstraintOp::equals ? " == " : " =~ ")
     << '"' << escape_string(c.value) << '"';
}

void print_group(std::ostream& os, const PatternGroup& group, int indent);

void print_item(std::ostream& os, const PatternItem& item, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (const auto* element = std::get_if<PatternElement>(&item.node)) {
    os << pad << "{ ";
    for (std::size_t i = 0; i < element->constraints.size(); ++i) {
      if (i > 0) os << ", ";
      print_constraint(os, element->constraints[i]);
    }
    os << " }";
    if (const char q = quant_suffix(element->quant)) os << q;
    if (element->label) os << ": " << *element->label;
    os << '\n';
  } else {
    print_group(os, std::get<PatternGroup>(item.node), indent);
  }
}

void print_group(std::ostream& os, const PatternGroup& group, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << "(\n";
  for (const PatternItem& item : group.items) {
    print_item(os, item, indent + 2);
  }
  os << pad << ')';
  if (const char q = quant_suffix(group.quant)) os << q;
  if (group.label) os << ": " << *group.label;
  os << '\n';
}

}  // namespace

std::size_t Rule::element_count() const { return count_elements(pattern); }

std::string_view to_string(ControlStyle c) {
  return c == ControlStyle::appelt ? "appelt" : "all";
}

Grammar parse_grammar(std::string_view source, std::string source_name) {
  return Parser(source, std::move(source_name)).parse();
}

Grammar load_grammar(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.view(), path.string());
}

std::string pretty_print(const Grammar& g) {
  std::ostringstream os;
  os << "Input:";
  for (const std::string& t : g.input_types) os << ' ' << t;
  os << '\n';
  os << "Options: control = " << to_string(g.control) << '\n';
  for (const Rule& rule : g.rules) {
    os << '\n';
    os << "Rule: " << rule.name << '\n';
    os << "Priority: " << rule.priority << '\n';
    print_group(os, rule.pattern, 0);
    os << "-->\n";
    for (const Action& action : rule.actions) {
      os << ':' << action.label << '.' << action.new_type << " = { ";
      bool first = true;
      for (const auto& [key, value] : action.features) {
        if (!first) os << ", ";
        os << key << " = \"" << escape_string(value) << '"';
        first = false;
      }
      os << " }\n";
    }
  }
  return std::move(os).str();
}

}  // namespace aglint
