#include "choicectx/proposition.hpp"

#include <cctype>

namespace choicectx {

bool evaluate(const Formula& f, VarSet ones) {
  switch (f.kind) {
    case Formula::Kind::Constant:
      return f.value;
    case Formula::Kind::Variable:
      return ones.contains(f.variable);
    case Formula::Kind::Not:
      return !evaluate(f.operands[0], ones);
    case Formula::Kind::And:
      return evaluate(f.operands[0], ones) && evaluate(f.operands[1], ones);
    case Formula::Kind::Or:
      return evaluate(f.operands[0], ones) || evaluate(f.operands[1], ones);
  }
  return false;
}

VarSet variables_of(const Formula& f) {
  if (f.kind == Formula::Kind::Variable) return VarSet{f.variable};
  VarSet out;
  for (const auto& op : f.operands) out = out | variables_of(op);
  return out;
}

namespace {

int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void render(const Formula& f, const Scenario& s, std::string& out) {
  auto child = [&](const Formula& c, bool right) {
    // Conjunctions under a disjunction get parentheses for readability;
    // a right operand of equal precedence needs them to keep its shape.
    bool wrap = precedence(c) < precedence(f) || (right && precedence(c) == precedence(f)) ||
                (f.kind == Formula::Kind::Or && c.kind == Formula::Kind::And);
    if (wrap) out += '(';
    render(c, s, out);
    if (wrap) out += ')';
  };
  switch (f.kind) {
    case Formula::Kind::Constant:
      out += f.value ? '1' : '0';
      break;
    case Formula::Kind::Variable:
      out += s.variables()[static_cast<std::size_t>(f.variable)];
      break;
    case Formula::Kind::Not:
      out += '!';
      child(f.operands[0], false);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      child(f.operands[0], false);
      out += f.kind == Formula::Kind::And ? " & " : " | ";
      child(f.operands[1], true);
      break;
  }
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Scenario& s, std::size_t line)
      : text_(text), scenario_(s), line_(line) {}

  Formula parse() {
    Formula f = disjunction();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (accept('|')) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = literal();
    while (accept('&')) f = Formula::conjunction(std::move(f), literal());
    return f;
  }

  Formula literal() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of formula");
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Formula::negation(literal());
    }
    if (c == '(') {
      ++pos_;
      Formula f = disjunction();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Formula::constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      return Formula::var(scenario_.index_of(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, line_, pos_ + 1);
  }

  std::string_view text_;
  const Scenario& scenario_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Formula& f, const Scenario& s) {
  std::string out;
  render(f, s, out);
  return out;
}

std::optional<VarSet> measurable_context(VarSet vars, const Scenario& s) {
  for (VarSet ctx : s.contexts())
    if (vars.subset_of(ctx)) return ctx;
  return std::nullopt;
}

Proposition make_proposition(Formula f, const Scenario& s) {
  const VarSet vars = variables_of(f);
  auto ctx = measurable_context(vars, s);
  if (!ctx) throw NotMeasurable(s.format(vars) + " lies in no single context");
  return {std::move(f), vars, *ctx};
}

Formula parse_formula(std::string_view text, const Scenario& s, std::size_t line) {
  return FormulaParser(text, s, line).parse();
}

Proposition parse_proposition(std::string_view text, const Scenario& s, std::size_t line) {
  return make_proposition(parse_formula(text, s, line), s);
}

std::vector<Proposition> parse_propositions(std::string_view text, const Scenario& s) {
  std::vector<Proposition> out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const std::size_t nl = text.find('\n');
    std::string_view row = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    const std::size_t first = row.find_first_not_of(" \t");
    if (first == std::string_view::npos || row[first] == '#') continue;
    out.push_back(parse_proposition(row, s, line));
  }
  return out;
}

}  // namespace choicectx
