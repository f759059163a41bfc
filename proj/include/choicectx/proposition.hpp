#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choicectx/core.hpp"

namespace choicectx {

/// Propositional formula over a scenario's variables. Binary connectives
/// keep the left-associative shape they were parsed with.
struct Formula {
  enum class Kind { Constant, Variable, Not, And, Or };

  Kind kind = Kind::Constant;
  bool value = false;
  int variable = -1;
  std::vector<Formula> operands;

  static Formula constant(bool v) { return {Kind::Constant, v, -1, {}}; }
  static Formula var(int i) { return {Kind::Variable, false, i, {}}; }
  static Formula negation(Formula f) { return {Kind::Not, false, -1, {std::move(f)}}; }
  static Formula conjunction(Formula l, Formula r) {
    return {Kind::And, false, -1, {std::move(l), std::move(r)}};
  }
  static Formula disjunction(Formula l, Formula r) {
    return {Kind::Or, false, -1, {std::move(l), std::move(r)}};
  }

  friend bool operator==(const Formula&, const Formula&) = default;
};

bool evaluate(const Formula& f, VarSet ones);
VarSet variables_of(const Formula& f);

/// Renders in the input grammar; parsing the result yields the same tree.
std::string to_string(const Formula& f, const Scenario& s);

/// A formula measurable in one context: all its variables lie in
/// `context`, the canonically smallest cover context containing them.
struct Proposition {
  Formula formula;
  VarSet variables;
  VarSet context;
};

/// First (smallest) context containing `vars`, if any.
std::optional<VarSet> measurable_context(VarSet vars, const Scenario& s);

/// Throws NotMeasurable.
Proposition make_proposition(Formula f, const Scenario& s);

/// Grammar, with ! binding tighter than &, and & tighter than |:
///
///   formula := conj ( "|" conj )*
///   conj    := lit ( "&" lit )*
///   lit     := "!" lit | "(" formula ")" | IDENT | "1" | "0"
///
/// Throws SyntaxError (reported on `line`), UnknownVariable.
Formula parse_formula(std::string_view text, const Scenario& s, std::size_t line = 1);

/// parse_formula plus the measurability check. Throws NotMeasurable too.
Proposition parse_proposition(std::string_view text, const Scenario& s, std::size_t line = 1);

/// One formula per line; blank lines and lines starting with '#' are skipped.
std::vector<Proposition> parse_propositions(std::string_view text, const Scenario& s);

}  // namespace choicectx
