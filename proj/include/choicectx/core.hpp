#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "choicectx/errors.hpp"
#include "choicectx/varset.hpp"

namespace choicectx {

/// Variables (alternatives or measurements) plus the cover of contexts
/// (menus, budgets, experiments) on which outcomes are observed.
///
/// Construction canonicalizes: variables are sorted by name, contexts are
/// sorted in VarSet order. Invalid input throws SemanticError: no
/// variables, a malformed or repeated name, an empty or repeated context,
/// a context naming an unknown variable, or a variable outside every
/// context.
class Scenario {
 public:
  Scenario(std::vector<std::string> variables,
           const std::vector<std::vector<std::string>>& contexts);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<VarSet>& contexts() const { return contexts_; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  VarSet all() const { return VarSet::range(variable_count()); }

  std::optional<int> find(std::string_view name) const;
  /// Throws UnknownVariable.
  int index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  VarSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names(VarSet s) const;
  /// "{a,b'}"
  std::string format(VarSet s) const;

  bool has_context(VarSet s) const;
  /// Throws UnknownContext.
  VarSet context_of(const std::vector<std::string>& names) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<VarSet> contexts_;
};

bool is_identifier(std::string_view name);

/// A partial map from variables to {0,1}: `ones` are the variables bound to
/// 1, the rest of `domain` is bound to 0.
struct Assignment {
  VarSet domain;
  VarSet ones;

  static Assignment total(const Scenario& s, VarSet ones) { return {s.all(), ones}; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Throws UnboundVariable if `vars` is not inside the assignment's domain.
Assignment restrict(const Assignment& a, VarSet vars);

/// The variables mapped to 1.
inline VarSet support(const Assignment& a) { return a.ones; }

/// A binary empirical model / choice rule: for each context U the events
/// (subsets of U with outcome 1) that can occur.
///
/// `supports` is not required to be well-formed; validate() checks it.
struct PossibilisticModel {
  Scenario scenario;
  std::map<VarSet, std::vector<VarSet>> supports;

  /// Builds from names; events for each context are sorted canonically but
  /// duplicates are kept so validation can report them.
  static PossibilisticModel from_names(
      Scenario scenario,
      const std::vector<std::pair<std::vector<std::string>,
                                  std::vector<std::vector<std::string>>>>& table);

  /// Throws UnknownContext.
  const std::vector<VarSet>& events(VarSet context) const;

  friend bool operator==(const PossibilisticModel&, const PossibilisticModel&) = default;
};

/// The choice function f_U: the union of all events possible in U.
/// Throws UnknownContext.
VarSet chosen_set(const PossibilisticModel& m, VarSet context);

/// 1 iff x lies in some event of C(U). Throws UnknownContext,
/// VariableNotInContext.
bool chosen(int x, VarSet context, const PossibilisticModel& m);

enum class Status { Holds, Fails };

std::string_view to_string(Status s);

/// Structured counterexample. Lists are in the order the check defines
/// (for the weak axiom: contexts A, B and variables x, y).
struct Witness {
  std::vector<VarSet> contexts;
  std::vector<int> variables;
  std::vector<VarSet> events;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Status status = Status::Holds;
  std::optional<Witness> witness;
  std::string narrative;
  std::vector<std::string> warnings;

  bool holds() const { return status == Status::Holds; }

  static Verdict pass(std::string narrative) {
    return {Status::Holds, std::nullopt, std::move(narrative), {}};
  }
  static Verdict fail(Witness w, std::string narrative) {
    return {Status::Fails, std::move(w), std::move(narrative), {}};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Well-formedness of a model: one support entry per cover context and no
/// others, events inside their context, no duplicate events. An empty C(U)
/// is allowed and reported as a warning.
Verdict validate(const PossibilisticModel& m);

}  // namespace choicectx
