#pragma once

#include <string>
#include <vector>

#include "choicectx/contextuality.hpp"
#include "choicectx/core.hpp"

namespace choicectx {

// Throughout, "x is chosen in A" means x lies in some event of C(A), and
// counterexamples are the first in canonical (context, context, variable,
// variable) order.

/// Weak axiom of revealed preference: for every ordered pair of contexts
/// (A, B) and x, y in A∩B, x chosen in A and y chosen in B imply x chosen
/// in B. The witness lists contexts {A, B} and variables {x, y}.
Verdict check_weak_axiom(const PossibilisticModel& m);

/// No-signalling: the choice functions of any two contexts agree on their
/// intersection. The witness lists contexts {A, B} and variable {z}, with z
/// chosen in A but not in B or the other way round.
Verdict check_no_signalling(const PossibilisticModel& m);

/// Every nonempty intersection of two distinct contexts is itself a context.
Verdict intersection_closed(const Scenario& s);

/// For every pair of distinct contexts with A∩B nonempty, some element of
/// A∩B is chosen in A and some (possibly other) element of A∩B is chosen
/// in B. Disjoint pairs are not constrained.
Verdict overlap_property(const PossibilisticModel& m);

/// |C(U)| = 1 for every context.
Verdict is_choice_structure(const PossibilisticModel& m);

struct TheoremCheck {
  std::string id;
  bool applicable = false;
  bool consistent = true;
  std::string detail;

  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

struct AuditReport {
  Verdict weak_axiom;
  Verdict no_signalling;
  Verdict intersection_closed;
  Verdict overlap_property;
  Verdict choice_structure;
  Classification classification;
  std::vector<TheoremCheck> theorems;
  /// Where the model sits among the no-signalling / weak-axiom /
  /// contextuality regions, e.g. "weak-axiom-only & strongly-contextual".
  std::string region;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Runs every check and the classifier, then records whether each proven
/// implication applies to the model and is borne out by the results:
///
///   thm2  weak axiom fails and contexts are intersection-closed => contextual
///   thm4  no-signalling => weak axiom
///   thm5  weak axiom and overlap property => no-signalling
///   thm6  weak axiom with signalling observed (strictness witness)
///
/// An applicable check with consistent == false means a checker is wrong.
AuditReport audit(const PossibilisticModel& m, const SearchLimits& limits = {});

std::string region_name(const AuditReport& r);

}  // namespace choicectx
