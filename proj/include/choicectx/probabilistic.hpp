#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "choicectx/contextuality.hpp"
#include "choicectx/core.hpp"
#include "choicectx/proposition.hpp"

namespace choicectx {

/// Tolerance for distribution sums, and the threshold above which a
/// probability counts as positive.
inline constexpr double kProbabilityTolerance = 1e-9;

/// One joint outcome on a context and its probability.
struct Outcome {
  Assignment assignment;
  double p = 0.0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// A probability distribution over total local assignments, per context.
struct ProbabilisticModel {
  Scenario scenario;
  std::map<VarSet, std::vector<Outcome>> distributions;

  /// Each outcome is given by the variables it sets to 1; the rest of the
  /// context is 0. Outcomes are sorted canonically.
  static ProbabilisticModel from_names(
      Scenario scenario,
      const std::vector<std::pair<std::vector<std::string>,
                                  std::vector<std::pair<std::vector<std::string>, double>>>>&
          table);

  /// Throws UnknownContext.
  const std::vector<Outcome>& distribution(VarSet context) const;

  friend bool operator==(const ProbabilisticModel&, const ProbabilisticModel&) = default;
};

Verdict validate_probabilistic(const ProbabilisticModel& p);

/// C(U) = supports of the outcomes with probability above the tolerance.
PossibilisticModel support_reduction(const ProbabilisticModel& p);

/// Probability that `phi` holds, evaluated in the smallest context of
/// `p`'s cover that contains its variables. Throws NotMeasurable.
double eval_probability(const Proposition& phi, const ProbabilisticModel& p);

/// 1 iff no total assignment satisfies every proposition. Exhaustive over
/// 2^n assignments; throws TooLarge above `bound` variables.
bool jointly_contradictory(const std::vector<Proposition>& phis, const Scenario& s,
                           int bound = kDefaultExhaustiveBound);

/// Σ P(φ_i) − (N − 1) for jointly contradictory φ_1..φ_N. Positive values
/// certify contextuality; 1 is the maximum. Throws NotContradictory,
/// NotMeasurable, TooLarge.
double bell_violation(const std::vector<Proposition>& phis, const ProbabilisticModel& p,
                      int bound = kDefaultExhaustiveBound);

/// Per context U, in canonical order, the disjunction over η ∈ C(U) of the
/// full conjunction fixing U to η. Empty C(U) gives the constant 0.
std::vector<Proposition> support_propositions(const PossibilisticModel& m);

/// Strong contextuality decided as joint contradiction of the support
/// propositions, independently of the section search. Throws TooLarge.
bool strong_contextuality_via_bell(const PossibilisticModel& m,
                                   int bound = kDefaultExhaustiveBound);

}  // namespace choicectx
