#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "choicectx/core.hpp"
#include "choicectx/probabilistic.hpp"

namespace choicectx {

using ModelDocument = std::variant<PossibilisticModel, ProbabilisticModel>;

/// Reads a model document:
///
///   {
///     "variables": ["a", "b"],
///     "contexts": [["a", "b"]],
///     "possibilistic": [{"context": ["a", "b"], "events": [[], ["a", "b"]]}]
///   }
///
/// or, in place of "possibilistic",
///
///   "probabilistic": [{"context": ["a", "b"], "distribution":
///                      [{"assignment": {"a": 1, "b": 0}, "p": 0.5}, ...]}]
///
/// Names are order-insensitive. Unknown keys are rejected. The returned
/// model has passed validate() / validate_probabilistic(); an empty C(U) is
/// accepted. Throws SyntaxError (malformed JSON) or SemanticError (anything
/// else, with a JSON pointer to the offending value).
ModelDocument parse_model(std::string_view text);

/// Canonical text: sorted names, contexts and events in VarSet order, one
/// context per line. Parsing the output yields an equal model.
std::string serialize_model(const PossibilisticModel& m);
std::string serialize_model(const ProbabilisticModel& p);
std::string serialize_model(const ModelDocument& doc);

const Scenario& scenario_of(const ModelDocument& doc);

/// The possibilistic model itself, or the support reduction of a
/// probabilistic one.
PossibilisticModel possibilistic_view(const ModelDocument& doc);

}  // namespace choicectx
