#pragma once

#include "json.hpp"

#include "choicectx/axioms.hpp"
#include "choicectx/contextuality.hpp"
#include "choicectx/core.hpp"

namespace choicectx {

// Machine-readable reports. Sets are written as sorted name lists, so the
// scenario is needed in both directions. Reading throws SemanticError.

nlohmann::ordered_json to_json(const Verdict& v, const Scenario& s);
Verdict verdict_from_json(const nlohmann::ordered_json& j, const Scenario& s);

nlohmann::ordered_json to_json(const Classification& c, const Scenario& s);
Classification classification_from_json(const nlohmann::ordered_json& j, const Scenario& s);

/// {weak_axiom, no_signalling, intersection_closed, overlap_property,
///  choice_structure, classification, theorems: [{id, applicable,
///  consistent, detail}], region}
nlohmann::ordered_json to_json(const AuditReport& r, const Scenario& s);
AuditReport audit_from_json(const nlohmann::ordered_json& j, const Scenario& s);

}  // namespace choicectx
