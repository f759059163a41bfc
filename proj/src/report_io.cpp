#include "choicectx/report_io.hpp"

namespace choicectx {

using nlohmann::ordered_json;

namespace {

ordered_json names(const Scenario& s, VarSet set) { return s.names(set); }

VarSet set_from(const ordered_json& j, const Scenario& s) {
  try {
    return s.set_of(j.get<std::vector<std::string>>());
  } catch (const Error& e) {
    throw SemanticError(e.what(), "");
  } catch (const nlohmann::json::exception& e) {
    throw SemanticError(e.what(), "");
  }
}

const ordered_json& at(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SemanticError(std::string("missing key '") + key + "'", "");
  return *it;
}

ContextualityKind kind_from(const std::string& name) {
  for (auto k : {ContextualityKind::NonContextual, ContextualityKind::Contextual,
                 ContextualityKind::StronglyContextual})
    if (to_string(k) == name) return k;
  throw SemanticError("unknown classification '" + name + "'", "/kind");
}

}  // namespace

ordered_json to_json(const Verdict& v, const Scenario& s) {
  ordered_json j;
  j["status"] = std::string(to_string(v.status));
  if (v.witness) {
    ordered_json w;
    w["contexts"] = ordered_json::array();
    for (VarSet c : v.witness->contexts) w["contexts"].push_back(names(s, c));
    w["variables"] = ordered_json::array();
    for (int x : v.witness->variables) w["variables"].push_back(s.variables()[static_cast<std::size_t>(x)]);
    w["events"] = ordered_json::array();
    for (VarSet e : v.witness->events) w["events"].push_back(names(s, e));
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["narrative"] = v.narrative;
  j["warnings"] = v.warnings;
  return j;
}

Verdict verdict_from_json(const ordered_json& j, const Scenario& s) {
  Verdict v;
  const std::string status = at(j, "status").get<std::string>();
  if (status == "Holds")
    v.status = Status::Holds;
  else if (status == "Fails")
    v.status = Status::Fails;
  else
    throw SemanticError("unknown status '" + status + "'", "/status");
  const auto& w = at(j, "witness");
  if (!w.is_null()) {
    Witness out;
    for (const auto& c : at(w, "contexts")) out.contexts.push_back(set_from(c, s));
    for (const auto& x : at(w, "variables")) out.variables.push_back(s.index_of(x.get<std::string>()));
    for (const auto& e : at(w, "events")) out.events.push_back(set_from(e, s));
    v.witness = std::move(out);
  }
  v.narrative = at(j, "narrative").get<std::string>();
  v.warnings = at(j, "warnings").get<std::vector<std::string>>();
  return v;
}

ordered_json to_json(const Classification& c, const Scenario& s) {
  ordered_json j;
  j["kind"] = std::string(to_string(c.kind));
  if (c.witness_event) {
    j["witness_event"] = {{"context", names(s, c.witness_event->context)},
                          {"event", names(s, c.witness_event->event)}};
  } else {
    j["witness_event"] = nullptr;
  }
  j["section_count"] = c.section_count;
  j["conclusive"] = c.conclusive;
  return j;
}

Classification classification_from_json(const ordered_json& j, const Scenario& s) {
  Classification c;
  c.kind = kind_from(at(j, "kind").get<std::string>());
  const auto& w = at(j, "witness_event");
  if (!w.is_null()) c.witness_event = EventRef{set_from(at(w, "context"), s), set_from(at(w, "event"), s)};
  c.section_count = at(j, "section_count").get<std::uint64_t>();
  c.conclusive = at(j, "conclusive").get<bool>();
  return c;
}

ordered_json to_json(const AuditReport& r, const Scenario& s) {
  ordered_json j;
  j["weak_axiom"] = to_json(r.weak_axiom, s);
  j["no_signalling"] = to_json(r.no_signalling, s);
  j["intersection_closed"] = to_json(r.intersection_closed, s);
  j["overlap_property"] = to_json(r.overlap_property, s);
  j["choice_structure"] = to_json(r.choice_structure, s);
  j["classification"] = to_json(r.classification, s);
  j["theorems"] = ordered_json::array();
  for (const auto& t : r.theorems) {
    j["theorems"].push_back({{"id", t.id},
                             {"applicable", t.applicable},
                             {"consistent", t.consistent},
                             {"detail", t.detail}});
  }
  j["region"] = r.region;
  return j;
}

AuditReport audit_from_json(const ordered_json& j, const Scenario& s) {
  AuditReport r;
  r.weak_axiom = verdict_from_json(at(j, "weak_axiom"), s);
  r.no_signalling = verdict_from_json(at(j, "no_signalling"), s);
  r.intersection_closed = verdict_from_json(at(j, "intersection_closed"), s);
  r.overlap_property = verdict_from_json(at(j, "overlap_property"), s);
  r.choice_structure = verdict_from_json(at(j, "choice_structure"), s);
  r.classification = classification_from_json(at(j, "classification"), s);
  for (const auto& t : at(j, "theorems")) {
    r.theorems.push_back({at(t, "id").get<std::string>(), at(t, "applicable").get<bool>(),
                          at(t, "consistent").get<bool>(), at(t, "detail").get<std::string>()});
  }
  r.region = at(j, "region").get<std::string>();
  return r;
}

}  // namespace choicectx
