#include "choicectx/model_io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace choicectx {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw SemanticError("unknown key '" + key + "'", path + "/" + key);
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SemanticError(std::string("missing key '") + key + "'", path);
  return *it;
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SemanticError("expected an array", path);
  return v;
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw SemanticError("expected an object", path);
  return v;
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  require_array(v, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      throw SemanticError("expected a variable name", path + "/" + std::to_string(i));
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

VarSet name_set(const Scenario& s, const json& v, const std::string& path) {
  require_array(v, path);
  VarSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string item = path + "/" + std::to_string(i);
    if (!v[i].is_string()) throw SemanticError("expected a variable name", item);
    auto idx = s.find(v[i].get<std::string>());
    if (!idx) throw SemanticError("unknown variable '" + v[i].get<std::string>() + "'", item);
    if (out.contains(*idx))
      throw SemanticError("variable '" + v[i].get<std::string>() + "' repeated", item);
    out.insert(*idx);
  }
  return out;
}

/// Resolves an entry's "context" against the cover, rejecting repeats.
VarSet entry_context(const Scenario& s, const json& entry, const std::string& path,
                     std::set<VarSet>& seen) {
  const std::string ctx_path = path + "/context";
  VarSet ctx = name_set(s, require(entry, "context", path), ctx_path);
  if (!s.has_context(ctx)) throw SemanticError(s.format(ctx) + " is not a context", ctx_path);
  if (!seen.insert(ctx).second)
    throw SemanticError("second entry for context " + s.format(ctx), ctx_path);
  return ctx;
}

void require_complete(const Scenario& s, const std::set<VarSet>& seen, const std::string& path) {
  for (VarSet ctx : s.contexts())
    if (!seen.contains(ctx)) throw SemanticError("no entry for context " + s.format(ctx), path);
}

PossibilisticModel read_possibilistic(Scenario s, const json& entries) {
  const std::string base = "/possibilistic";
  require_array(entries, base);
  PossibilisticModel m{std::move(s), {}};
  std::set<VarSet> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = base + "/" + std::to_string(i);
    const json& entry = require_object(entries[i], path);
    reject_unknown_keys(entry, {"context", "events"}, path);
    const VarSet ctx = entry_context(m.scenario, entry, path, seen);
    const json& events = require_array(require(entry, "events", path), path + "/events");
    std::vector<VarSet> list;
    for (std::size_t j = 0; j < events.size(); ++j) {
      const std::string epath = path + "/events/" + std::to_string(j);
      const VarSet e = name_set(m.scenario, events[j], epath);
      if (!e.subset_of(ctx))
        throw SemanticError("event " + m.scenario.format(e) + " is not a subset of " +
                                m.scenario.format(ctx),
                            epath);
      if (std::find(list.begin(), list.end(), e) != list.end())
        throw SemanticError("event " + m.scenario.format(e) + " repeated", epath);
      list.push_back(e);
    }
    std::sort(list.begin(), list.end());
    m.supports.emplace(ctx, std::move(list));
  }
  require_complete(m.scenario, seen, base);
  Verdict v = validate(m);
  if (!v.holds()) throw SemanticError(v.narrative, base);
  return m;
}

ProbabilisticModel read_probabilistic(Scenario s, const json& entries) {
  const std::string base = "/probabilistic";
  require_array(entries, base);
  ProbabilisticModel p{std::move(s), {}};
  std::set<VarSet> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = base + "/" + std::to_string(i);
    const json& entry = require_object(entries[i], path);
    reject_unknown_keys(entry, {"context", "distribution"}, path);
    const VarSet ctx = entry_context(p.scenario, entry, path, seen);
    const std::string dpath = path + "/distribution";
    const json& dist = require_array(require(entry, "distribution", path), dpath);
    std::vector<Outcome> outcomes;
    for (std::size_t j = 0; j < dist.size(); ++j) {
      const std::string opath = dpath + "/" + std::to_string(j);
      const json& item = require_object(dist[j], opath);
      reject_unknown_keys(item, {"assignment", "p"}, opath);
      const std::string apath = opath + "/assignment";
      const json& bindings = require_object(require(item, "assignment", opath), apath);
      Assignment a;
      for (const auto& [name, bit] : bindings.items()) {
        const std::string bpath = apath + "/" + name;
        auto idx = p.scenario.find(name);
        if (!idx) throw SemanticError("unknown variable '" + name + "'", bpath);
        if (!ctx.contains(*idx))
          throw SemanticError("'" + name + "' is not in context " + p.scenario.format(ctx),
                              bpath);
        if (!bit.is_number_integer() || (bit.get<long long>() != 0 && bit.get<long long>() != 1))
          throw SemanticError("outcome must be 0 or 1", bpath);
        a.domain.insert(*idx);
        if (bit.get<long long>() == 1) a.ones.insert(*idx);
      }
      if (a.domain != ctx)
        throw SemanticError("assignment is not total on " + p.scenario.format(ctx), apath);
      const json& pr = require(item, "p", opath);
      if (!pr.is_number()) throw SemanticError("expected a number", opath + "/p");
      outcomes.push_back({a, pr.get<double>()});
    }
    std::sort(outcomes.begin(), outcomes.end(), [](const Outcome& x, const Outcome& y) {
      return x.assignment.ones < y.assignment.ones;
    });
    p.distributions.emplace(ctx, std::move(outcomes));
  }
  require_complete(p.scenario, seen, base);
  Verdict v = validate_probabilistic(p);
  if (!v.holds()) throw SemanticError(v.narrative, base);
  return p;
}

std::string dump_names(const Scenario& s, VarSet set) { return json(s.names(set)).dump(); }

std::string header(const Scenario& s) {
  std::string out = "{\n  \"variables\": " + json(s.variables()).dump() + ",\n  \"contexts\": [";
  bool first = true;
  for (VarSet ctx : s.contexts()) {
    if (!first) out += ',';
    out += dump_names(s, ctx);
    first = false;
  }
  return out + "],\n";
}

}  // namespace

ModelDocument parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw SyntaxError(what, line, column);
  }
  require_object(doc, "");
  reject_unknown_keys(doc, {"variables", "contexts", "possibilistic", "probabilistic"}, "");

  std::vector<std::vector<std::string>> contexts;
  const json& ctx_list = require_array(require(doc, "contexts", ""), "/contexts");
  for (std::size_t i = 0; i < ctx_list.size(); ++i)
    contexts.push_back(string_list(ctx_list[i], "/contexts/" + std::to_string(i)));
  Scenario scenario(string_list(require(doc, "variables", ""), "/variables"), contexts);

  const bool poss = doc.contains("possibilistic");
  const bool prob = doc.contains("probabilistic");
  if (poss == prob)
    throw SemanticError("exactly one of 'possibilistic' and 'probabilistic' is required", "");
  if (poss) return read_possibilistic(std::move(scenario), doc["possibilistic"]);
  return read_probabilistic(std::move(scenario), doc["probabilistic"]);
}

std::string serialize_model(const PossibilisticModel& m) {
  const Scenario& s = m.scenario;
  std::string out = header(s) + "  \"possibilistic\": [";
  bool first = true;
  for (const auto& [ctx, events] : m.supports) {
    out += first ? "\n" : ",\n";
    out += "    {\"context\": " + dump_names(s, ctx) + ", \"events\": [";
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (i) out += ',';
      out += dump_names(s, events[i]);
    }
    out += "]}";
    first = false;
  }
  return out + "\n  ]\n}\n";
}

std::string serialize_model(const ProbabilisticModel& p) {
  const Scenario& s = p.scenario;
  std::string out = header(s) + "  \"probabilistic\": [";
  bool first = true;
  for (const auto& [ctx, dist] : p.distributions) {
    out += first ? "\n" : ",\n";
    out += "    {\"context\": " + dump_names(s, ctx) + ", \"distribution\": [";
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (i) out += ", ";
      ordered_json bindings = ordered_json::object();
      for (int v : dist[i].assignment.domain.members())
        bindings[s.variables()[static_cast<std::size_t>(v)]] =
            dist[i].assignment.ones.contains(v) ? 1 : 0;
      out += "{\"assignment\": " + bindings.dump() + ", \"p\": " + json(dist[i].p).dump() + "}";
    }
    out += "]}";
    first = false;
  }
  return out + "\n  ]\n}\n";
}

std::string serialize_model(const ModelDocument& doc) {
  return std::visit([](const auto& m) { return serialize_model(m); }, doc);
}

const Scenario& scenario_of(const ModelDocument& doc) {
  return std::visit([](const auto& m) -> const Scenario& { return m.scenario; }, doc);
}

PossibilisticModel possibilistic_view(const ModelDocument& doc) {
  if (const auto* m = std::get_if<PossibilisticModel>(&doc)) return *m;
  return support_reduction(std::get<ProbabilisticModel>(doc));
}

}  // namespace choicectx
