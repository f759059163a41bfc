#include "choicectx/core.hpp"

#include <algorithm>
#include <set>

namespace choicectx {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '\''; };
  if (!head(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), tail);
}

Scenario::Scenario(std::vector<std::string> variables,
                   const std::vector<std::vector<std::string>>& contexts)
    : variables_(std::move(variables)) {
  if (variables_.empty()) throw SemanticError("scenario has no variables", "/variables");
  if (variables_.size() > static_cast<std::size_t>(kMaxVariables))
    throw SemanticError("more than " + std::to_string(kMaxVariables) + " variables",
                        "/variables");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!is_identifier(variables_[i]))
      throw SemanticError("malformed variable name '" + variables_[i] + "'",
                          "/variables/" + std::to_string(i));
  }
  std::sort(variables_.begin(), variables_.end());
  auto dup = std::adjacent_find(variables_.begin(), variables_.end());
  if (dup != variables_.end())
    throw SemanticError("duplicate variable '" + *dup + "'", "/variables");

  if (contexts.empty()) throw SemanticError("scenario has no contexts", "/contexts");
  VarSet covered;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const std::string path = "/contexts/" + std::to_string(c);
    VarSet ctx;
    for (std::size_t k = 0; k < contexts[c].size(); ++k) {
      auto idx = find(contexts[c][k]);
      if (!idx)
        throw SemanticError("unknown variable '" + contexts[c][k] + "'",
                            path + "/" + std::to_string(k));
      if (ctx.contains(*idx))
        throw SemanticError("variable '" + contexts[c][k] + "' repeated in context",
                            path + "/" + std::to_string(k));
      ctx.insert(*idx);
    }
    if (ctx.empty()) throw SemanticError("empty context", path);
    if (std::find(contexts_.begin(), contexts_.end(), ctx) != contexts_.end())
      throw SemanticError("duplicate context " + format(ctx), path);
    contexts_.push_back(ctx);
    covered = covered | ctx;
  }
  if (covered != all()) {
    throw SemanticError(
        "variable '" + variables_[static_cast<std::size_t>((all() - covered).front())] +
            "' is in no context",
        "/contexts");
  }
  std::sort(contexts_.begin(), contexts_.end());
}

std::optional<int> Scenario::find(std::string_view name) const {
  auto it = std::lower_bound(variables_.begin(), variables_.end(), name);
  if (it == variables_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - variables_.begin());
}

int Scenario::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  return *idx;
}

VarSet Scenario::set_of(const std::vector<std::string>& names) const {
  VarSet s;
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::vector<std::string> Scenario::names(VarSet s) const {
  std::vector<std::string> out;
  for (int i : s.members()) out.push_back(variables_[static_cast<std::size_t>(i)]);
  return out;
}

std::string Scenario::format(VarSet s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names(s)) {
    if (!first) out += ',';
    out += n;
    first = false;
  }
  return out + "}";
}

bool Scenario::has_context(VarSet s) const {
  return std::binary_search(contexts_.begin(), contexts_.end(), s);
}

VarSet Scenario::context_of(const std::vector<std::string>& names) const {
  VarSet s = set_of(names);
  if (!has_context(s)) throw UnknownContext(format(s) + " is not a context");
  return s;
}

Assignment restrict(const Assignment& a, VarSet vars) {
  if (!vars.subset_of(a.domain))
    throw UnboundVariable("restriction to variables outside the assignment's domain");
  return {vars, a.ones & vars};
}

PossibilisticModel PossibilisticModel::from_names(
    Scenario scenario,
    const std::vector<std::pair<std::vector<std::string>,
                                std::vector<std::vector<std::string>>>>& table) {
  PossibilisticModel m{std::move(scenario), {}};
  for (const auto& [ctx_names, event_names] : table) {
    VarSet ctx = m.scenario.set_of(ctx_names);
    auto& events = m.supports[ctx];
    for (const auto& e : event_names) events.push_back(m.scenario.set_of(e));
    std::sort(events.begin(), events.end());
  }
  return m;
}

const std::vector<VarSet>& PossibilisticModel::events(VarSet context) const {
  auto it = supports.find(context);
  if (it == supports.end())
    throw UnknownContext(scenario.format(context) + " has no support entry");
  return it->second;
}

VarSet chosen_set(const PossibilisticModel& m, VarSet context) {
  VarSet out;
  for (VarSet e : m.events(context)) out = out | e;
  return out & context;
}

bool chosen(int x, VarSet context, const PossibilisticModel& m) {
  if (!m.scenario.has_context(context))
    throw UnknownContext(m.scenario.format(context) + " is not a context");
  if (x < 0 || x >= m.scenario.variable_count() || !context.contains(x))
    throw VariableNotInContext("variable is not in context " + m.scenario.format(context));
  return chosen_set(m, context).contains(x);
}

std::string_view to_string(Status s) { return s == Status::Holds ? "Holds" : "Fails"; }

Verdict validate(const PossibilisticModel& m) {
  const Scenario& s = m.scenario;
  for (VarSet ctx : s.contexts()) {
    if (!m.supports.contains(ctx))
      return Verdict::fail({{ctx}, {}, {}}, "context " + s.format(ctx) + " has no support entry");
  }
  for (const auto& [ctx, events] : m.supports) {
    if (!ctx.subset_of(s.all()) || !s.has_context(ctx))
      return Verdict::fail({{}, (ctx & s.all()).members(), {}},
                           "support entry for " + s.format(ctx & s.all()) +
                               ", which is not a cover context");
    std::set<VarSet> seen;
    for (VarSet e : events) {
      if (!e.subset_of(ctx))
        return Verdict::fail({{ctx}, (e - ctx).members(), {e & s.all()}},
                             "event " + s.format(e & s.all()) + " is not a subset of " +
                                 s.format(ctx));
      if (!seen.insert(e).second)
        return Verdict::fail({{ctx}, {}, {e}},
                             "event " + s.format(e) + " repeated in " + s.format(ctx));
    }
  }
  Verdict v = Verdict::pass("model is well-formed");
  for (const auto& [ctx, events] : m.supports) {
    if (events.empty())
      v.warnings.push_back("C(" + s.format(ctx) +
                           ") is empty; no global section can exist");
  }
  return v;
}

}  // namespace choicectx
