#include "choicectx/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace choicectx {

namespace {

bool outcome_less(const Outcome& a, const Outcome& b) {
  if (a.assignment.domain != b.assignment.domain) return a.assignment.domain < b.assignment.domain;
  return a.assignment.ones < b.assignment.ones;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

ProbabilisticModel ProbabilisticModel::from_names(
    Scenario scenario,
    const std::vector<std::pair<std::vector<std::string>,
                                std::vector<std::pair<std::vector<std::string>, double>>>>&
        table) {
  ProbabilisticModel p{std::move(scenario), {}};
  for (const auto& [ctx_names, outcomes] : table) {
    const VarSet ctx = p.scenario.set_of(ctx_names);
    auto& dist = p.distributions[ctx];
    for (const auto& [ones, pr] : outcomes) dist.push_back({{ctx, p.scenario.set_of(ones)}, pr});
    std::sort(dist.begin(), dist.end(), outcome_less);
  }
  return p;
}

const std::vector<Outcome>& ProbabilisticModel::distribution(VarSet context) const {
  auto it = distributions.find(context);
  if (it == distributions.end())
    throw UnknownContext(scenario.format(context) + " has no distribution");
  return it->second;
}

Verdict validate_probabilistic(const ProbabilisticModel& p) {
  const Scenario& s = p.scenario;
  for (VarSet ctx : s.contexts()) {
    if (!p.distributions.contains(ctx))
      return Verdict::fail({{ctx}, {}, {}}, "context " + s.format(ctx) + " has no distribution");
  }
  for (const auto& [ctx, dist] : p.distributions) {
    if (!ctx.subset_of(s.all()) || !s.has_context(ctx))
      return Verdict::fail({{}, (ctx & s.all()).members(), {}},
                           "distribution for " + s.format(ctx & s.all()) +
                               ", which is not a cover context");
    std::set<VarSet> seen;
    double total = 0.0;
    for (const Outcome& o : dist) {
      const Assignment& a = o.assignment;
      if (a.domain != ctx || !a.ones.subset_of(a.domain))
        return Verdict::fail({{ctx}, VarSet(a.domain.bits() ^ ctx.bits()).members(), {}},
                             "outcome in " + s.format(ctx) + " is not a total assignment on it");
      if (!seen.insert(a.ones).second)
        return Verdict::fail({{ctx}, {}, {a.ones}},
                             "outcome " + s.format(a.ones) + " repeated in " + s.format(ctx));
      if (!(o.p >= 0.0) || o.p > 1.0)
        return Verdict::fail({{ctx}, {}, {a.ones}},
                             "probability " + fmt_double(o.p) + " of outcome " +
                                 s.format(a.ones) + " in " + s.format(ctx) +
                                 " is outside [0,1]");
      total += o.p;
    }
    if (std::fabs(total - 1.0) > kProbabilityTolerance)
      return Verdict::fail({{ctx}, {}, {}},
                           "distribution on " + s.format(ctx) + " sums to " + fmt_double(total));
  }
  return Verdict::pass("distributions are well-formed");
}

PossibilisticModel support_reduction(const ProbabilisticModel& p) {
  PossibilisticModel m{p.scenario, {}};
  for (const auto& [ctx, dist] : p.distributions) {
    auto& events = m.supports[ctx];
    for (const Outcome& o : dist)
      if (o.p > kProbabilityTolerance) events.push_back(o.assignment.ones);
    std::sort(events.begin(), events.end());
  }
  return m;
}

double eval_probability(const Proposition& phi, const ProbabilisticModel& p) {
  if (!phi.variables.subset_of(p.scenario.all()))
    throw NotMeasurable("proposition uses variables outside the scenario");
  auto ctx = measurable_context(phi.variables, p.scenario);
  if (!ctx) throw NotMeasurable(p.scenario.format(phi.variables) + " lies in no single context");
  double total = 0.0;
  for (const Outcome& o : p.distribution(*ctx))
    if (evaluate(phi.formula, o.assignment.ones)) total += o.p;
  return total;
}

bool jointly_contradictory(const std::vector<Proposition>& phis, const Scenario& s, int bound) {
  const int n = s.variable_count();
  if (n > bound)
    throw TooLarge(std::to_string(n) + " variables exceed the exhaustive bound of " +
                   std::to_string(bound));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const VarSet ones(mask);
    if (std::all_of(phis.begin(), phis.end(),
                    [&](const Proposition& phi) { return evaluate(phi.formula, ones); }))
      return false;
  }
  return true;
}

double bell_violation(const std::vector<Proposition>& phis, const ProbabilisticModel& p,
                      int bound) {
  double total = 0.0;
  for (const auto& phi : phis) total += eval_probability(phi, p);
  if (!jointly_contradictory(phis, p.scenario, bound))
    throw NotContradictory("propositions are jointly satisfiable; the inequality does not apply");
  return total - static_cast<double>(phis.size() - 1);
}

std::vector<Proposition> support_propositions(const PossibilisticModel& m) {
  std::vector<Proposition> out;
  for (VarSet ctx : m.scenario.contexts()) {
    std::optional<Formula> disj;
    for (VarSet event : m.events(ctx)) {
      std::optional<Formula> conj;
      for (int v : ctx.members()) {
        Formula lit = event.contains(v) ? Formula::var(v) : Formula::negation(Formula::var(v));
        conj = conj ? Formula::conjunction(std::move(*conj), std::move(lit)) : std::move(lit);
      }
      disj = disj ? Formula::disjunction(std::move(*disj), std::move(*conj)) : std::move(*conj);
    }
    Formula f = disj ? std::move(*disj) : Formula::constant(false);
    const VarSet vars = variables_of(f);
    out.push_back(Proposition{std::move(f), vars, ctx});
  }
  return out;
}

bool strong_contextuality_via_bell(const PossibilisticModel& m, int bound) {
  return jointly_contradictory(support_propositions(m), m.scenario, bound);
}

}  // namespace choicectx
