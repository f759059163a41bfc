#include "choicectx/axioms.hpp"

namespace choicectx {

namespace {

std::vector<VarSet> choice_functions(const PossibilisticModel& m) {
  std::vector<VarSet> out;
  for (VarSet ctx : m.scenario.contexts()) out.push_back(chosen_set(m, ctx));
  return out;
}

std::string var_name(const Scenario& s, int i) {
  return s.variables()[static_cast<std::size_t>(i)];
}

}  // namespace

Verdict check_weak_axiom(const PossibilisticModel& m) {
  const Scenario& s = m.scenario;
  const auto& ctx = s.contexts();
  const auto f = choice_functions(m);
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    for (std::size_t b = 0; b < ctx.size(); ++b) {
      const VarSet common = ctx[a] & ctx[b];
      // x must be chosen in A but not in B; y chosen in B.
      const VarSet xs = common & f[a] & (common - f[b]);
      const VarSet ys = common & f[b];
      if (xs.empty() || ys.empty()) continue;
      const int x = xs.front();
      const int y = ys.front();
      return Verdict::fail(
          {{ctx[a], ctx[b]}, {x, y}, {}},
          var_name(s, x) + " is chosen from " + s.format(ctx[a]) + " and " + var_name(s, y) +
              " from " + s.format(ctx[b]) + ", both available in each, but " +
              var_name(s, x) + " is not chosen from " + s.format(ctx[b]));
    }
  }
  return Verdict::pass("weak axiom holds for every pair of contexts");
}

Verdict check_no_signalling(const PossibilisticModel& m) {
  const Scenario& s = m.scenario;
  const auto& ctx = s.contexts();
  const auto f = choice_functions(m);
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    for (std::size_t b = a + 1; b < ctx.size(); ++b) {
      const VarSet common = ctx[a] & ctx[b];
      const VarSet disagree = common & VarSet(f[a].bits() ^ f[b].bits());
      if (disagree.empty()) continue;
      const int z = disagree.front();
      const bool in_a = f[a].contains(z);
      return Verdict::fail({{ctx[a], ctx[b]}, {z}, {}},
                           var_name(s, z) + " is " + (in_a ? "" : "not ") + "chosen from " +
                               s.format(ctx[a]) + " but " + (in_a ? "not " : "") +
                               "chosen from " + s.format(ctx[b]));
    }
  }
  return Verdict::pass("choice functions agree on every intersection");
}

Verdict intersection_closed(const Scenario& s) {
  const auto& ctx = s.contexts();
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    for (std::size_t b = a + 1; b < ctx.size(); ++b) {
      const VarSet common = ctx[a] & ctx[b];
      if (common.empty() || s.has_context(common)) continue;
      return Verdict::fail({{ctx[a], ctx[b]}, common.members(), {}},
                           s.format(ctx[a]) + " ∩ " + s.format(ctx[b]) + " = " +
                               s.format(common) + " is not a context");
    }
  }
  return Verdict::pass("contexts are closed under nonempty intersection");
}

Verdict overlap_property(const PossibilisticModel& m) {
  const Scenario& s = m.scenario;
  const auto& ctx = s.contexts();
  const auto f = choice_functions(m);
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    for (std::size_t b = a + 1; b < ctx.size(); ++b) {
      const VarSet common = ctx[a] & ctx[b];
      if (common.empty()) continue;
      if ((common & f[a]).empty() || (common & f[b]).empty()) {
        const bool missing_a = (common & f[a]).empty();
        return Verdict::fail({{ctx[a], ctx[b]}, common.members(), {}},
                             "nothing in " + s.format(common) + " is chosen from " +
                                 s.format(missing_a ? ctx[a] : ctx[b]));
      }
    }
  }
  return Verdict::pass("every overlapping pair has chosen elements in its intersection");
}

Verdict is_choice_structure(const PossibilisticModel& m) {
  const Scenario& s = m.scenario;
  for (VarSet ctx : s.contexts()) {
    const auto& events = m.events(ctx);
    if (events.size() != 1)
      return Verdict::fail({{ctx}, {}, events},
                           "C(" + s.format(ctx) + ") has " + std::to_string(events.size()) +
                               " events");
  }
  return Verdict::pass("exactly one event per context");
}

std::string region_name(const AuditReport& r) {
  std::string choice;
  if (r.no_signalling.holds())
    choice = "no-signalling";
  else if (r.weak_axiom.holds())
    choice = "weak-axiom-only";
  else
    choice = "weak-axiom-violated";
  std::string ctx;
  switch (r.classification.kind) {
    case ContextualityKind::NonContextual:
      ctx = "noncontextual";
      break;
    case ContextualityKind::Contextual:
      ctx = "contextual";
      break;
    case ContextualityKind::StronglyContextual:
      ctx = "strongly-contextual";
      break;
  }
  return choice + " & " + ctx;
}

AuditReport audit(const PossibilisticModel& m, const SearchLimits& limits) {
  AuditReport r;
  r.weak_axiom = check_weak_axiom(m);
  r.no_signalling = check_no_signalling(m);
  r.intersection_closed = intersection_closed(m.scenario);
  r.overlap_property = overlap_property(m);
  r.choice_structure = is_choice_structure(m);
  r.classification = classify(m, limits);

  const bool warp = r.weak_axiom.holds();
  const bool ns = r.no_signalling.holds();
  const bool closed = r.intersection_closed.holds();
  const bool overlap = r.overlap_property.holds();
  const bool contextual = is_contextual(r.classification);

  {
    TheoremCheck t{"thm2", !warp && closed, true, {}};
    if (t.applicable) {
      t.consistent = contextual;
      t.detail = "weak axiom fails on intersection-closed contexts; classification " +
                 std::string(to_string(r.classification.kind));
    } else if (!closed) {
      t.detail = "contexts are not closed under intersection";
    } else {
      t.detail = "weak axiom holds";
    }
    r.theorems.push_back(std::move(t));
  }
  {
    TheoremCheck t{"thm4", ns, true, {}};
    if (t.applicable) {
      t.consistent = warp;
      t.detail = std::string("no-signalling; weak axiom ") + (warp ? "holds" : "FAILS");
    } else {
      t.detail = "model is signalling";
    }
    r.theorems.push_back(std::move(t));
  }
  {
    TheoremCheck t{"thm5", warp && overlap, true, {}};
    if (t.applicable) {
      t.consistent = ns;
      t.detail = std::string("weak axiom and overlap property; no-signalling ") +
                 (ns ? "holds" : "FAILS");
    } else {
      t.detail = warp ? "overlap property fails" : "weak axiom fails";
    }
    int disjoint = 0;
    const auto& ctx = m.scenario.contexts();
    for (std::size_t a = 0; a < ctx.size(); ++a)
      for (std::size_t b = a + 1; b < ctx.size(); ++b)
        if (!ctx[a].intersects(ctx[b])) ++disjoint;
    if (disjoint > 0)
      t.detail += "; " + std::to_string(disjoint) +
                  " disjoint context pair(s) excluded from the overlap property";
    r.theorems.push_back(std::move(t));
  }
  {
    TheoremCheck t{"thm6", warp && !ns, true, {}};
    t.detail = t.applicable ? "observed: weak axiom holds while the model signals"
                            : "not observed in this model";
    r.theorems.push_back(std::move(t));
  }
  r.region = region_name(r);
  return r;
}

}  // namespace choicectx
