#include "choicectx/contextuality.hpp"

#include <algorithm>
#include <unordered_set>

namespace choicectx {

bool is_global_section(const Assignment& a, const PossibilisticModel& m) {
  if (a.domain != m.scenario.all())
    throw DomainMismatch("a global section must assign every variable");
  for (VarSet ctx : m.scenario.contexts()) {
    const auto& events = m.events(ctx);
    if (std::find(events.begin(), events.end(), support(restrict(a, ctx))) == events.end())
      return false;
  }
  return true;
}

std::vector<Assignment> global_sections_bruteforce(const PossibilisticModel& m, int bound) {
  const int n = m.scenario.variable_count();
  if (n > bound)
    throw TooLarge(std::to_string(n) + " variables exceed the exhaustive bound of " +
                   std::to_string(bound));
  std::vector<Assignment> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Assignment a = Assignment::total(m.scenario, VarSet(mask));
    if (is_global_section(a, m)) out.push_back(a);
  }
  return out;
}

namespace {

struct ClosingCheck {
  VarSet context;
  std::unordered_set<VarSet> allowed;
};

class SectionSearch {
 public:
  SectionSearch(const PossibilisticModel& m, const std::function<void(VarSet)>& visit,
                const SearchLimits& limits)
      : n_(m.scenario.variable_count()), visit_(visit), limits_(limits), closing_(n_) {
    for (VarSet ctx : m.scenario.contexts()) {
      const auto& events = m.events(ctx);
      int last = ctx.members().back();
      closing_[static_cast<std::size_t>(last)].push_back(
          {ctx, std::unordered_set<VarSet>(events.begin(), events.end())});
    }
  }

  bool run() {
    descend(0, VarSet{});
    return !expired_;
  }

 private:
  void descend(int depth, VarSet ones) {
    if (expired_) return;
    if (limits_.deadline && (++nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() >= *limits_.deadline) {
      expired_ = true;
      return;
    }
    if (depth == n_) {
      visit_(ones);
      return;
    }
    for (int bit = 0; bit < 2; ++bit) {
      VarSet next = ones;
      if (bit) next.insert(depth);
      if (consistent(depth, next)) descend(depth + 1, next);
    }
  }

  bool consistent(int depth, VarSet ones) const {
    for (const auto& check : closing_[static_cast<std::size_t>(depth)])
      if (!check.allowed.contains(ones & check.context)) return false;
    return true;
  }

  int n_;
  const std::function<void(VarSet)>& visit_;
  const SearchLimits& limits_;
  std::vector<std::vector<ClosingCheck>> closing_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

}  // namespace

bool for_each_global_section(const PossibilisticModel& m,
                             const std::function<void(VarSet)>& visit,
                             const SearchLimits& limits) {
  return SectionSearch(m, visit, limits).run();
}

std::vector<Assignment> global_sections_backtracking(const PossibilisticModel& m) {
  std::vector<Assignment> out;
  for_each_global_section(m, [&](VarSet ones) {
    out.push_back(Assignment::total(m.scenario, ones));
  });
  std::sort(out.begin(), out.end(), [](const Assignment& a, const Assignment& b) {
    return a.ones.bits() < b.ones.bits();
  });
  return out;
}

std::string_view to_string(ContextualityKind k) {
  switch (k) {
    case ContextualityKind::NonContextual:
      return "NonContextual";
    case ContextualityKind::Contextual:
      return "Contextual";
    case ContextualityKind::StronglyContextual:
      return "StronglyContextual";
  }
  return "?";
}

Classification classify(const PossibilisticModel& m, const SearchLimits& limits) {
  const auto& contexts = m.scenario.contexts();
  std::vector<std::unordered_set<VarSet>> reached(contexts.size());
  Classification out;
  out.conclusive = for_each_global_section(
      m,
      [&](VarSet ones) {
        ++out.section_count;
        for (std::size_t c = 0; c < contexts.size(); ++c) reached[c].insert(ones & contexts[c]);
      },
      limits);

  if (out.section_count == 0) {
    out.kind = ContextualityKind::StronglyContextual;
    return out;
  }
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    for (VarSet e : m.events(contexts[c])) {
      if (!reached[c].contains(e)) {
        out.kind = ContextualityKind::Contextual;
        out.witness_event = EventRef{contexts[c], e};
        return out;
      }
    }
  }
  out.kind = ContextualityKind::NonContextual;
  return out;
}

}  // namespace choicectx
