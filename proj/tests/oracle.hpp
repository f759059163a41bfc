#pragma once

// Reference implementations used only by tests. They work on plain name
// maps and sets and share no code path with the library's bitmask search.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "choicectx/core.hpp"

namespace oracle {

using Names = std::set<std::string>;
using Table = std::map<Names, std::set<Names>>;
using Total = std::map<std::string, int>;

struct Model {
  std::vector<std::string> variables;
  Table table;
};

inline Model from(const choicectx::PossibilisticModel& m) {
  Model out{m.scenario.variables(), {}};
  for (const auto& [ctx, events] : m.supports) {
    auto names = m.scenario.names(ctx);
    auto& slot = out.table[Names(names.begin(), names.end())];
    for (auto e : events) {
      auto en = m.scenario.names(e);
      slot.insert(Names(en.begin(), en.end()));
    }
  }
  return out;
}

inline std::vector<Total> all_totals(const std::vector<std::string>& vars) {
  std::vector<Total> out;
  const std::uint64_t count = std::uint64_t{1} << vars.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    Total t;
    for (std::size_t i = 0; i < vars.size(); ++i) t[vars[i]] = static_cast<int>((k >> i) & 1U);
    out.push_back(t);
  }
  return out;
}

inline Names ones_on(const Total& t, const Names& ctx) {
  Names out;
  for (const auto& x : ctx)
    if (t.at(x) == 1) out.insert(x);
  return out;
}

inline bool is_section(const Model& m, const Total& t) {
  for (const auto& [ctx, events] : m.table)
    if (!events.contains(ones_on(t, ctx))) return false;
  return true;
}

inline std::vector<Total> sections(const Model& m) {
  std::vector<Total> out;
  for (const auto& t : all_totals(m.variables))
    if (is_section(m, t)) out.push_back(t);
  return out;
}

/// 0 noncontextual, 1 contextual, 2 strongly contextual.
inline int classify(const Model& m) {
  auto secs = sections(m);
  if (secs.empty()) return 2;
  for (const auto& [ctx, events] : m.table) {
    for (const auto& e : events) {
      bool reached = false;
      for (const auto& s : secs) reached = reached || ones_on(s, ctx) == e;
      if (!reached) return 1;
    }
  }
  return 0;
}

inline bool chosen(const Model& m, const Names& ctx, const std::string& x) {
  for (const auto& e : m.table.at(ctx))
    if (e.contains(x)) return true;
  return false;
}

inline Names meet(const Names& a, const Names& b) {
  Names out;
  for (const auto& x : a)
    if (b.contains(x)) out.insert(x);
  return out;
}

inline bool weak_axiom(const Model& m) {
  for (const auto& [a, ea] : m.table)
    for (const auto& [b, eb] : m.table)
      for (const auto& x : meet(a, b))
        for (const auto& y : meet(a, b))
          if (chosen(m, a, x) && chosen(m, b, y) && !chosen(m, b, x)) return false;
  return true;
}

inline bool no_signalling(const Model& m) {
  for (const auto& [a, ea] : m.table)
    for (const auto& [b, eb] : m.table)
      for (const auto& z : meet(a, b))
        if (chosen(m, a, z) != chosen(m, b, z)) return false;
  return true;
}

inline bool overlap(const Model& m) {
  for (const auto& [a, ea] : m.table) {
    for (const auto& [b, eb] : m.table) {
      if (a == b) continue;
      const Names common = meet(a, b);
      if (common.empty()) continue;
      bool in_a = false;
      bool in_b = false;
      for (const auto& x : common) {
        in_a = in_a || chosen(m, a, x);
        in_b = in_b || chosen(m, b, x);
      }
      if (!in_a || !in_b) return false;
    }
  }
  return true;
}

inline bool intersection_closed(const Model& m) {
  for (const auto& [a, ea] : m.table) {
    for (const auto& [b, eb] : m.table) {
      const Names common = meet(a, b);
      if (!common.empty() && !m.table.contains(common)) return false;
    }
  }
  return true;
}

}  // namespace oracle
