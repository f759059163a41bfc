#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "choicectx/core.hpp"

namespace choicectx {

/// Largest variable count the exhaustive (2^n) procedures accept by default.
inline constexpr int kDefaultExhaustiveBound = 24;

struct SearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// 1 iff every cover context sees an event of C(U) under `a`.
/// Throws DomainMismatch unless `a` is total.
bool is_global_section(const Assignment& a, const PossibilisticModel& m);

/// All global sections by checking each of the 2^n total assignments, in
/// binary counting order (variable 0 is the least significant bit).
/// Throws TooLarge if the scenario has more than `bound` variables.
std::vector<Assignment> global_sections_bruteforce(const PossibilisticModel& m,
                                                   int bound = kDefaultExhaustiveBound);

/// Depth-first search over variables in canonical order, pruning as soon as
/// a fully assigned context sees an event outside C(U). Calls `visit` with
/// the support of each global section. Returns false if the deadline
/// expired first, in which case only part of the space was visited.
bool for_each_global_section(const PossibilisticModel& m,
                             const std::function<void(VarSet)>& visit,
                             const SearchLimits& limits = {});

/// Same result set as global_sections_bruteforce, same ordering.
std::vector<Assignment> global_sections_backtracking(const PossibilisticModel& m);

enum class ContextualityKind { NonContextual, Contextual, StronglyContextual };

std::string_view to_string(ContextualityKind k);

struct EventRef {
  VarSet context;
  VarSet event;

  friend bool operator==(const EventRef&, const EventRef&) = default;
};

struct Classification {
  ContextualityKind kind = ContextualityKind::NonContextual;
  /// Canonically first event that no global section reaches; set only for
  /// kind == Contextual.
  std::optional<EventRef> witness_event;
  std::uint64_t section_count = 0;
  /// False when the search hit its deadline; kind and count then reflect
  /// only the sections found so far.
  bool conclusive = true;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Contextual in the broad sense: some event has no extending global
/// section. Strong contextuality is the special case with no section at all.
inline bool is_contextual(const Classification& c) {
  return c.kind != ContextualityKind::NonContextual;
}

/// Expects a validated model. A model with an empty C(U) has no global
/// section and is StronglyContextual.
Classification classify(const PossibilisticModel& m, const SearchLimits& limits = {});

}  // namespace choicectx
