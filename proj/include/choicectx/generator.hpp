#pragma once

#include <cstdint>

#include "choicectx/core.hpp"

namespace choicectx {

struct GeneratorParams {
  int variables = 4;
  int contexts = 4;
  /// Probability that each candidate event of a context is included.
  double density = 0.5;
  std::uint64_t seed = 0;
  /// Close the cover under nonempty pairwise intersection before choosing
  /// events.
  bool intersection_closed = false;
};

/// Random valid model, reproducible across platforms from the seed.
///
/// Randomness is drawn from std::mt19937_64 seeded with `seed`; a uniform
/// double is the top 53 bits of one draw scaled by 2^-53, and a bounded
/// integer in [0, k) is one draw modulo k. Variables are named x1..xN
/// (zero-padded to a common width). Contexts are drawn by including each
/// variable with probability 1/2, discarding empty and repeated ones; the
/// request is capped at 2^N - 1 distinct contexts. Each variable left
/// uncovered joins a randomly drawn context. Events are then decided per
/// context in canonical order, visiting subsets in increasing mask order.
///
/// Throws std::invalid_argument on out-of-range parameters and TooLarge if
/// a context has more than 24 variables (its events cannot be enumerated).
PossibilisticModel generate_model(const GeneratorParams& params);

}  // namespace choicectx
