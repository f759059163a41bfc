#include "choicectx/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "choicectx/contextuality.hpp"

namespace choicectx {

namespace {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

void close_under_intersection(std::vector<VarSet>& cover) {
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = cover.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const VarSet common = cover[a] & cover[b];
        if (common.empty() || std::find(cover.begin(), cover.end(), common) != cover.end())
          continue;
        cover.push_back(common);
        grew = true;
      }
    }
  }
}

}  // namespace

PossibilisticModel generate_model(const GeneratorParams& params) {
  if (params.variables < 1 || params.variables > kMaxVariables)
    throw std::invalid_argument("variable count must be in [1, 64]");
  if (params.contexts < 1) throw std::invalid_argument("context count must be positive");
  if (!(params.density >= 0.0 && params.density <= 1.0))
    throw std::invalid_argument("density must be in [0, 1]");

  const int n = params.variables;
  Stream rng(params.seed);

  std::uint64_t wanted = static_cast<std::uint64_t>(params.contexts);
  if (n < 63) wanted = std::min(wanted, (std::uint64_t{1} << n) - 1);
  std::vector<VarSet> cover;
  while (cover.size() < wanted) {
    VarSet ctx;
    for (int v = 0; v < n; ++v)
      if (rng.coin()) ctx.insert(v);
    if (!ctx.empty() && std::find(cover.begin(), cover.end(), ctx) == cover.end())
      cover.push_back(ctx);
  }
  VarSet covered;
  for (VarSet c : cover) covered = covered | c;
  for (int v : (VarSet::range(n) - covered).members())
    cover[rng.below(cover.size())].insert(v);
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (params.intersection_closed) close_under_intersection(cover);
  std::sort(cover.begin(), cover.end());

  const int width = static_cast<int>(std::to_string(n).size());
  std::vector<std::string> names;
  for (int v = 1; v <= n; ++v) {
    std::string digits = std::to_string(v);
    names.push_back("x" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') +
                    digits);
  }
  std::vector<std::vector<std::string>> contexts;
  for (VarSet c : cover) {
    std::vector<std::string> ctx;
    for (int v : c.members()) ctx.push_back(names[static_cast<std::size_t>(v)]);
    contexts.push_back(std::move(ctx));
  }

  PossibilisticModel m{Scenario(names, contexts), {}};
  for (VarSet ctx : m.scenario.contexts()) {
    if (ctx.size() > kDefaultExhaustiveBound)
      throw TooLarge("context with " + std::to_string(ctx.size()) + " variables");
    auto& events = m.supports[ctx];
    for_each_subset(ctx, [&](VarSet e) {
      if (rng.uniform() < params.density) events.push_back(e);
    });
    std::sort(events.begin(), events.end());
  }
  return m;
}

}  // namespace choicectx
