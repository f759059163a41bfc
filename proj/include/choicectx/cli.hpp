#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "choicectx/contextuality.hpp"
#include "choicectx/generator.hpp"

namespace choicectx::cli {

inline constexpr int kExitOk = 0;
/// --strict and the model is contextual, signalling, violates the weak
/// axiom, or (bell) violates the inequality.
inline constexpr int kExitInteresting = 1;
inline constexpr int kExitInputError = 2;
/// The --budget expired before the section search finished.
inline constexpr int kExitInconclusive = 3;

enum class Command { Classify, Axioms, Audit, Bell, Gen };
enum class OutputMode { Human, Machine };

struct RunConfig {
  Command command = Command::Classify;
  std::string input;
  std::string props;
  OutputMode output = OutputMode::Human;
  bool strict = false;
  int bound = kDefaultExhaustiveBound;
  std::optional<double> budget_seconds;
  GeneratorParams gen;
  bool seed_given = false;
};

/// Executes one command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `argv` into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace choicectx::cli
