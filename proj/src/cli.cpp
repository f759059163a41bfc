#include "choicectx/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "choicectx/axioms.hpp"
#include "choicectx/model_io.hpp"
#include "choicectx/probabilistic.hpp"
#include "choicectx/proposition.hpp"
#include "choicectx/report_io.hpp"

namespace choicectx::cli {

using nlohmann::ordered_json;

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("cannot read '" + path + "'");
  return buf.str();
}

SearchLimits limits_for(const RunConfig& c) {
  SearchLimits limits;
  if (c.budget_seconds) {
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*c.budget_seconds));
  }
  return limits;
}

std::string number(double v) { return nlohmann::json(v).dump(); }

void print_verdict(std::ostream& out, const char* name, const Verdict& v) {
  out << name << ": " << to_string(v.status) << "  (" << v.narrative << ")\n";
}

void print_classification(std::ostream& out, const Classification& c, const Scenario& s) {
  out << to_string(c.kind);
  if (!c.conclusive) out << " (INCONCLUSIVE: time budget expired, partial search)";
  out << "\n  global sections: " << c.section_count << (c.conclusive ? "" : " found so far")
      << "\n";
  if (c.witness_event) {
    out << "  witness: event " << s.format(c.witness_event->event) << " in context "
        << s.format(c.witness_event->context) << " extends to no global section\n";
  }
}

void emit_warnings(std::ostream& err, const Verdict& validation) {
  for (const auto& w : validation.warnings) err << "warning: " << w << "\n";
}

ordered_json warnings_json(const Verdict& validation) { return validation.warnings; }

struct Axioms {
  Verdict weak_axiom;
  Verdict no_signalling;
  Verdict intersection_closed;
  Verdict overlap_property;
  Verdict choice_structure;
};

int run_classify(const RunConfig& c, const PossibilisticModel& m, const Verdict& validation,
                 std::ostream& out) {
  const Classification cls = classify(m, limits_for(c));
  if (c.output == OutputMode::Machine) {
    ordered_json j;
    j["classification"] = to_json(cls, m.scenario);
    j["warnings"] = warnings_json(validation);
    out << j.dump(2) << "\n";
  } else {
    print_classification(out, cls, m.scenario);
  }
  if (!cls.conclusive) return kExitInconclusive;
  return c.strict && is_contextual(cls) ? kExitInteresting : kExitOk;
}

int run_axioms(const RunConfig& c, const PossibilisticModel& m, const Verdict& validation,
               std::ostream& out) {
  const Axioms a{check_weak_axiom(m), check_no_signalling(m), intersection_closed(m.scenario),
                 overlap_property(m), is_choice_structure(m)};
  if (c.output == OutputMode::Machine) {
    ordered_json j;
    j["weak_axiom"] = to_json(a.weak_axiom, m.scenario);
    j["no_signalling"] = to_json(a.no_signalling, m.scenario);
    j["intersection_closed"] = to_json(a.intersection_closed, m.scenario);
    j["overlap_property"] = to_json(a.overlap_property, m.scenario);
    j["choice_structure"] = to_json(a.choice_structure, m.scenario);
    j["warnings"] = warnings_json(validation);
    out << j.dump(2) << "\n";
  } else {
    print_verdict(out, "weak_axiom", a.weak_axiom);
    print_verdict(out, "no_signalling", a.no_signalling);
    print_verdict(out, "intersection_closed", a.intersection_closed);
    print_verdict(out, "overlap_property", a.overlap_property);
    print_verdict(out, "choice_structure", a.choice_structure);
  }
  const bool interesting = !a.weak_axiom.holds() || !a.no_signalling.holds();
  return c.strict && interesting ? kExitInteresting : kExitOk;
}

int run_audit(const RunConfig& c, const PossibilisticModel& m, const Verdict& validation,
              std::ostream& out) {
  const AuditReport r = audit(m, limits_for(c));
  if (c.output == OutputMode::Machine) {
    ordered_json j = to_json(r, m.scenario);
    j["warnings"] = warnings_json(validation);
    out << j.dump(2) << "\n";
  } else {
    print_verdict(out, "weak_axiom", r.weak_axiom);
    print_verdict(out, "no_signalling", r.no_signalling);
    print_verdict(out, "intersection_closed", r.intersection_closed);
    print_verdict(out, "overlap_property", r.overlap_property);
    print_verdict(out, "choice_structure", r.choice_structure);
    out << "classification: ";
    print_classification(out, r.classification, m.scenario);
    out << "theorems:\n";
    for (const auto& t : r.theorems) {
      out << "  " << t.id << ": " << (t.applicable ? "applicable" : "not applicable") << ", "
          << (t.consistent ? "consistent" : "INCONSISTENT") << "  (" << t.detail << ")\n";
    }
    out << "region: " << r.region << "\n";
  }
  if (!r.classification.conclusive) return kExitInconclusive;
  const bool interesting =
      is_contextual(r.classification) || !r.weak_axiom.holds() || !r.no_signalling.holds();
  return c.strict && interesting ? kExitInteresting : kExitOk;
}

int run_bell(const RunConfig& c, const ModelDocument& doc, std::ostream& out) {
  const auto* p = std::get_if<ProbabilisticModel>(&doc);
  if (!p) throw InputError("bell needs a probabilistic model document");
  const auto phis = parse_propositions(read_file(c.props), p->scenario);
  const double violation = bell_violation(phis, *p, c.bound);
  if (c.output == OutputMode::Machine) {
    ordered_json j;
    j["violation"] = violation;
    j["propositions"] = ordered_json::array();
    for (const auto& phi : phis) {
      j["propositions"].push_back({{"formula", to_string(phi.formula, p->scenario)},
                                   {"context", p->scenario.names(phi.context)},
                                   {"probability", eval_probability(phi, *p)}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "violation: " << number(violation) << "\n";
    for (const auto& phi : phis) {
      out << "  P(" << to_string(phi.formula, p->scenario)
          << ") = " << number(eval_probability(phi, *p)) << "\n";
    }
    out << "  bound: " << phis.size() - 1 << " (sum of " << phis.size()
        << " jointly contradictory propositions)\n";
  }
  return c.strict && violation > 0.0 ? kExitInteresting : kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::Gen) {
      if (!config.seed_given) throw InputError("gen requires --seed");
      out << serialize_model(generate_model(config.gen));
      return kExitOk;
    }
    if (config.bound < 1) throw InputError("--bound must be positive");
    if (config.budget_seconds && !(*config.budget_seconds > 0.0))
      throw InputError("--budget must be positive");

    const ModelDocument doc = parse_model(read_file(config.input));
    if (config.command == Command::Bell) return run_bell(config, doc, out);

    const PossibilisticModel m = possibilistic_view(doc);
    const Verdict validation = validate(m);
    emit_warnings(err, validation);
    switch (config.command) {
      case Command::Classify:
        return run_classify(config, m, validation, out);
      case Command::Axioms:
        return run_axioms(config, m, validation, out);
      case Command::Audit:
        return run_audit(config, m, validation, out);
      default:
        break;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contextuality, weak-axiom and no-signalling checks for choice scenarios",
               "choicectx"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  bool machine = false;
  app.add_flag("--machine", machine, "Print JSON instead of text");
  app.add_flag("--strict", config.strict,
               "Exit 1 on contextual, signalling or weak-axiom-violating models");
  app.add_option("--bound", config.bound, "Variable bound for exhaustive procedures")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", config.budget_seconds, "Wall-clock budget for section search (s)")
      ->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Classify contextuality of a model");
  classify_cmd->add_option("FILE", config.input, "Model document")->required();
  auto* axioms_cmd = app.add_subcommand("axioms", "Check the choice-theoretic conditions");
  axioms_cmd->add_option("FILE", config.input, "Model document")->required();
  auto* audit_cmd = app.add_subcommand("audit", "Full report with theorem checks");
  audit_cmd->add_option("FILE", config.input, "Model document")->required();
  auto* bell_cmd = app.add_subcommand("bell", "Evaluate a logical Bell inequality");
  bell_cmd->add_option("FILE", config.input, "Probabilistic model document")->required();
  bell_cmd->add_option("--props", config.props, "Proposition file, one formula per line")
      ->required();
  auto* gen_cmd = app.add_subcommand("gen", "Write a random model document");
  gen_cmd->add_option("--vars", config.gen.variables, "Variable count")->required();
  gen_cmd->add_option("--contexts", config.gen.contexts, "Context count")->required();
  gen_cmd->add_option("--density", config.gen.density, "Event inclusion probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", config.gen.seed, "Generator seed")->required();
  gen_cmd->add_flag("--closed", config.gen.intersection_closed,
                    "Close contexts under intersection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (classify_cmd->parsed()) config.command = Command::Classify;
  if (axioms_cmd->parsed()) config.command = Command::Axioms;
  if (audit_cmd->parsed()) config.command = Command::Audit;
  if (bell_cmd->parsed()) config.command = Command::Bell;
  if (gen_cmd->parsed()) {
    config.command = Command::Gen;
    config.seed_given = true;
  }
  config.output = machine ? OutputMode::Machine : OutputMode::Human;
  return run(config, out, err);
}

}  // namespace choicectx::cli
