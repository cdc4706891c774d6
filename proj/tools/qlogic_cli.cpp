// qlogic: evaluate observational propositions, joint distributions and
// measuring processes against a JSON model file.
//
//   qlogic eval "Z <= 0" --model models/qubit.json --state ground
//   qlogic jpd ZI IZ --model models/bell.json --state bell
//   qlogic measure cnot povm --model models/cnot.json
//   qlogic measure cnot check --observable Z --state ground --model models/cnot.json
//
// Exit codes: 0 success, 1 syntax error, 2 unknown observable/state/process,
// 3 numerical failure, 4 unreadable or malformed model file.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlogic/jointdist.hpp"
#include "qlogic/measurement.hpp"
#include "qlogic/model_file.hpp"
#include "qlogic/proplang.hpp"
#include "qlogic/truth.hpp"

namespace {

using nlohmann::json;
using namespace qlogic;

struct Options {
  std::string model_path;
  std::string state;
  double tolerance = 0.0;
  std::string output = "json";

  std::string prop;
  std::vector<std::string> names;
  std::string process;
  std::string action;
  std::string observable;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return 1;
    case ErrorKind::UnknownObservable:
    case ErrorKind::UnknownState:
    case ErrorKind::UnknownProcess: return 2;
    case ErrorKind::ModelFormat: return 4;
    default: return 3;
  }
}

void emit(const json& out, const Options& opt) {
  std::cout << (opt.output == "pretty" ? out.dump(2) : out.dump()) << '\n';
}

Tolerance tolerance_from(const Options& opt) {
  Tolerance tol;
  if (opt.tolerance > 0.0) tol.op_eq = opt.tolerance;
  tol.validate();
  return tol;
}

const ComplexMatrix& require_state(const ModelFile& mf, const Options& opt) {
  if (opt.state.empty()) throw Error(ErrorKind::UnknownState, "--state is required for this command");
  return mf.model.state(opt.state);
}

json run_eval(const ModelFile& mf, const Options& opt) {
  const PropPtr prop = parse(opt.prop);
  const Projection truth = truth_value(*prop, mf.model);
  json out{{"truth_projection", matrix_to_json(truth.matrix())}, {"rank", truth.rank()}};
  if (!opt.state.empty()) {
    out["probability"] = probability(*prop, mf.model, opt.state);
    out["holds"] = holds(*prop, mf.model, opt.state);
    out["well_formed"] = well_formed(*prop, mf.model, opt.state);
  }
  return out;
}

json run_jpd(const ModelFile& mf, const Options& opt) {
  const ComplexMatrix& rho = require_state(mf, opt);
  std::vector<Observable> xs;
  for (const auto& n : opt.names) xs.push_back(mf.model.observable(n));
  const Tolerance& tol = mf.model.tolerance();
  const double p = com_probability(xs, rho, tol);
  if (p < 1.0 - tol.prob_clip) return json{{"exists", false}, {"com_probability", p}};
  return jpd_to_json(jpd(xs, rho, opt.names, tol), tol.prob_clip);
}

json run_measure(const ModelFile& mf, const Options& opt) {
  const MeasuringProcess& mp = mf.process(opt.process);
  if (opt.action == "povm") return povm_to_json(povm(mp));
  if (opt.observable.empty()) throw Error(ErrorKind::UnknownObservable, "--observable is required for check");
  const Observable& a = mf.model.observable(opt.observable);
  const EquivalenceReport r = equivalence_suite(mp, a, require_state(mf, opt));
  return json{{"measures", r.measures}, {"weak", r.weakly_measures}, {"bsf", r.bsf_on_cyclic_subspace}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-logic proposition evaluator"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--model", opt.model_path, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--state", opt.state, "Named state from the model file");
  app.add_option("--tolerance", opt.tolerance, "Operator-equality threshold (op_eq)")
      ->envname("QLOGIC_TOLERANCE");
  app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "pretty"}));

  auto* eval = app.add_subcommand("eval", "Truth value and probability of a proposition");
  eval->add_option("proposition", opt.prop, "Proposition text")->required();

  auto* jpd_cmd = app.add_subcommand("jpd", "Joint probability distribution of observables");
  jpd_cmd->add_option("names", opt.names, "Observable names")->required();

  auto* measure = app.add_subcommand("measure", "POVM and measurement checks of a process");
  measure->add_option("process", opt.process, "Process name")->required();
  measure->add_option("action", opt.action, "povm | check")
      ->required()
      ->check(CLI::IsMember({"povm", "check"}));
  measure->add_option("--observable", opt.observable, "Observable to test with check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const ModelFile mf = load_model(opt.model_path, tolerance_from(opt));
    json out;
    if (eval->parsed()) {
      out = run_eval(mf, opt);
    } else if (jpd_cmd->parsed()) {
      out = run_jpd(mf, opt);
    } else {
      out = run_measure(mf, opt);
    }
    emit(out, opt);
  } catch (const Error& e) {
    std::cerr << "qlogic: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "qlogic: " << e.what() << '\n';
    return 3;
  }
  return EXIT_SUCCESS;
}
