// Copyright 2026 The QSeal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qseal/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseal/fidelity.hpp"
#include "qseal/optimizer.hpp"
#include "qseal/seal.hpp"
#include "qseal/tradeoff.hpp"

namespace qseal::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct SchemeSource {
  std::string path;
  std::string builtin;
  std::optional<double> q_max;

  void attach(CLI::App& cmd) {
    cmd.add_option("scheme", path, "Scheme file");
    cmd.add_option("--builtin", builtin, "Built-in scheme instead of a file")
        ->check(CLI::IsMember({"stringent", "product"}));
    cmd.add_option("--qmax", q_max, "q_max of the built-in scheme");
  }

  SealScheme resolve() const {
    if (!path.empty() && !builtin.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "give either a scheme file or --builtin, not both");
    }
    if (!builtin.empty()) {
      if (!q_max) throw Error(ErrorCode::kInvalidArgument, "--builtin needs --qmax");
      return builtin == "stringent" ? make_stringent_scheme(*q_max) : make_product_scheme(*q_max);
    }
    if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "no scheme given");
    return load_scheme(path);
  }
};

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw Error(ErrorCode::kIoError, "write to '" + path + "' failed");
}

void print_fields(std::ostream& out, const ordered_json& doc, bool as_json) {
  if (as_json) {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& item : doc.items()) {
    out << item.key() << ": ";
    if (item.value().is_number_float()) {
      out << format_real(item.value().get<double>());
    } else {
      out << item.value().dump();
    }
    out << '\n';
  }
}

int run_analyze(const SchemeSource& source, double q, bool as_json, std::ostream& out) {
  const SealScheme scheme = source.resolve();
  const AttackAnalysis r = analyze_attack(scheme, q);
  ordered_json doc;
  doc["q_max"] = r.q_max;
  doc["q"] = r.q;
  doc["a"] = r.a;
  doc["guess_pr"] = r.guess_pr;
  doc["fbar_sim"] = r.fbar_sim;
  doc["fbar_closed"] = r.fbar_closed;
  doc["fbar_minmax"] = r.fbar_minmax;
  doc["detection_bound"] = r.detection_bound;
  print_fields(out, doc, as_json);
  return kOk;
}

int run_optimize(const SchemeSource& source, double q, const OptimizerOptions& options, bool as_json,
                 std::ostream& out, std::ostream& err) {
  if (options.outcomes < 2 || options.outcomes > kMaxOutcomes) {
    throw Error(ErrorCode::kInvalidArgument, "--outcomes must lie in [2, 8]");
  }
  if (options.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "--restarts must be at least 1");
  const SealScheme scheme = source.resolve();
  const OptimizationResult r = maximize_fidelity(scheme, q, options);
  ordered_json doc;
  doc["q"] = r.q_target;
  doc["q_max"] = r.q_max;
  doc["outcomes"] = options.outcomes;
  doc["restarts"] = options.restarts;
  doc["seed"] = options.seed;
  doc["best_fbar"] = r.best_fbar;
  doc["achieved_q"] = r.achieved_q;
  doc["bound"] = r.bound;
  doc["gap_to_bound"] = r.gap_to_bound;
  doc["restarts_used"] = r.restarts_used;
  doc["feasible_restarts"] = r.feasible_restarts;
  doc["best_restart"] = r.best_restart;
  print_fields(out, doc, as_json);
  if (r.best_fbar > r.bound + kBoundTolerance) {
    err << "BoundViolation: best_fbar exceeds the min-max bound by " << format_real(r.gap_to_bound) << '\n';
    return kBoundViolated;
  }
  return kOk;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kQmaxOutOfRange:
    case ErrorCode::kQOutOfRange:
    case ErrorCode::kParamOutOfRange:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kWrongOutcomeCount:
      return kBadArgument;
    case ErrorCode::kIoError:
    case ErrorCode::kParseError:
    case ErrorCode::kNormalizationError:
      return kIoFailure;
    case ErrorCode::kQmaxZero:
      return kDegenerateScheme;
    case ErrorCode::kBoundViolation:
      return kBoundViolated;
    case ErrorCode::kNoFeasiblePoint:
      return kInfeasible;
    default:
      return kInternalError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum bit seal attack analysis"};
  app.name("qseal");
  app.require_subcommand(1);

  std::string gen_type = "stringent";
  double gen_qmax = 0.0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a built-in sealing scheme to a file");
  gen->add_option("--type", gen_type, "stringent or product")->check(CLI::IsMember({"stringent", "product"}));
  gen->add_option("--qmax", gen_qmax, "Trace distance of the reduced states")->required();
  gen->add_option("-o,--out", gen_out, "Output path (default: standard output)");

  SchemeSource analyze_source;
  double analyze_q = 0.0;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Evaluate the optimal attack at information gain q");
  analyze_source.attach(*analyze);
  analyze->add_option("--q", analyze_q, "Information gain of the attack")->required();
  analyze->add_flag("--json", analyze_json, "Emit a JSON document");

  SchemeSource curve_source;
  std::size_t curve_steps = 0;
  std::string curve_out;
  bool curve_serial = false;
  auto* curve = app.add_subcommand("curve", "Sweep the attack over q and write CSV");
  curve_source.attach(*curve);
  curve->add_option("--steps", curve_steps, "Number of rows (>= 2)")->required();
  curve->add_option("-o,--out", curve_out, "Output path (default: standard output)");
  curve->add_flag("--serial", curve_serial, "Disable OpenMP for the sweep");

  SchemeSource optimize_source;
  double optimize_q = 0.0;
  OptimizerOptions optimize_options;
  bool optimize_json = false;
  bool optimize_serial = false;
  auto* optimize = app.add_subcommand("optimize", "Search all POVMs for the best fidelity at fixed q");
  optimize_source.attach(*optimize);
  optimize->add_option("--q", optimize_q, "Target information gain")->required();
  optimize->add_option("--outcomes", optimize_options.outcomes, "POVM outcome count (2..8)")->capture_default_str();
  optimize->add_option("--restarts", optimize_options.restarts, "Number of restarts")->capture_default_str();
  optimize->add_option("--seed", optimize_options.seed, "Master seed")->capture_default_str();
  optimize->add_flag("--json", optimize_json, "Emit a JSON document");
  optimize->add_flag("--serial", optimize_serial, "Run restarts on one thread");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("qseal");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArgument;
  }

  try {
    if (gen->parsed()) {
      const SealScheme s = gen_type == "stringent" ? make_stringent_scheme(gen_qmax) : make_product_scheme(gen_qmax);
      write_text(scheme_to_string(s), gen_out, out);
      return kOk;
    }
    if (analyze->parsed()) return run_analyze(analyze_source, analyze_q, analyze_json, out);
    if (curve->parsed()) {
      if (curve_steps < 2) throw Error(ErrorCode::kInvalidArgument, "--steps must be at least 2");
      const SealScheme s = curve_source.resolve();
      const auto rows = tradeoff_curve(s, curve_steps, curve_serial ? Execution::kSerial : Execution::kParallel);
      write_text(curve_to_csv(rows), curve_out, out);
      return kOk;
    }
    if (optimize->parsed()) {
      optimize_options.execution = optimize_serial ? Execution::kSerial : Execution::kParallel;
      return run_optimize(optimize_source, optimize_q, optimize_options, optimize_json, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kBadArgument;
}

}  // namespace qseal::cli
