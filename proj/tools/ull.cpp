// Command-line front end: parse and evaluate formulas, check proofs, run the
// evidence oracles and the built-in property suites.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ull/ull.hpp"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kInputError = 2,
  kUnboundAtom = 3,
  kInvalidProof = 4,
  kOracleFailure = 5,
};

json count_json(ull::Count c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

json tv_json(const ull::TruthValue& tv) { return json{{"strength", tv.strength()}, {"count", count_json(tv.count())}}; }

json estimate_json(const ull::oracle::McEstimate& e) {
  return json{{"mean", e.mean}, {"std_error", e.std_error}, {"trials", e.trials}};
}

/// Collects the structured run report; printed instead of the plain text
/// output when --json is given.
struct RunReport {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::optional<std::uint64_t> seed;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  json to_json() const {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["wall_time_ms"] = elapsed.count();
    return j;
  }
};

struct Output {
  bool json_mode = false;
  RunReport report;
  std::ostringstream text;

  int finish(int code) {
    if (json_mode) {
      report.outputs["exit_code"] = code;
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return code;
  }

  int error(int code, const std::string& message) {
    report.outputs["error"] = message;
    if (!json_mode) std::cerr << "error: " << message << "\n";
    return finish(code);
  }
};

void print_report(std::ostream& os, const ull::EvalReport& r, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << ull::render(r.formula) << "  " << r.value << "\n";
  for (const auto& c : r.children) print_report(os, c, depth + 1);
}

json report_json(const ull::EvalReport& r) {
  json j{{"formula", ull::render(r.formula)}, {"value", tv_json(r.value)}};
  if (!r.children.empty()) {
    j["children"] = json::array();
    for (const auto& c : r.children) j["children"].push_back(report_json(c));
  }
  return j;
}

void print_annotated(std::ostream& os, const ull::AnnotatedNode& n, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << n.path << " [" << ull::rule_name(n.rule) << "] "
     << n.conclusion << "  " << n.value << "\n";
  for (const auto& p : n.premises) print_annotated(os, p, depth + 1);
}

json annotated_json(const ull::AnnotatedNode& n) {
  json j{{"path", n.path},
         {"rule", std::string(ull::rule_name(n.rule))},
         {"conclusion", ull::render(n.conclusion)},
         {"value", tv_json(n.value)}};
  if (!n.premises.empty()) {
    j["premises"] = json::array();
    for (const auto& p : n.premises) j["premises"].push_back(annotated_json(p));
  }
  return j;
}

int cmd_parse(Output& out, const std::string& text, bool to_nnf) {
  out.report.inputs = {{"formula", text}, {"nnf", to_nnf}};
  try {
    auto f = ull::parse(text);
    if (to_nnf) f = ull::nnf(f);
    const auto rendered = ull::render(f);
    out.report.outputs["formula"] = rendered;
    out.text << rendered << "\n";
    return out.finish(kOk);
  } catch (const ull::SyntaxError& e) {
    out.report.outputs["offset"] = e.offset();
    return out.error(kInputError, e.what());
  }
}

int cmd_eval(Output& out, const std::string& text, const std::string& env_path, bool report) {
  out.report.inputs = {{"formula", text}, {"env", env_path}, {"report", report}};
  ull::Formula f = ull::Formula::one();
  try {
    f = ull::parse(text);
  } catch (const ull::SyntaxError& e) {
    out.report.outputs["offset"] = e.offset();
    return out.error(kInputError, e.what());
  }
  try {
    const auto env = ull::load_environment(env_path);
    if (report) {
      const auto r = ull::evaluate_report(f, env);
      out.report.outputs["value"] = tv_json(r.value);
      out.report.outputs["report"] = report_json(r);
      print_report(out.text, r, 0);
    } else {
      const auto tv = ull::evaluate(f, env);
      out.report.outputs["value"] = tv_json(tv);
      out.text << tv << "\n";
    }
    return out.finish(kOk);
  } catch (const ull::UnboundAtom& e) {
    return out.error(kUnboundAtom, e.what());
  } catch (const std::exception& e) {
    return out.error(kInputError, e.what());
  }
}

int cmd_check(Output& out, const std::string& proof_path, const std::string& env_path) {
  out.report.inputs = {{"proof", proof_path}};
  if (!env_path.empty()) out.report.inputs["env"] = env_path;
  ull::ProofNode proof;
  try {
    proof = ull::load_proof(proof_path);
  } catch (const std::exception& e) {
    return out.error(kInputError, e.what());
  }

  const auto result = ull::check(proof);
  out.report.outputs["valid"] = result.valid;
  if (!result.valid) {
    const auto& v = *result.failure;
    out.report.outputs["failure"] = {{"rule", v.rule}, {"path", v.path}, {"message", v.message}};
    if (v.expected) out.report.outputs["failure"]["expected"] = ull::render(*v.expected);
    if (v.found) out.report.outputs["failure"]["found"] = ull::render(*v.found);
    out.text << v.describe() << "\n";
    return out.finish(kInvalidProof);
  }

  const auto& conclusion = result.proof->conclusion;
  out.report.outputs["conclusion"] = ull::render(conclusion);
  out.text << "valid\n" << conclusion << "\nledger:\n";
  json ledger = json::object();
  for (const auto& [atom, t] : result.ledger.atoms) {
    ledger[atom] = {{"tokens_consumed", t.tokens_consumed},
                    {"cut", t.cut_occurrences},
                    {"shared", t.shared_occurrences},
                    {"discarded", t.discarded_occurrences}};
    out.text << "  " << atom << ": " << t.tokens_consumed;
    if (t.cut_occurrences || t.shared_occurrences || t.discarded_occurrences) {
      out.text << "  (cut " << t.cut_occurrences << ", shared " << t.shared_occurrences << ", discarded "
               << t.discarded_occurrences << ")";
    }
    out.text << "\n";
  }
  json reuse = json::array();
  for (const auto& e : result.ledger.reuse_events) {
    reuse.push_back({{"formula", ull::render(e.formula)}, {"path", e.path}});
    out.text << "reuse: " << ull::render(e.formula) << " at " << e.path << "\n";
  }
  out.report.outputs["ledger"] = ledger;
  out.report.outputs["reuse_events"] = reuse;

  if (!env_path.empty()) {
    try {
      const auto env = ull::load_environment(env_path);
      const auto annotated = ull::tv_annotate(proof, env);
      out.report.outputs["annotations"] = annotated_json(annotated);
      out.text << "annotations:\n";
      print_annotated(out.text, annotated, 1);
    } catch (const ull::UnboundAtom& e) {
      return out.error(kUnboundAtom, e.what());
    } catch (const std::exception& e) {
      return out.error(kInputError, e.what());
    }
  }
  return out.finish(kOk);
}

struct Check {
  std::string label;
  std::optional<ull::oracle::McEstimate> estimate;
  double target;
};

int report_checks(Output& out, const std::vector<Check>& checks) {
  bool all = true;
  json rows = json::array();
  for (const auto& c : checks) {
    json row{{"quantity", c.label}, {"target", c.target}};
    char line[160];
    if (!c.estimate) {
      row["estimate"] = nullptr;
      row["pass"] = true;
      std::snprintf(line, sizeof line, "%-14s undefined (no shared evidence in any trial)  target=%.6g\n",
                    c.label.c_str(), c.target);
    } else {
      const bool ok = ull::oracle::within_sigmas(*c.estimate, c.target);
      all = all && ok;
      row["estimate"] = estimate_json(*c.estimate);
      row["pass"] = ok;
      std::snprintf(line, sizeof line, "%-14s mean=%.6f se=%.6f target=%.6g  %s\n", c.label.c_str(),
                    c.estimate->mean, c.estimate->std_error, c.target, ok ? "PASS" : "FAIL");
    }
    out.text << line;
    rows.push_back(row);
  }
  out.report.outputs["checks"] = rows;
  out.report.outputs["pass"] = all;
  out.text << (all ? "PASS" : "FAIL") << " (3 standard errors)\n";
  return out.finish(all ? kOk : kOracleFailure);
}

int cmd_indep(Output& out, std::size_t na, double pa, std::size_t nb, double pb, std::size_t universe,
              std::size_t trials, std::uint64_t seed) {
  out.report.inputs = {{"na", na}, {"pa", pa}, {"nb", nb}, {"pb", pb}, {"N", universe}, {"trials", trials}};
  out.report.seed = seed;
  try {
    const ull::oracle::Universe u(universe);
    const auto est = ull::oracle::mc_independence({na, pa, nb, pb}, u, trials, seed);
    const ull::UniverseConfig cfg(static_cast<double>(universe));
    const ull::TruthValue a(pa, static_cast<double>(na)), b(pb, static_cast<double>(nb));
    const auto conj = ull::and_multiplicative(a, b, cfg);
    const auto disj = ull::or_multiplicative(a, b, cfg);
    return report_checks(out, {{"conj strength", est.conj_strength, conj.strength()},
                               {"conj count", est.conj_count, conj.count().value()},
                               {"disj strength", est.disj_strength, disj.strength()},
                               {"disj count", est.disj_count, disj.count().value()}});
  } catch (const std::invalid_argument& e) {
    return out.error(kInputError, e.what());
  }
}

int cmd_detector(Output& out, double bt, double bc, std::size_t ticks, std::size_t trials, std::uint64_t seed) {
  out.report.inputs = {{"bt", bt}, {"bc", bc}, {"ticks", ticks}, {"trials", trials}};
  out.report.seed = seed;
  try {
    const auto est = ull::oracle::detector_sim(bt, bc, ticks, trials, seed);
    out.report.outputs["combined_min"] = est.combined_min;
    out.text << "combined_min   " << ull::detail::format_real(est.combined_min) << "\n";
    return report_checks(out, {{"joint", est.independent_joint, bt * bc}});
  } catch (const std::invalid_argument& e) {
    return out.error(kInputError, e.what());
  }
}

template <class Algebra>
std::vector<ull::suites::SuiteResult> run_suites(const std::string& only, std::size_t trials, std::uint64_t seed) {
  namespace s = ull::suites;
  std::vector<s::SuiteResult> results;
  const std::size_t small = std::max<std::size_t>(1, trials / 10);
  auto want = [&](const char* name) { return only.empty() || only == name; };
  if (want("tnorm")) results.push_back(s::tnorm<Algebra>(trials, seed));
  if (want("distributivity")) results.push_back(s::distributivity<Algebra>(trials, seed));
  if (want("demorgan-strength")) results.push_back(s::demorgan_strength<Algebra>(trials, seed));
  if (want("nnf-strength")) results.push_back(s::nnf_strength<Algebra>(small, seed));
  if (want("oracle-equivalence")) results.push_back(s::oracle_equivalence<Algebra>());
  return results;
}

int cmd_selftest(Output& out, const std::string& suite, const std::string& fault, std::size_t trials,
                 std::uint64_t seed) {
  out.report.inputs = {{"suite", suite.empty() ? json("all") : json(suite)}, {"trials", trials}};
  if (!fault.empty()) out.report.inputs["fault"] = fault;
  out.report.seed = seed;

  std::vector<ull::suites::SuiteResult> results;
  if (fault.empty()) {
    results = run_suites<ull::StandardAlgebra>(suite, trials, seed);
  } else if (fault == "tensor-min") {
    results = run_suites<ull::suites::mutants::TensorMin>(suite, trials, seed);
  } else {
    results = run_suites<ull::suites::mutants::UnnormalizedCounts>(suite, trials, seed);
  }

  std::size_t passed = 0;
  json rows = json::array();
  for (const auto& r : results) {
    char line[128];
    std::snprintf(line, sizeof line, "%-20s %s  (%zu checks, %zu failed)\n", r.name.c_str(),
                  r.passed() ? "PASS" : "FAIL", r.cases, r.failures);
    out.text << line;
    for (const auto& n : r.notes) out.text << "    " << n << "\n";
    if (r.passed()) ++passed;
    rows.push_back({{"suite", r.name}, {"pass", r.passed()}, {"checks", r.cases}, {"failures", r.failures},
                    {"notes", r.notes}});
  }
  out.text << "selftest: " << passed << "/" << results.size() << " suites passed\n";
  out.report.outputs["suites"] = rows;
  return out.finish(passed == results.size() ? kOk : kSuiteFailure);
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertain linear logic kernel"};
  app.require_subcommand(1);
  Output out;
  out.report.command = join_args(argc, argv);
  app.add_flag("--json", out.json_mode, "Emit one structured JSON report instead of plain text");
  app.fallthrough();

  auto* parse = app.add_subcommand("parse", "Parse a formula and print it canonically");
  std::string formula;
  bool to_nnf = false;
  parse->add_option("formula", formula, "Formula text")->required();
  parse->add_flag("--nnf", to_nnf, "Print the negation normal form");

  auto* eval = app.add_subcommand("eval", "Evaluate a formula in an environment file");
  std::string env_path;
  bool report = false;
  eval->add_option("formula", formula, "Formula text")->required();
  eval->add_option("env", env_path, "Environment file")->required();
  eval->add_flag("--report", report, "Print the value of every subformula");

  auto* check = app.add_subcommand("check", "Check a proof file");
  std::string proof_path;
  std::string check_env;
  check->add_option("proof", proof_path, "Proof file")->required();
  check->add_option("--env", check_env, "Environment file; annotates every sequent with its truth value");

  auto* oracle = app.add_subcommand("oracle", "Monte Carlo checks of the formula families");
  oracle->require_subcommand(1);
  std::size_t trials = 100000;
  std::uint64_t seed = 7;

  auto* indep = oracle->add_subcommand("indep", "Independence: random evaluation sets in a finite universe");
  std::size_t na = 0, nb = 0, universe = 0;
  double pa = 0.0, pb = 0.0;
  indep->add_option("--na", na, "Observations evaluated for A")->required();
  indep->add_option("--pa", pa, "Strength of A")->required()->check(CLI::Range(0.0, 1.0));
  indep->add_option("--nb", nb, "Observations evaluated for B")->required();
  indep->add_option("--pb", pb, "Strength of B")->required()->check(CLI::Range(0.0, 1.0));
  indep->add_option("--N", universe, "Universe size")->required()->check(CLI::PositiveNumber);
  indep->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  indep->add_option("--seed", seed, "Random seed");

  auto* detector = oracle->add_subcommand("detector", "Two fuzzy detectors held up together");
  double bt = 0.0, bc = 0.0;
  std::size_t ticks = 1000;
  std::size_t detector_trials = 1000;
  detector->add_option("--bt", bt, "Degree of the first detector")->required()->check(CLI::Range(0.0, 1.0));
  detector->add_option("--bc", bc, "Degree of the second detector")->required()->check(CLI::Range(0.0, 1.0));
  detector->add_option("--ticks", ticks, "Ticks per trial")->check(CLI::PositiveNumber);
  detector->add_option("--trials", detector_trials, "Number of trials")->check(CLI::PositiveNumber);
  detector->add_option("--seed", seed, "Random seed");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");
  std::string suite;
  std::string fault;
  std::size_t suite_trials = 100000;
  std::uint64_t suite_seed = 1;
  selftest->add_option("--suite", suite, "Run one suite only")
      ->check(CLI::IsMember({"tnorm", "distributivity", "demorgan-strength", "nnf-strength", "oracle-equivalence"}));
  selftest->add_option("--fault", fault, "Run against a deliberately broken algebra (negative control)")
      ->check(CLI::IsMember({"tensor-min", "unnormalized-counts"}));
  selftest->add_option("--trials", suite_trials, "Random cases per suite")->check(CLI::PositiveNumber);
  selftest->add_option("--seed", suite_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*parse) return cmd_parse(out, formula, to_nnf);
  if (*eval) return cmd_eval(out, formula, env_path, report);
  if (*check) return cmd_check(out, proof_path, check_env);
  if (*indep) return cmd_indep(out, na, pa, nb, pb, universe, trials, seed);
  if (*detector) return cmd_detector(out, bt, bc, ticks, detector_trials, seed);
  if (*selftest) return cmd_selftest(out, suite, fault, suite_trials, suite_seed);
  return kInputError;
}
