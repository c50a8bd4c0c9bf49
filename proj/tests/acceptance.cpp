// Acceptance run: one PASS/FAIL line per criterion, with its runtime limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ull/ull.hpp"

namespace {

namespace fs = std::filesystem;
using ull::TruthValue;

constexpr std::uint64_t kSeed = 7;
constexpr double kSigmas = 3.0;
constexpr double kStrengthAbs = 0.02;
constexpr double kCountAbs = 0.5;

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  [%2d] %s  (%.3f s, limit %g s)\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs, limit_s);
  for (const auto& d : o.details) std::printf("          %s\n", d.c_str());
  if (!in_time) std::printf("          FAIL runtime limit exceeded\n");
  std::fflush(stdout);
}

std::string show(const TruthValue& tv) { return ull::to_string(tv); }

void absorb(Outcome& o, const ull::suites::SuiteResult& r) {
  o.require(r.passed(), r.name + ": " + std::to_string(r.cases) + " checks, " + std::to_string(r.failures) + " failed");
  for (const auto& n : r.notes) o.details.push_back("     " + n);
}

std::vector<fs::path> proofs(const std::string& kind) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(ULL_DATA_DIR) / "proofs" / kind)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string annotation(const fs::path& p, const std::string& key) {
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) {
    const auto tag = "; " + key + ": ";
    if (line.rfind(tag, 0) == 0) return line.substr(tag.size());
  }
  return {};
}

bool uses_rule(const ull::ProofNode& n, std::initializer_list<ull::Rule> rules) {
  for (auto r : rules) {
    if (n.rule == r) return true;
  }
  for (const auto& p : n.premises) {
    if (uses_rule(p, rules)) return true;
  }
  return false;
}

}  // namespace

int main() {
  criterion(1, "worked example reproduces exactly", 1.0, [] {
    Outcome o;
    const auto env = ull::load_environment(std::string(ULL_DATA_DIR) + "/american_crazy.env");
    const std::vector<std::pair<std::string, TruthValue>> cases{{"American & Crazy", {0.3, 10.0}},
                                                               {"American + Crazy", {0.5, 20.0}},
                                                               {"American * Crazy", {0.15, 2.0}},
                                                               {"American | Crazy", {0.65, 28.0}}};
    for (const auto& [text, want] : cases) {
      const auto got = ull::evaluate(ull::parse(text), env);
      o.require(got == want, text + " = " + show(got) + ", want " + show(want));
    }
    return o;
  });

  criterion(2, "distributivity, 1e5 random environments", 10.0, [] {
    Outcome o;
    absorb(o, ull::suites::distributivity(100000, kSeed));
    return o;
  });

  criterion(3, "t-norm / t-conorm laws, 1e5 random triples", 10.0, [] {
    Outcome o;
    absorb(o, ull::suites::tnorm(100000, kSeed));
    return o;
  });

  criterion(4, "max-overlap oracle equals min/max exactly, N = 1..20", 60.0, [] {
    Outcome o;
    absorb(o, ull::suites::oracle_equivalence(20));
    return o;
  });

  criterion(5, "independence Monte Carlo, 1e5 trials", 30.0, [] {
    Outcome o;
    namespace orc = ull::oracle;
    const auto e = orc::mc_independence({20, 0.5, 10, 0.3}, orc::Universe(100), 100000, kSeed);
    auto check = [&](const char* label, const std::optional<orc::McEstimate>& est, double target, double abs_tol) {
      if (!est) {
        o.require(false, std::string(label) + ": no estimate");
        return;
      }
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: mean %.6f, se %.6f, target %g", label, est->mean, est->std_error, target);
      o.require(orc::within_sigmas(*est, target, kSigmas) && std::abs(est->mean - target) <= abs_tol, buf);
    };
    check("conj strength", e.conj_strength, 0.15, kStrengthAbs);
    check("conj count", e.conj_count, 2.0, kCountAbs);
    check("disj strength", e.disj_strength, 0.65, kStrengthAbs);
    check("disj count", e.disj_count, 28.0, kCountAbs);
    return o;
  });

  criterion(6, "NNF preserves strength, 1e4 random formulas", 10.0, [] {
    Outcome o;
    absorb(o, ull::suites::nnf_strength(10000, kSeed));
    ull::Environment env(ull::UniverseConfig(100.0));
    env.bind("A", TruthValue(0.3, 10.0)).bind("B", TruthValue(0.6, 40.0));
    const auto f = ull::parse("(A & B)^");
    const auto before = ull::evaluate(f, env), after = ull::evaluate(ull::nnf(f), env);
    o.require(before.strength() == after.strength() && !(before.count() == after.count()),
              "witness " + ull::render(f) + " = " + show(before) + ", NNF " + ull::render(ull::nnf(f)) + " = " +
                  show(after) + " (counts differ)");
    return o;
  });

  criterion(7, "proof checker golden suite", 1.0, [] {
    Outcome o;
    std::size_t valid = 0, invalid = 0;
    for (const auto& p : proofs("valid")) {
      const auto proof = ull::load_proof(p.string());
      const auto r = ull::check(proof);
      bool annotated = false;
      if (r.valid) {
        ull::Environment env(ull::UniverseConfig(100.0));
        for (const auto& [atom, tally] : r.ledger.atoms) env.bind(atom, TruthValue(0.5, 50.0));
        try {
          ull::tv_annotate(proof, env);
          annotated = true;
        } catch (const std::exception&) {
        }
      }
      o.require(r.valid && annotated, "accepts " + p.filename().string());
      valid += r.valid;
    }
    for (const auto& p : proofs("invalid")) {
      const auto r = ull::check(ull::load_proof(p.string()));
      const auto path = annotation(p, "expect-path"), rule = annotation(p, "expect-rule");
      const bool ok = !r.valid && r.failure->path == path && r.failure->rule == rule;
      o.require(ok, "rejects " + p.filename().string() + " at " + path + " [" + rule + "]" +
                        (r.valid ? "" : ", got " + r.failure->path + " [" + r.failure->rule + "]"));
      invalid += ok;
    }
    o.require(valid >= 10, std::to_string(valid) + " valid proofs accepted (need 10)");
    o.require(invalid >= 6, std::to_string(invalid) + " invalid proofs rejected (need 6)");
    return o;
  });

  criterion(8, "exponential isomorphism at the count level", 1.0, [] {
    Outcome o;
    const auto lhs = ull::parse("!(A & B)"), rhs = ull::parse("!A * !B");
    ull::CounterRng rng(kSeed, 0);
    bool counts = true;
    for (int i = 0; i < 10000; ++i) {
      ull::Environment env(ull::UniverseConfig(100.0));
      env.bind("A", TruthValue(rng.uniform01(), rng.uniform(0, 100)));
      env.bind("B", TruthValue(rng.uniform01(), rng.uniform(0, 100)));
      counts = counts && ull::evaluate(lhs, env).count().is_infinite() && ull::evaluate(rhs, env).count().is_infinite();
    }
    o.require(counts, "count(!(A & B)) = count(!A * !B) = inf on 1e4 random environments");
    ull::Environment env(ull::UniverseConfig(100.0));
    env.bind("A", TruthValue(0.5, 20.0)).bind("B", TruthValue(0.3, 10.0));
    const auto l = ull::evaluate(lhs, env), r = ull::evaluate(rhs, env);
    o.require(l.strength() != r.strength(),
              "witness strengths differ: !(A & B) = " + show(l) + ", !A * !B = " + show(r));
    return o;
  });

  criterion(9, "detector model", 10.0, [] {
    Outcome o;
    const auto e = ull::oracle::detector_sim(0.7, 0.8, 1000, 1000, kSeed);
    char buf[160];
    std::snprintf(buf, sizeof buf, "independent joint: mean %.6f, se %.6f, target 0.56", e.independent_joint.mean,
                  e.independent_joint.std_error);
    o.require(ull::oracle::within_sigmas(e.independent_joint, 0.56, kSigmas), buf);
    o.require(e.combined_min == 0.7, "combined min = " + ull::detail::format_real(e.combined_min));
    return o;
  });

  criterion(10, "ledger conservation", 1.0, [] {
    Outcome o;
    using ull::Rule;
    for (const auto& p : proofs("valid")) {
      const auto proof = ull::load_proof(p.string());
      const auto r = ull::check(proof);
      const auto name = p.filename().string();
      if (uses_rule(proof, {Rule::QContraction})) {
        o.require(!r.ledger.reuse_events.empty(), name + ": contraction reported as reuse");
      }
      if (uses_rule(proof, {Rule::QContraction, Rule::QWeakening})) continue;
      // Each axiom link consumes one A and one A^ occurrence.
      const auto occ = ull::atom_occurrences(r.proof->conclusion);
      bool equal = true;
      std::string detail;
      for (const auto& [atom, n] : occ) {
        const auto used = 2 * r.ledger.tokens(atom);
        if (used != n) {
          equal = false;
          detail += " " + atom + ": " + std::to_string(used) + " consumed vs " + std::to_string(n) + " in conclusion;";
        }
      }
      o.require(equal, name + ": consumed occurrences equal conclusion occurrences" + detail);
    }
    for (const auto& p : proofs("valid")) {
      const auto r = ull::check(ull::load_proof(p.string()));
      if (!ull::ledger_balanced(r.ledger, r.proof->conclusion)) {
        o.require(false, p.filename().string() + ": cut/shared/discarded occurrences do not balance");
      }
    }
    o.details.push_back("     balance with cut, shared and discarded occurrences checked on every valid proof");
    return o;
  });

  std::printf("\n%d criterion/criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
