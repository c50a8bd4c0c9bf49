#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ull/evaluator.hpp"
#include "ull/nnf.hpp"
#include "ull/oracle.hpp"
#include "ull/random.hpp"

namespace ull::suites {

inline constexpr double kTolerance = 1e-12;

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // first failures and documented witnesses

  bool passed() const { return failures == 0 && cases > 0; }

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures < 5) notes.push_back("FAIL " + what);
    ++failures;
  }
};

inline bool close(double a, double b, double tol = kTolerance) { return std::abs(a - b) <= tol; }

inline bool close(Count a, Count b, double tol = kTolerance) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  return close(a.value(), b.value(), tol);
}

inline bool close(const TruthValue& a, const TruthValue& b, double tol = kTolerance) {
  return close(a.strength(), b.strength(), tol) && close(a.count(), b.count(), tol);
}

inline std::string show(double a, double b, double c) {
  return "(" + detail::format_real(a) + ", " + detail::format_real(b) + ", " + detail::format_real(c) + ")";
}

/// Strength-level t-norm laws for both conjunctions, and t-conorm duality
/// for both disjunctions, on random triples.
template <class Algebra = StandardAlgebra>
SuiteResult tnorm(std::size_t trials, std::uint64_t seed) {
  SuiteResult r;
  r.name = "tnorm";
  const UniverseConfig cfg(1.0);
  using Op = std::function<double(double, double)>;
  const std::vector<std::pair<std::string, Op>> conj{
      {"with", [](double a, double b) { return Algebra::with(TruthValue(a, 0.0), TruthValue(b, 0.0)).strength(); }},
      {"tensor",
       [&](double a, double b) { return Algebra::tensor(TruthValue(a, 0.0), TruthValue(b, 0.0), cfg).strength(); }}};
  const std::vector<std::pair<std::string, Op>> disj{
      {"plus", [](double a, double b) { return Algebra::plus(TruthValue(a, 0.0), TruthValue(b, 0.0)).strength(); }},
      {"par",
       [&](double a, double b) { return Algebra::par(TruthValue(a, 0.0), TruthValue(b, 0.0), cfg).strength(); }}};

  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    const double a = rng.uniform01();
    double b = rng.uniform01();
    double c = rng.uniform01();
    if (b > c) std::swap(b, c);
    const auto at = show(a, b, c);
    for (std::size_t f = 0; f < 2; ++f) {
      const auto& [name, t] = conj[f];
      const auto& s = disj[f].second;
      const auto& sname = disj[f].first;
      r.expect(close(t(a, b), t(b, a)), name + " commutative at " + at);
      r.expect(close(t(t(a, b), c), t(a, t(b, c))), name + " associative at " + at);
      r.expect(t(a, b) <= t(a, c) + kTolerance, name + " monotone at " + at);
      r.expect(t(a, 1.0) == a && t(1.0, a) == a, name + " unit 1 at " + at);
      r.expect(close(s(a, b), s(b, a)), sname + " commutative at " + at);
      r.expect(close(s(s(a, b), c), s(a, s(b, c))), sname + " associative at " + at);
      r.expect(s(a, b) <= s(a, c) + kTolerance, sname + " monotone at " + at);
      r.expect(s(a, 0.0) == a && s(0.0, a) == a, sname + " unit 0 at " + at);
      r.expect(close(s(a, b), 1.0 - t(1.0 - a, 1.0 - b)), sname + " dual of " + name + " at " + at);
    }
  }
  return r;
}

/// A*(B+C) = (A*B)+(A*C) and A|(B&C) = (A|B)&(A|C), strength and count,
/// with every finite count within the universe.
template <class Algebra = StandardAlgebra>
SuiteResult distributivity(std::size_t trials, std::uint64_t seed, double universe = 100.0) {
  SuiteResult r;
  r.name = "distributivity";
  const auto a = Formula::atom("A"), b = Formula::atom("B"), c = Formula::atom("C");
  const auto lhs1 = Formula::tensor(a, Formula::plus(b, c));
  const auto rhs1 = Formula::plus(Formula::tensor(a, b), Formula::tensor(a, c));
  const auto lhs2 = Formula::par(a, Formula::with(b, c));
  const auto rhs2 = Formula::with(Formula::par(a, b), Formula::par(a, c));
  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    Environment env{UniverseConfig(universe)};
    for (const auto* atom : {"A", "B", "C"}) {
      const double s = rng.uniform01();
      env.bind(atom, TruthValue(s, rng.uniform(0.0, universe)));
    }
    const auto tag = " case " + std::to_string(i);
    r.expect(close(evaluate<Algebra>(lhs1, env), evaluate<Algebra>(rhs1, env)), "tensor over plus" + tag);
    r.expect(close(evaluate<Algebra>(lhs2, env), evaluate<Algebra>(rhs2, env)), "par over with" + tag);
  }
  return r;
}

/// Strength-level De Morgan for both families, plus the documented
/// count-level failure: negating a conjunction keeps its (smaller) count
/// while the dual disjunction takes the larger one.
template <class Algebra = StandardAlgebra>
SuiteResult demorgan_strength(std::size_t trials, std::uint64_t seed, double universe = 100.0) {
  SuiteResult r;
  r.name = "demorgan-strength";
  const UniverseConfig cfg(universe);
  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    const double sa = rng.uniform01();
    const TruthValue a(sa, rng.uniform(0.0, universe));
    const double sb = rng.uniform01();
    const TruthValue b(sb, rng.uniform(0.0, universe));
    const auto tag = " case " + std::to_string(i);
    r.expect(close(Algebra::dual(Algebra::with(a, b)).strength(),
                   Algebra::plus(Algebra::dual(a), Algebra::dual(b)).strength()),
             "additive De Morgan" + tag);
    r.expect(close(Algebra::dual(Algebra::tensor(a, b, cfg)).strength(),
                   Algebra::par(Algebra::dual(a), Algebra::dual(b), cfg).strength()),
             "multiplicative De Morgan" + tag);
  }
  const TruthValue american(0.5, 20.0), crazy(0.3, 10.0);
  const auto neg_and = Algebra::dual(Algebra::with(american, crazy));
  const auto or_neg = Algebra::plus(Algebra::dual(american), Algebra::dual(crazy));
  r.expect(!(neg_and.count() == or_neg.count()), "count-level De Morgan witness must differ");
  r.notes.push_back("witness: (American & Crazy)^ = " + to_string(neg_and) + " but American^ + Crazy^ = " +
                    to_string(or_neg));
  return r;
}

/// Strength of a formula is unchanged by NNF; counts in general are not.
template <class Algebra = StandardAlgebra>
SuiteResult nnf_strength(std::size_t trials, std::uint64_t seed, int depth = 6, std::size_t atoms = 5,
                         double universe = 100.0) {
  SuiteResult r;
  r.name = "nnf-strength";
  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    const auto f = random_formula(rng, depth, atoms);
    const auto env = random_environment(rng, atoms, universe);
    const double direct = evaluate<Algebra>(f, env).strength();
    const double normal = evaluate<Algebra>(nnf(f), env).strength();
    r.expect(close(direct, normal), render(f) + " gives " + detail::format_real(direct) + " vs " +
                                        detail::format_real(normal) + " after NNF");
  }
  Environment env{UniverseConfig(100.0)};
  env.bind("A", TruthValue(0.5, 20.0)).bind("B", TruthValue(0.3, 10.0));
  const auto f = Formula::dual(Formula::with(Formula::atom("A"), Formula::atom("B")));
  const auto before = evaluate<Algebra>(f, env);
  const auto after = evaluate<Algebra>(nnf(f), env);
  r.expect(!(before.count() == after.count()), "NNF count witness must differ");
  r.notes.push_back("witness: " + render(f) + " = " + to_string(before) + ", " + render(nnf(f)) + " = " +
                    to_string(after));
  return r;
}

/// Exhaustive check that maximal-overlap groundings realize the Max Overlap
/// formulas exactly, over every universe size up to `max_universe` and every
/// pair of integral (count, positives) specs with nonempty evaluation sets.
template <class Algebra = StandardAlgebra>
SuiteResult oracle_equivalence(std::size_t max_universe = 20) {
  SuiteResult r;
  r.name = "oracle-equivalence";
  std::size_t count_failures = 0;
  std::size_t weaker_larger = 0;  // failures where the smaller set is strictly stronger
  for (std::size_t n_universe = 1; n_universe <= max_universe; ++n_universe) {
    const oracle::Universe u(n_universe);
    for (std::size_t na = 1; na <= n_universe; ++na) {
      for (std::size_t ka = 0; ka <= na; ++ka) {
        for (std::size_t nb = 1; nb <= n_universe; ++nb) {
          for (std::size_t kb = 0; kb <= nb; ++kb) {
            const double pa = static_cast<double>(ka) / static_cast<double>(na);
            const double pb = static_cast<double>(kb) / static_cast<double>(nb);
            const auto g = oracle::ground_max_overlap({{na, pa}, {nb, pb}}, u);
            const auto conj = oracle::exact_eval_conj(g[0], g[1]);
            const auto disj = oracle::exact_eval_disj(g[0], g[1]);
            const TruthValue ta(pa, static_cast<double>(na)), tb(pb, static_cast<double>(nb));
            const auto want_conj = Algebra::with(ta, tb);
            const auto want_disj = Algebra::plus(ta, tb);
            const bool n_ok = static_cast<double>(conj.count) == want_conj.count().value() &&
                              static_cast<double>(disj.count) == want_disj.count().value();
            const bool p_ok = conj.strength && disj.strength && *conj.strength == want_conj.strength() &&
                              *disj.strength == want_disj.strength();
            if (!n_ok) ++count_failures;
            const bool smaller_stronger = (na < nb && pa > pb) || (nb < na && pb > pa);
            if (!p_ok && smaller_stronger) ++weaker_larger;
            r.expect(n_ok && p_ok, "N=" + std::to_string(n_universe) + " A=(" + std::to_string(na) + "," +
                                       std::to_string(ka) + "/" + std::to_string(na) + ") B=(" +
                                       std::to_string(nb) + "," + std::to_string(kb) + "/" + std::to_string(nb) +
                                       "): conj " + (conj.strength ? detail::format_real(*conj.strength) : "undef") +
                                       " vs " + detail::format_real(want_conj.strength()) + ", disj " +
                                       (disj.strength ? detail::format_real(*disj.strength) : "undef") + " vs " +
                                       detail::format_real(want_disj.strength()));
          }
        }
      }
    }
  }
  r.notes.push_back("count mismatches: " + std::to_string(count_failures));
  r.notes.push_back("strength mismatches where the smaller evidence set is strictly stronger: " +
                    std::to_string(weaker_larger) + " of " + std::to_string(r.failures) + " failing cases");
  return r;
}

}  // namespace ull::suites

namespace ull::suites::mutants {

/// Tensor strength replaced by min: still a t-norm, but no longer dual to par.
struct TensorMin : StandardAlgebra {
  static TruthValue tensor(const TruthValue& a, const TruthValue& b, const UniverseConfig& cfg) {
    return {std::min(a.strength(), b.strength()), count_mul(a.count(), b.count(), cfg.size())};
  }
};

/// Independence counts without the universe normalization (n*m instead of
/// n*m/N).
struct UnnormalizedCounts : StandardAlgebra {
  static Count raw_mul(Count a, Count b) { return count_mul(a, b, 1.0); }
  static TruthValue tensor(const TruthValue& a, const TruthValue& b, const UniverseConfig&) {
    return {a.strength() * b.strength(), raw_mul(a.count(), b.count())};
  }
  static TruthValue par(const TruthValue& a, const TruthValue& b, const UniverseConfig&) {
    const double sa = a.strength(), sb = b.strength();
    if (a.count().is_infinite() || b.count().is_infinite()) return {sa + sb - sa * sb, Count::infinite()};
    const double n = a.count().value() + b.count().value() - a.count().value() * b.count().value();
    return {sa + sb - sa * sb, Count::finite(std::max(0.0, n))};
  }
};

}  // namespace ull::suites::mutants
