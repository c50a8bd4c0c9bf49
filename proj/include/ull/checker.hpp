#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ull/evaluator.hpp"
#include "ull/nnf.hpp"
#include "ull/sequent.hpp"

namespace ull {

/// Pooled occurrences (a and a^ together) of every atom in a formula.
inline void count_atoms(const Formula& f, std::map<std::string, std::size_t>& out, std::size_t weight = 1) {
  if (f.is(Connective::Atom)) {
    out[f.name()] += weight;
    return;
  }
  if (f.is_binary()) {
    count_atoms(f.left(), out, weight);
    count_atoms(f.right(), out, weight);
  } else if (f.is_unary()) {
    count_atoms(f.operand(), out, weight);
  }
}

inline std::map<std::string, std::size_t> atom_occurrences(const Sequent& s) {
  std::map<std::string, std::size_t> out;
  for (const auto& f : s) count_atoms(f, out);
  return out;
}

/// Evidence accounting for one atom. Every axiom link consumes one a/a^
/// pair. The other fields record where occurrences go that no axiom link
/// accounts for one-to-one: cut formulas vanish from the conclusion, & and
/// contraction share their context between copies, and +, weakening and
/// top introduce occurrences without consuming evidence. For every valid
/// proof, per atom:
///
///     2 * tokens_consumed + discarded == conclusion + cut + shared
struct AtomTally {
  std::size_t tokens_consumed = 0;
  std::size_t cut_occurrences = 0;
  std::size_t shared_occurrences = 0;
  std::size_t discarded_occurrences = 0;

  AtomTally& operator+=(const AtomTally& o) {
    tokens_consumed += o.tokens_consumed;
    cut_occurrences += o.cut_occurrences;
    shared_occurrences += o.shared_occurrences;
    discarded_occurrences += o.discarded_occurrences;
    return *this;
  }
  friend bool operator==(const AtomTally&, const AtomTally&) = default;
};

/// A ?-formula used twice by contraction.
struct ReuseEvent {
  Formula formula;
  std::string path;
};

struct EvidenceLedger {
  std::map<std::string, AtomTally> atoms;
  std::vector<ReuseEvent> reuse_events;

  std::size_t tokens(const std::string& atom) const {
    auto it = atoms.find(atom);
    return it == atoms.end() ? 0 : it->second.tokens_consumed;
  }

  /// Order-insensitive merge.
  void merge(const EvidenceLedger& o) {
    for (const auto& [atom, tally] : o.atoms) atoms[atom] += tally;
    reuse_events.insert(reuse_events.end(), o.reuse_events.begin(), o.reuse_events.end());
  }
};

/// Checks the ledger identity documented on AtomTally against a conclusion.
inline bool ledger_balanced(const EvidenceLedger& ledger, const Sequent& conclusion) {
  auto occ = atom_occurrences(conclusion);
  std::map<std::string, bool> seen;
  for (const auto& [atom, t] : ledger.atoms) {
    seen[atom] = true;
    const std::size_t lhs = 2 * t.tokens_consumed + t.discarded_occurrences;
    const std::size_t rhs = occ[atom] + t.cut_occurrences + t.shared_occurrences;
    if (lhs != rhs) return false;
  }
  for (const auto& [atom, n] : occ) {
    if (!seen.count(atom) && n != 0) return false;
  }
  return true;
}

struct Violation {
  std::string rule;
  std::string path;
  std::string message;
  std::optional<Sequent> expected;
  std::optional<Sequent> found;

  std::string describe() const {
    std::string out = "invalid at " + path + " [" + rule + "]: " + message;
    if (expected) out += "\n  expected: " + render(*expected);
    if (found) out += "\n  found:    " + render(*found);
    return out;
  }
};

/// A node after checking: its derived conclusion and the indices of the
/// principal formula(s) in it.
struct CheckedNode {
  Rule rule;
  std::string path;
  Sequent conclusion;
  std::vector<std::size_t> principal;
  std::vector<CheckedNode> premises;
};

struct CheckResult {
  bool valid = false;
  EvidenceLedger ledger;
  std::optional<Violation> failure;
  std::optional<CheckedNode> proof;
};

namespace detail {

class ProofChecker {
 public:
  struct Failed {
    Violation violation;
  };

  CheckedNode check(const ProofNode& node, const std::string& path) {
    const auto name = std::string(rule_name(node.rule));
    auto fail = [&](std::string msg, std::optional<Sequent> expected = std::nullopt,
                    std::optional<Sequent> found = std::nullopt) -> Failed {
      return Failed{Violation{name, path, std::move(msg), std::move(expected), std::move(found)}};
    };

    if (node.premises.size() != rule_arity(node.rule)) {
      throw fail(name + " expects " + std::to_string(rule_arity(node.rule)) + " premise(s), got " +
                 std::to_string(node.premises.size()));
    }
    std::vector<CheckedNode> premises;
    for (std::size_t i = 0; i < node.premises.size(); ++i) {
      premises.push_back(check(node.premises[i], path + "/" + std::to_string(i)));
    }
    if (rule_takes_principal(node.rule) && !node.principal) throw fail(name + " needs a principal formula");
    if ((node.rule == Rule::TensorR || node.rule == Rule::Cut) && !node.split) {
      throw fail(name + " needs a declared context split");
    }

    std::optional<Formula> principal;
    if (node.principal) principal = nnf(*node.principal);
    auto premise = [&](std::size_t i) -> const Sequent& { return premises[i].conclusion; };
    auto require_kind = [&](Connective c, const std::string& what) {
      if (!principal->is(c)) throw fail(name + " introduces " + what + ", not " + render(*principal));
    };
    auto take = [&](const Sequent& s, const Formula& f, const std::string& role) -> Sequent {
      if (auto rest = s.without(f)) return *rest;
      throw fail("premise does not contain " + role + " " + render(f), std::nullopt, s);
    };

    Sequent conclusion;
    std::vector<Formula> principal_formulas;

    switch (node.rule) {
      case Rule::Ax: {
        if (!principal->is(Connective::Atom)) {
          throw fail("axiom is restricted to atoms, got " + render(*principal));
        }
        conclusion = Sequent({Formula::dual(*principal), *principal});
        principal_formulas = {conclusion[0], conclusion[1]};
        tally_[principal->name()].tokens_consumed += 1;
        break;
      }
      case Rule::Cut:
      case Rule::TensorR: {
        const Sequent gamma(node.split->left);
        const Sequent delta(node.split->right);
        auto leftover = [&](const Sequent& p, const Sequent& ctx, const char* side) -> Formula {
          auto rest = p.minus(ctx);
          if (!rest || rest->size() != 1) {
            throw fail(std::string(side) + " premise must be the declared context plus exactly one formula",
                       ctx, p);
          }
          return (*rest)[0];
        };
        const Formula a = leftover(premise(0), gamma, "left");
        const Formula b = leftover(premise(1), delta, "right");
        if (node.rule == Rule::Cut) {
          if (b != dual_of_normal(a)) {
            throw fail("cut formulas " + render(a) + " and " + render(b) + " are not dual");
          }
          std::map<std::string, std::size_t> occ;
          count_atoms(a, occ);
          count_atoms(b, occ);
          for (const auto& [atom, k] : occ) tally_[atom].cut_occurrences += k;
          conclusion = gamma.merged(delta);
        } else {
          const Formula t = Formula::tensor(a, b);
          conclusion = gamma.merged(delta).with(t);
          principal_formulas = {t};
        }
        break;
      }
      case Rule::ParR: {
        require_kind(Connective::Par, "a par");
        auto rest = take(take(premise(0), principal->left(), "left operand"), principal->right(), "right operand");
        conclusion = rest.with(*principal);
        principal_formulas = {*principal};
        break;
      }
      case Rule::WithR: {
        require_kind(Connective::With, "a with");
        const auto g1 = take(premise(0), principal->left(), "left operand");
        const auto g2 = take(premise(1), principal->right(), "right operand");
        if (g1 != g2) throw fail("with requires identical contexts in both premises", g1, g2);
        share(g1);
        conclusion = g1.with(*principal);
        principal_formulas = {*principal};
        break;
      }
      case Rule::PlusR1:
      case Rule::PlusR2: {
        require_kind(Connective::Plus, "a plus");
        const bool first = node.rule == Rule::PlusR1;
        const auto& kept = first ? principal->left() : principal->right();
        const auto& dropped = first ? principal->right() : principal->left();
        conclusion = take(premise(0), kept, first ? "left disjunct" : "right disjunct").with(*principal);
        discard(dropped);
        principal_formulas = {*principal};
        break;
      }
      case Rule::OneR: {
        if (!node.context.empty()) {
          throw fail("one requires an empty context", Sequent(), Sequent(node.context));
        }
        conclusion = Sequent({Formula::one()});
        principal_formulas = {conclusion[0]};
        break;
      }
      case Rule::BottomR: {
        conclusion = premise(0).with(Formula::bottom());
        principal_formulas = {Formula::bottom()};
        break;
      }
      case Rule::TopR: {
        const Sequent ctx(node.context);
        for (const auto& f : ctx) discard(f);
        conclusion = ctx.with(Formula::top());
        principal_formulas = {Formula::top()};
        break;
      }
      case Rule::Promotion: {
        require_kind(Connective::Bang, "a !-formula");
        const auto ctx = take(premise(0), principal->operand(), "promoted formula");
        for (const auto& f : ctx) {
          if (!f.is(Connective::Quest)) {
            throw fail("promotion requires every context formula to be ?-prefixed, found " + render(f),
                       std::nullopt, ctx);
          }
        }
        conclusion = ctx.with(*principal);
        principal_formulas = {*principal};
        break;
      }
      case Rule::Dereliction: {
        require_kind(Connective::Quest, "a ?-formula");
        conclusion = take(premise(0), principal->operand(), "derelicted formula").with(*principal);
        principal_formulas = {*principal};
        break;
      }
      case Rule::QWeakening: {
        if (!principal->is(Connective::Quest)) {
          throw fail("weakening restricted to ?-formulas, got " + render(*principal));
        }
        conclusion = premise(0).with(*principal);
        discard(*principal);
        principal_formulas = {*principal};
        break;
      }
      case Rule::QContraction: {
        if (!principal->is(Connective::Quest)) {
          throw fail("contraction restricted to ?-formulas, got " + render(*principal));
        }
        if (premise(0).count(*principal) < 2) {
          throw fail("contraction needs two copies of " + render(*principal), std::nullopt, premise(0));
        }
        conclusion = *premise(0).without(*principal);
        share(Sequent({*principal}));
        reuse_.push_back(ReuseEvent{*principal, path});
        principal_formulas = {*principal};
        break;
      }
    }

    if (node.declared && *node.declared != conclusion) {
      if (node.rule == Rule::TensorR) {
        // Declared conclusion drops context that both premises consumed.
        const Sequent gamma(node.split->left);
        const Sequent delta(node.split->right);
        if (auto missing = conclusion.minus(*node.declared)) {
          bool shared = !missing->empty();
          for (const auto& f : *missing) shared = shared && gamma.contains(f) && delta.contains(f);
          if (shared) {
            throw fail("tensor premises share context " + render(*missing) + "; contexts must be split, not copied",
                       *node.declared, conclusion);
          }
        }
      }
      throw fail("declared conclusion does not match the rule", *node.declared, conclusion);
    }

    std::vector<std::size_t> indices;
    for (const auto& f : principal_formulas) {
      if (auto i = conclusion.index_of(f)) indices.push_back(*i);
    }
    return CheckedNode{node.rule, path, std::move(conclusion), std::move(indices), std::move(premises)};
  }

  EvidenceLedger ledger() const {
    EvidenceLedger l;
    l.atoms = tally_;
    l.reuse_events = reuse_;
    return l;
  }

 private:
  void share(const Sequent& s) {
    std::map<std::string, std::size_t> occ;
    for (const auto& f : s) count_atoms(f, occ);
    for (const auto& [atom, k] : occ) tally_[atom].shared_occurrences += k;
  }

  void discard(const Formula& f) {
    std::map<std::string, std::size_t> occ;
    count_atoms(f, occ);
    for (const auto& [atom, k] : occ) tally_[atom].discarded_occurrences += k;
  }

  std::map<std::string, AtomTally> tally_;
  std::vector<ReuseEvent> reuse_;
};

}  // namespace detail

/// Validates every rule application bottom-up and reports the first
/// violation (premises before their conclusion, left to right). Linearity
/// is enforced: contexts of multiplicative rules are split exactly, and
/// contraction and weakening only apply to ?-formulas.
inline CheckResult check(const ProofNode& proof) {
  detail::ProofChecker checker;
  CheckResult result;
  try {
    result.proof = checker.check(proof, "root");
    result.valid = true;
    result.ledger = checker.ledger();
  } catch (const detail::ProofChecker::Failed& f) {
    result.failure = f.violation;
  }
  return result;
}

/// Value of a sequent: the par of its members in canonical order. The
/// empty sequent is bottom.
inline TruthValue sequent_value(const Sequent& s, const Environment& env) {
  if (s.empty()) return constant_tv(Constant::Bottom, env.universe());
  Formula acc = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) acc = Formula::par(acc, s[i]);
  return evaluate(acc, env);
}

struct AnnotatedNode {
  Rule rule;
  std::string path;
  Sequent conclusion;
  TruthValue value;
  std::vector<AnnotatedNode> premises;
};

namespace detail {

inline AnnotatedNode annotate(const CheckedNode& n, const Environment& env) {
  std::vector<AnnotatedNode> premises;
  for (const auto& p : n.premises) premises.push_back(annotate(p, env));
  return AnnotatedNode{n.rule, n.path, n.conclusion, sequent_value(n.conclusion, env), std::move(premises)};
}

}  // namespace detail

/// Attaches a truth value to every sequent of a valid proof. Throws
/// std::invalid_argument for invalid proofs and UnboundAtom for missing
/// bindings.
inline AnnotatedNode tv_annotate(const ProofNode& proof, const Environment& env) {
  auto result = check(proof);
  if (!result.valid) throw std::invalid_argument(result.failure->describe());
  return detail::annotate(*result.proof, env);
}

}  // namespace ull
