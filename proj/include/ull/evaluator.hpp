#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ull/environment.hpp"
#include "ull/formula.hpp"
#include "ull/truth_value.hpp"

namespace ull {

class UnboundAtom : public std::runtime_error {
 public:
  explicit UnboundAtom(const std::string& atom) : std::runtime_error("unbound atom " + atom), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// Evaluates a formula bottom-up. & and + use the Max Overlap formulas,
/// * and | the Independence formulas; A -o B is evaluated as A^ | B.
template <class Algebra = StandardAlgebra>
TruthValue evaluate(const Formula& f, const Environment& env) {
  const auto& cfg = env.universe();
  switch (f.kind()) {
    case Connective::Atom:
      if (auto tv = env.lookup(f.name())) return *tv;
      throw UnboundAtom(f.name());
    case Connective::Dual:
      return Algebra::dual(evaluate<Algebra>(f.operand(), env));
    case Connective::Tensor:
      return Algebra::tensor(evaluate<Algebra>(f.left(), env), evaluate<Algebra>(f.right(), env), cfg);
    case Connective::Par:
      return Algebra::par(evaluate<Algebra>(f.left(), env), evaluate<Algebra>(f.right(), env), cfg);
    case Connective::With:
      return Algebra::with(evaluate<Algebra>(f.left(), env), evaluate<Algebra>(f.right(), env));
    case Connective::Plus:
      return Algebra::plus(evaluate<Algebra>(f.left(), env), evaluate<Algebra>(f.right(), env));
    case Connective::Lollipop:
      return Algebra::par(Algebra::dual(evaluate<Algebra>(f.left(), env)), evaluate<Algebra>(f.right(), env), cfg);
    case Connective::Bang:
      return Algebra::of_course(evaluate<Algebra>(f.operand(), env));
    case Connective::Quest:
      return Algebra::why_not(evaluate<Algebra>(f.operand(), env));
    case Connective::Top:
    case Connective::Zero:
    case Connective::One:
    case Connective::Bottom:
      return Algebra::constant(to_constant(f.kind()), cfg);
  }
  throw std::logic_error("unreachable connective");
}

/// A formula tree with the value of every subformula attached.
struct EvalReport {
  Formula formula;
  TruthValue value;
  std::vector<EvalReport> children;
};

template <class Algebra = StandardAlgebra>
EvalReport evaluate_report(const Formula& f, const Environment& env) {
  std::vector<EvalReport> children;
  if (f.is_binary()) {
    children.push_back(evaluate_report<Algebra>(f.left(), env));
    children.push_back(evaluate_report<Algebra>(f.right(), env));
  } else if (f.is_unary()) {
    children.push_back(evaluate_report<Algebra>(f.operand(), env));
  }
  const auto& cfg = env.universe();
  auto value = [&]() -> TruthValue {
    switch (f.kind()) {
      case Connective::Atom:
        if (auto tv = env.lookup(f.name())) return *tv;
        throw UnboundAtom(f.name());
      case Connective::Dual:
        return Algebra::dual(children[0].value);
      case Connective::Tensor:
        return Algebra::tensor(children[0].value, children[1].value, cfg);
      case Connective::Par:
        return Algebra::par(children[0].value, children[1].value, cfg);
      case Connective::With:
        return Algebra::with(children[0].value, children[1].value);
      case Connective::Plus:
        return Algebra::plus(children[0].value, children[1].value);
      case Connective::Lollipop:
        return Algebra::par(Algebra::dual(children[0].value), children[1].value, cfg);
      case Connective::Bang:
        return Algebra::of_course(children[0].value);
      case Connective::Quest:
        return Algebra::why_not(children[0].value);
      default:
        return Algebra::constant(to_constant(f.kind()), cfg);
    }
  }();
  return EvalReport{f, value, std::move(children)};
}

}  // namespace ull
