#pragma once

#include "ull/nnf.hpp"
#include "ull/sequent.hpp"

namespace ull {

namespace detail {

inline bool is_positive(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Tensor:
    case Connective::Plus:
    case Connective::Bang:
    case Connective::One:
    case Connective::Zero:
      return true;
    default:
      return false;
  }
}

inline ProofNode unary_node(Rule r, Formula principal, ProofNode premise) {
  ProofNode n;
  n.rule = r;
  n.principal = std::move(principal);
  n.premises.push_back(std::move(premise));
  return n;
}

}  // namespace detail

/// Proof of |- A^, A for any formula, by eta-expansion down to atomic axioms.
inline ProofNode identity_proof(const Formula& formula) {
  const Formula a = nnf(formula);
  // Expand on the positive side; the negative side is its dual.
  if (!detail::is_positive(a)) return identity_proof(dual_of_normal(a));

  ProofNode n;
  switch (a.kind()) {
    case Connective::Atom:
      n.rule = Rule::Ax;
      n.principal = a;
      return n;
    case Connective::Tensor: {
      // |- A^, B^, A * B, then par the duals together.
      ProofNode t;
      t.rule = Rule::TensorR;
      t.split = ContextSplit{{dual_of_normal(a.left())}, {dual_of_normal(a.right())}};
      t.premises = {identity_proof(a.left()), identity_proof(a.right())};
      return detail::unary_node(Rule::ParR, dual_of_normal(a), std::move(t));
    }
    case Connective::Plus:
      n.rule = Rule::WithR;
      n.principal = dual_of_normal(a);
      n.premises = {detail::unary_node(Rule::PlusR1, a, identity_proof(a.left())),
                    detail::unary_node(Rule::PlusR2, a, identity_proof(a.right()))};
      return n;
    case Connective::Bang:
      return detail::unary_node(
          Rule::Promotion, a,
          detail::unary_node(Rule::Dereliction, dual_of_normal(a), identity_proof(a.operand())));
    case Connective::One: {
      ProofNode one;
      one.rule = Rule::OneR;
      n.rule = Rule::BottomR;
      n.premises.push_back(std::move(one));
      return n;
    }
    case Connective::Zero:
      n.rule = Rule::TopR;
      n.context = {a};
      return n;
    default:
      break;
  }
  throw std::logic_error("identity_proof: unexpected connective");
}

}  // namespace ull
