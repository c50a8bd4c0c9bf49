#pragma once

#include "ull/formula.hpp"

namespace ull {

/// Linear negation pushed through one connective of an already-normal formula.
inline Formula dual_of_normal(const Formula& f);

/// Negation normal form: duals only on atoms, no lollipops.
inline Formula nnf(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Top:
    case Connective::Zero:
    case Connective::One:
    case Connective::Bottom:
      return f;
    case Connective::Dual:
      return dual_of_normal(nnf(f.operand()));
    case Connective::Lollipop:
      return Formula::par(dual_of_normal(nnf(f.left())), nnf(f.right()));
    case Connective::Bang:
    case Connective::Quest:
      return Formula::unary(f.kind(), nnf(f.operand()));
    case Connective::Tensor:
    case Connective::Par:
    case Connective::With:
    case Connective::Plus:
      return Formula::binary(f.kind(), nnf(f.left()), nnf(f.right()));
  }
  return f;
}

inline Formula dual_of_normal(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return Formula::dual(f);
    case Connective::Dual:
      return f.operand();
    case Connective::Tensor:
      return Formula::par(dual_of_normal(f.left()), dual_of_normal(f.right()));
    case Connective::Par:
      return Formula::tensor(dual_of_normal(f.left()), dual_of_normal(f.right()));
    case Connective::With:
      return Formula::plus(dual_of_normal(f.left()), dual_of_normal(f.right()));
    case Connective::Plus:
      return Formula::with(dual_of_normal(f.left()), dual_of_normal(f.right()));
    case Connective::Bang:
      return Formula::quest(dual_of_normal(f.operand()));
    case Connective::Quest:
      return Formula::bang(dual_of_normal(f.operand()));
    case Connective::One:
      return Formula::bottom();
    case Connective::Bottom:
      return Formula::one();
    case Connective::Top:
      return Formula::zero();
    case Connective::Zero:
      return Formula::top();
    case Connective::Lollipop:
      return dual_of_normal(nnf(f));
  }
  return f;
}

inline bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Connective::Dual:
      return f.operand().is(Connective::Atom);
    case Connective::Lollipop:
      return false;
    default:
      break;
  }
  if (f.is_binary()) return is_nnf(f.left()) && is_nnf(f.right());
  if (f.is_unary()) return is_nnf(f.operand());
  return true;
}

}  // namespace ull
