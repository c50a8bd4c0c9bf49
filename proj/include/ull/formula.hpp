#pragma once

#include <compare>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ull/truth_value.hpp"

namespace ull {

enum class Connective {
  Atom,
  Dual,
  Tensor,
  Par,
  With,
  Plus,
  Lollipop,
  Bang,
  Quest,
  Top,
  Zero,
  One,
  Bottom,
};

/// Atom names match [A-Za-z][A-Za-z0-9_]*. "T" and "F" are reserved for the
/// constants top and bottom.
inline bool is_atom_name(std::string_view name) {
  if (name.empty() || name == "T" || name == "F") return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !digit(c) && c != '_') return false;
  }
  return true;
}

/// Immutable linear-logic formula. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula dual(Formula f) { return unary(Connective::Dual, std::move(f)); }
  static Formula tensor(Formula l, Formula r) { return binary(Connective::Tensor, std::move(l), std::move(r)); }
  static Formula par(Formula l, Formula r) { return binary(Connective::Par, std::move(l), std::move(r)); }
  static Formula with(Formula l, Formula r) { return binary(Connective::With, std::move(l), std::move(r)); }
  static Formula plus(Formula l, Formula r) { return binary(Connective::Plus, std::move(l), std::move(r)); }
  static Formula lollipop(Formula l, Formula r) { return binary(Connective::Lollipop, std::move(l), std::move(r)); }
  static Formula bang(Formula f) { return unary(Connective::Bang, std::move(f)); }
  static Formula quest(Formula f) { return unary(Connective::Quest, std::move(f)); }
  static Formula top() { return nullary(Connective::Top); }
  static Formula zero() { return nullary(Connective::Zero); }
  static Formula one() { return nullary(Connective::One); }
  static Formula bottom() { return nullary(Connective::Bottom); }
  static Formula binary(Connective c, Formula l, Formula r);
  static Formula unary(Connective c, Formula f);
  static Formula nullary(Connective c);

  Connective kind() const;
  /// Atom name; empty for every other node.
  const std::string& name() const;
  /// Left operand of a binary node, sole operand of a unary one.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& operand() const { return left(); }

  bool is(Connective c) const { return kind() == c; }
  bool is_binary() const;
  bool is_unary() const;
  bool is_constant() const;

  /// Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  /// Structural total order, used to keep multisets canonical.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  bool has_left() const;
  bool has_right() const;

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  Formula left;
  Formula right;
};

inline Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), Formula(), Formula()}));
}

inline Formula Formula::binary(Connective c, Formula l, Formula r) {
  switch (c) {
    case Connective::Tensor:
    case Connective::Par:
    case Connective::With:
    case Connective::Plus:
    case Connective::Lollipop:
      break;
    default:
      throw std::invalid_argument("not a binary connective");
  }
  return Formula(std::make_shared<const Node>(Node{c, {}, std::move(l), std::move(r)}));
}

inline Formula Formula::unary(Connective c, Formula f) {
  if (c != Connective::Dual && c != Connective::Bang && c != Connective::Quest) {
    throw std::invalid_argument("not a unary connective");
  }
  return Formula(std::make_shared<const Node>(Node{c, {}, std::move(f), Formula()}));
}

inline Formula Formula::nullary(Connective c) {
  if (c != Connective::Top && c != Connective::Zero && c != Connective::One && c != Connective::Bottom) {
    throw std::invalid_argument("not a constant");
  }
  return Formula(std::make_shared<const Node>(Node{c, {}, Formula(), Formula()}));
}

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }

inline bool Formula::has_left() const { return node_->left.node_ != nullptr; }
inline bool Formula::has_right() const { return node_->right.node_ != nullptr; }

inline const Formula& Formula::left() const {
  if (!has_left()) throw std::logic_error("formula has no operand");
  return node_->left;
}

inline const Formula& Formula::right() const {
  if (!has_right()) throw std::logic_error("formula has no right operand");
  return node_->right;
}

inline bool Formula::is_binary() const { return has_right(); }
inline bool Formula::is_unary() const { return has_left() && !has_right(); }
inline bool Formula::is_constant() const {
  switch (kind()) {
    case Connective::Top:
    case Connective::Zero:
    case Connective::One:
    case Connective::Bottom:
      return true;
    default:
      return false;
  }
}

inline std::size_t Formula::size() const {
  std::size_t n = 1;
  if (has_left()) n += left().size();
  if (has_right()) n += right().size();
  return n;
}

inline bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

inline std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is(Connective::Atom)) return a.name() <=> b.name();
  if (a.has_left()) {
    if (auto c = a.left() <=> b.left(); c != 0) return c;
  }
  if (a.has_right()) return a.right() <=> b.right();
  return std::strong_ordering::equal;
}

inline Constant to_constant(Connective c) {
  switch (c) {
    case Connective::Top:
      return Constant::Top;
    case Connective::Zero:
      return Constant::Zero;
    case Connective::One:
      return Constant::One;
    case Connective::Bottom:
      return Constant::Bottom;
    default:
      throw std::invalid_argument("not a constant connective");
  }
}

/// ASCII surface token for a connective.
inline std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::Tensor:
      return "*";
    case Connective::Par:
      return "|";
    case Connective::With:
      return "&";
    case Connective::Plus:
      return "+";
    case Connective::Lollipop:
      return "-o";
    case Connective::Dual:
      return "^";
    case Connective::Bang:
      return "!";
    case Connective::Quest:
      return "?";
    case Connective::Top:
      return "T";
    case Connective::Zero:
      return "0";
    case Connective::One:
      return "1";
    case Connective::Bottom:
      return "F";
    case Connective::Atom:
      break;
  }
  return "";
}

namespace detail {

enum class Level { Lollipop, Additive, Multiplicative, Prefix, Postfix };

inline Level level_of(const Formula& f) {
  switch (f.kind()) {
    case Connective::Lollipop:
      return Level::Lollipop;
    case Connective::With:
    case Connective::Plus:
      return Level::Additive;
    case Connective::Tensor:
    case Connective::Par:
      return Level::Multiplicative;
    case Connective::Bang:
    case Connective::Quest:
      return Level::Prefix;
    default:
      return Level::Postfix;
  }
}

inline void render_into(const Formula& f, std::string& out);

inline void render_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

inline void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Top:
    case Connective::Zero:
    case Connective::One:
    case Connective::Bottom:
      out += symbol(f.kind());
      return;
    case Connective::Dual:
      render_wrapped(f.operand(), level_of(f.operand()) != Level::Postfix, out);
      out += '^';
      return;
    case Connective::Bang:
    case Connective::Quest:
      out += symbol(f.kind());
      render_wrapped(f.operand(), level_of(f.operand()) < Level::Prefix, out);
      return;
    case Connective::Lollipop:
      render_wrapped(f.left(), f.left().is(Connective::Lollipop), out);
      out += " -o ";
      render_into(f.right(), out);
      return;
    case Connective::Tensor:
    case Connective::Par:
    case Connective::With:
    case Connective::Plus: {
      // Same-operator chains associate to the left; mixing two operators of
      // one level always needs parentheses.
      const Level lvl = level_of(f);
      const bool left_parens = level_of(f.left()) < lvl || (level_of(f.left()) == lvl && !f.left().is(f.kind()));
      render_wrapped(f.left(), left_parens, out);
      out += ' ';
      out += symbol(f.kind());
      out += ' ';
      render_wrapped(f.right(), level_of(f.right()) <= lvl, out);
      return;
    }
  }
}

}  // namespace detail

/// Canonical text with minimal parentheses; parse(render(f)) == f.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, out);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

}  // namespace ull
