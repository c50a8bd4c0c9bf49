#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ull/formula.hpp"
#include "ull/nnf.hpp"

namespace ull {

/// One-sided sequent |- A1, ..., Ak as a multiset of NNF formulas, kept in
/// canonical (sorted) order.
class Sequent {
 public:
  Sequent() = default;

  /// Normalizes every member to NNF.
  explicit Sequent(const std::vector<Formula>& formulas) {
    items_.reserve(formulas.size());
    for (const auto& f : formulas) items_.push_back(nnf(f));
    std::sort(items_.begin(), items_.end());
  }

  /// Two-sided Gamma |- Delta, moved to the right with the left side dualized.
  static Sequent two_sided(const std::vector<Formula>& left, const std::vector<Formula>& right) {
    std::vector<Formula> all = right;
    for (const auto& f : left) all.push_back(Formula::dual(f));
    return Sequent(all);
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Formula>& formulas() const { return items_; }

  std::size_t count(const Formula& f) const {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
    return static_cast<std::size_t>(hi - lo);
  }
  bool contains(const Formula& f) const { return count(f) > 0; }

  /// Index of the first occurrence of f.
  std::optional<std::size_t> index_of(const Formula& f) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    if (it == items_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - items_.begin());
  }

  Sequent with(const Formula& f) const {
    Sequent s = *this;
    s.items_.insert(std::upper_bound(s.items_.begin(), s.items_.end(), f), f);
    return s;
  }

  Sequent merged(const Sequent& other) const {
    Sequent s;
    s.items_.reserve(size() + other.size());
    std::merge(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(), std::back_inserter(s.items_));
    return s;
  }

  /// Removes one occurrence; nullopt if absent.
  std::optional<Sequent> without(const Formula& f) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    if (it == items_.end() || *it != f) return std::nullopt;
    Sequent s = *this;
    s.items_.erase(s.items_.begin() + (it - items_.begin()));
    return s;
  }

  /// Multiset difference; nullopt unless `other` is a sub-multiset.
  std::optional<Sequent> minus(const Sequent& other) const {
    Sequent s;
    if (!std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end())) return std::nullopt;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(s.items_));
    return s;
  }

  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> items_;
};

inline std::string render(const Sequent& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += render(s[i]);
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << "|- " << render(s); }

enum class Rule {
  Ax,
  Cut,
  TensorR,
  ParR,
  WithR,
  PlusR1,
  PlusR2,
  OneR,
  BottomR,
  TopR,
  Promotion,
  Dereliction,
  QWeakening,
  QContraction,
};

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Ax:
      return "ax";
    case Rule::Cut:
      return "cut";
    case Rule::TensorR:
      return "tensor";
    case Rule::ParR:
      return "par";
    case Rule::WithR:
      return "with";
    case Rule::PlusR1:
      return "plus1";
    case Rule::PlusR2:
      return "plus2";
    case Rule::OneR:
      return "one";
    case Rule::BottomR:
      return "bottom";
    case Rule::TopR:
      return "top";
    case Rule::Promotion:
      return "promote";
    case Rule::Dereliction:
      return "derelict";
    case Rule::QWeakening:
      return "weaken?";
    case Rule::QContraction:
      return "contract?";
  }
  return "?";
}

inline std::optional<Rule> rule_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Rule::QContraction); ++i) {
    const auto r = static_cast<Rule>(i);
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

/// Number of premises each rule takes.
inline std::size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::Ax:
    case Rule::OneR:
    case Rule::TopR:
      return 0;
    case Rule::Cut:
    case Rule::TensorR:
    case Rule::WithR:
      return 2;
    default:
      return 1;
  }
}

/// Whether the rule carries a principal-formula argument, e.g. the A | B
/// that `par` introduces.
inline bool rule_takes_principal(Rule r) {
  switch (r) {
    case Rule::Ax:
    case Rule::ParR:
    case Rule::WithR:
    case Rule::PlusR1:
    case Rule::PlusR2:
    case Rule::Promotion:
    case Rule::Dereliction:
    case Rule::QWeakening:
    case Rule::QContraction:
      return true;
    default:
      return false;
  }
}

struct ContextSplit {
  std::vector<Formula> left;
  std::vector<Formula> right;
};

/// One rule application as written by the user. Conclusions are derived by
/// the checker; `declared` optionally states what the author expects the
/// conclusion to be, and must then match.
struct ProofNode {
  Rule rule = Rule::Ax;
  std::optional<Formula> principal;
  std::vector<Formula> context;       // top: the absorbed context; one: must stay empty
  std::optional<ContextSplit> split;  // tensor and cut
  std::optional<Sequent> declared;
  std::vector<ProofNode> premises;
  std::size_t offset = 0;  // 1-based source offset, 0 when built in code
};

}  // namespace ull
