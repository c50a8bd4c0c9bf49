#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ull {

/// Number of observations behind a strength estimate. Either a finite
/// non-negative real (expected counts such as 20*10/100 are means, not
/// tallies) or infinite, which is what `!` produces.
class Count {
 public:
  constexpr Count() = default;

  static Count finite(double value) {
    if (!(value >= 0.0) || std::isinf(value)) {
      throw std::domain_error("count must be a finite non-negative number");
    }
    return Count(value, false);
  }

  static constexpr Count infinite() { return Count(0.0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0.0; }

  /// Finite value, or +inf.
  constexpr double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend constexpr bool operator==(const Count& a, const Count& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  constexpr Count(double v, bool inf) : value_(v), infinite_(inf) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

inline Count count_min(Count a, Count b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  return Count::finite(std::min(a.value(), b.value()));
}

inline Count count_max(Count a, Count b) {
  if (a.is_infinite() || b.is_infinite()) return Count::infinite();
  return Count::finite(std::max(a.value(), b.value()));
}

/// Expected overlap of two independent samples: a*b/N. A zero operand
/// contributes no evidence, so inf*0 = 0.
inline Count count_mul(Count a, Count b, double universe) {
  if (a.is_zero() || b.is_zero()) return Count::finite(0.0);
  if (a.is_infinite() || b.is_infinite()) return Count::infinite();
  return Count::finite(a.value() * b.value() / universe);
}

/// Expected union of two independent samples: a + b - a*b/N.
inline Count count_or(Count a, Count b, double universe) {
  if (a.is_infinite() || b.is_infinite()) return Count::infinite();
  return Count::finite(a.value() + b.value() - a.value() * b.value() / universe);
}

/// Size of the body of potential observations.
class UniverseConfig {
 public:
  explicit UniverseConfig(double size) : size_(size) {
    if (!(size > 0.0) || std::isinf(size)) {
      throw std::domain_error("universe size must be a positive finite number");
    }
  }

  double size() const { return size_; }

 private:
  double size_;
};

/// Simple (strength, count) truth value.
class TruthValue {
 public:
  TruthValue(double strength, Count count) : strength_(strength), count_(count) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
      throw std::domain_error("strength must lie in [0, 1]");
    }
  }

  TruthValue(double strength, double count) : TruthValue(strength, Count::finite(count)) {}

  double strength() const { return strength_; }
  Count count() const { return count_; }

  friend bool operator==(const TruthValue& a, const TruthValue& b) {
    return a.strength_ == b.strength_ && a.count_ == b.count_;
  }

 private:
  double strength_;
  Count count_;
};

namespace detail {

inline double clamp_unit(double s) { return std::clamp(s, 0.0, 1.0); }

inline std::string format_real(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

inline std::string to_string(Count c) { return detail::format_real(c.value()); }

/// "(s, n)" with up to twelve significant digits; infinite counts print as "inf".
inline std::string to_string(const TruthValue& tv) {
  return "(" + detail::format_real(tv.strength()) + ", " + to_string(tv.count()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TruthValue& tv) { return os << to_string(tv); }
inline std::ostream& operator<<(std::ostream& os, Count c) { return os << to_string(c); }

// Max Overlap family: grounds & and +.

inline TruthValue and_additive(const TruthValue& a, const TruthValue& b) {
  return {std::min(a.strength(), b.strength()), count_min(a.count(), b.count())};
}

inline TruthValue or_additive(const TruthValue& a, const TruthValue& b) {
  return {std::max(a.strength(), b.strength()), count_max(a.count(), b.count())};
}

// Independence family: grounds * and |. Counts are normalized by the
// universe size, so 20 and 10 observations out of 100 overlap in 2.

inline TruthValue and_multiplicative(const TruthValue& a, const TruthValue& b, const UniverseConfig& cfg) {
  return {a.strength() * b.strength(), count_mul(a.count(), b.count(), cfg.size())};
}

inline TruthValue or_multiplicative(const TruthValue& a, const TruthValue& b, const UniverseConfig& cfg) {
  const double sa = a.strength();
  const double sb = b.strength();
  return {detail::clamp_unit(sa + sb - sa * sb), count_or(a.count(), b.count(), cfg.size())};
}

/// Shared by both families.
inline TruthValue negate(const TruthValue& a) { return {1.0 - a.strength(), a.count()}; }

inline TruthValue bang(const TruthValue& a) { return {a.strength(), Count::infinite()}; }

/// ?A = (!(A^))^, taken literally.
inline TruthValue quest(const TruthValue& a) { return negate(bang(negate(a))); }

enum class Constant { Top, Zero, One, Bottom };

/// Each constant is the unit of its connective: T for &, 0 for +, 1 for *,
/// F (bottom) for |. Zero and bottom coincide.
inline TruthValue constant_tv(Constant c, const UniverseConfig& cfg) {
  switch (c) {
    case Constant::Top:
      return {1.0, Count::infinite()};
    case Constant::One:
      return {1.0, cfg.size()};
    case Constant::Zero:
    case Constant::Bottom:
      break;
  }
  return {0.0, 0.0};
}

/// The connective table the evaluator and the property suites are
/// parameterized over.
struct StandardAlgebra {
  static TruthValue with(const TruthValue& a, const TruthValue& b) { return and_additive(a, b); }
  static TruthValue plus(const TruthValue& a, const TruthValue& b) { return or_additive(a, b); }
  static TruthValue tensor(const TruthValue& a, const TruthValue& b, const UniverseConfig& cfg) {
    return and_multiplicative(a, b, cfg);
  }
  static TruthValue par(const TruthValue& a, const TruthValue& b, const UniverseConfig& cfg) {
    return or_multiplicative(a, b, cfg);
  }
  static TruthValue dual(const TruthValue& a) { return negate(a); }
  static TruthValue of_course(const TruthValue& a) { return bang(a); }
  static TruthValue why_not(const TruthValue& a) { return quest(a); }
  static TruthValue constant(Constant c, const UniverseConfig& cfg) { return constant_tv(c, cfg); }
};

}  // namespace ull
