#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ull/random.hpp"

namespace ull::oracle {

/// Observation IDs 0..size-1.
class Universe {
 public:
  explicit Universe(std::size_t size) : size_(size) {
    if (size == 0) throw std::invalid_argument("universe must contain at least one observation");
  }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
};

/// Observations evaluated for one atom, and the positive ones among them.
class Grounding {
 public:
  Grounding(std::vector<bool> evaluated, std::vector<bool> positive)
      : evaluated_(std::move(evaluated)), positive_(std::move(positive)) {
    if (evaluated_.size() != positive_.size()) throw std::invalid_argument("grounding masks differ in size");
    for (std::size_t i = 0; i < evaluated_.size(); ++i) {
      if (positive_[i] && !evaluated_[i]) throw std::invalid_argument("positive observation was never evaluated");
    }
  }

  std::size_t universe_size() const { return evaluated_.size(); }
  bool evaluated(std::size_t id) const { return evaluated_[id]; }
  bool positive(std::size_t id) const { return positive_[id]; }

  std::size_t count() const { return static_cast<std::size_t>(std::count(evaluated_.begin(), evaluated_.end(), true)); }
  std::size_t positives() const {
    return static_cast<std::size_t>(std::count(positive_.begin(), positive_.end(), true));
  }
  std::optional<double> strength() const {
    const auto n = count();
    if (n == 0) return std::nullopt;
    return static_cast<double>(positives()) / static_cast<double>(n);
  }

 private:
  std::vector<bool> evaluated_;
  std::vector<bool> positive_;
};

/// An observed (p, n) pair. p is absent when there is no shared evidence.
struct Observed {
  std::optional<double> strength;
  std::size_t count = 0;
};

struct GroundingSpec {
  std::size_t count;
  double strength;
};

/// Number of positive observations a (count, strength) pair implies; throws unless
/// strength*count is (within 1e-9) an integer.
inline std::size_t realized_positives(const GroundingSpec& spec) {
  if (!(spec.strength >= 0.0 && spec.strength <= 1.0)) throw std::invalid_argument("strength must lie in [0, 1]");
  const double tally = spec.strength * static_cast<double>(spec.count);
  const double rounded = std::round(tally);
  if (std::abs(tally - rounded) > 1e-9) {
    throw std::invalid_argument("strength * count is not a whole number of observations");
  }
  return static_cast<std::size_t>(rounded);
}

/// Maximal-overlap groundings: every evaluated set is the prefix 0..n-1 of
/// the observation order, and every positive set is the prefix 0..k-1, so
/// sets of equal size coincide and smaller sets nest inside larger ones.
inline std::vector<Grounding> ground_max_overlap(const std::vector<GroundingSpec>& specs, const Universe& u) {
  std::vector<Grounding> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) {
    if (spec.count > u.size()) throw std::invalid_argument("count exceeds the universe size");
    const auto k = realized_positives(spec);
    std::vector<bool> eval(u.size(), false);
    std::vector<bool> pos(u.size(), false);
    for (std::size_t i = 0; i < spec.count; ++i) eval[i] = true;
    for (std::size_t i = 0; i < k; ++i) pos[i] = true;
    out.emplace_back(std::move(eval), std::move(pos));
  }
  return out;
}

/// Conjunction over the shared evidence: observations evaluated for both,
/// positive when positive for both.
inline Observed exact_eval_conj(const Grounding& a, const Grounding& b) {
  if (a.universe_size() != b.universe_size()) throw std::invalid_argument("groundings from different universes");
  std::size_t shared = 0;
  std::size_t both = 0;
  for (std::size_t i = 0; i < a.universe_size(); ++i) {
    if (a.evaluated(i) && b.evaluated(i)) {
      ++shared;
      if (a.positive(i) && b.positive(i)) ++both;
    }
  }
  if (shared == 0) return {std::nullopt, 0};
  return {static_cast<double>(both) / static_cast<double>(shared), shared};
}

/// Disjunction over the union: an observation counts as positive when it is
/// positive for some property it was evaluated for. Unevaluated outcomes
/// contribute nothing.
inline Observed exact_eval_disj(const Grounding& a, const Grounding& b) {
  if (a.universe_size() != b.universe_size()) throw std::invalid_argument("groundings from different universes");
  std::size_t uni = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < a.universe_size(); ++i) {
    if (a.evaluated(i) || b.evaluated(i)) {
      ++uni;
      if (a.positive(i) || b.positive(i)) ++pos;
    }
  }
  if (uni == 0) return {std::nullopt, 0};
  return {static_cast<double>(pos) / static_cast<double>(uni), uni};
}

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

/// Fixed-order running sums; identical sample sequences give bit-identical
/// estimates.
class Accumulator {
 public:
  void add(double x) {
    sum_ += x;
    sum_sq_ += x * x;
    ++n_;
  }
  std::size_t size() const { return n_; }

  /// nullopt when nothing was recorded.
  std::optional<McEstimate> estimate() const {
    if (n_ == 0) return std::nullopt;
    const double n = static_cast<double>(n_);
    const double mean = sum_ / n;
    double se = 0.0;
    if (n_ > 1) {
      const double var = std::max(0.0, (sum_sq_ - n * mean * mean) / (n - 1.0));
      se = std::sqrt(var / n);
    }
    return McEstimate{mean, se, n_};
  }

 private:
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
  std::size_t n_ = 0;
};

struct IndependenceEstimate {
  std::optional<McEstimate> conj_strength;  // trials with shared evidence only
  McEstimate conj_count;
  std::optional<McEstimate> disj_strength;  // trials with a nonempty union only
  McEstimate disj_count;
};

struct IndependenceParams {
  std::size_t count_a;
  double strength_a;
  std::size_t count_b;
  double strength_b;
};

/// One Independence trial: two evaluated sets drawn as uniform random
/// subsets of the given sizes, and a latent A- and B-outcome for every
/// observation. Conjunction is read off the groundings; the disjunction
/// strength uses the latent outcomes over the union, since under
/// independence the outcome of an observation does not depend on whether
/// it was selected for evaluation.
struct IndependenceTrial {
  Observed conj;
  Observed disj;
};

inline IndependenceTrial independence_trial(const IndependenceParams& p, const Universe& u, CounterRng& rng) {
  const std::size_t n = u.size();
  auto eval_a = random_subset(n, p.count_a, rng);
  auto eval_b = random_subset(n, p.count_b, rng);
  std::vector<bool> out_a(n);
  std::vector<bool> out_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    out_a[i] = rng.bernoulli(p.strength_a);
    out_b[i] = rng.bernoulli(p.strength_b);
  }
  std::vector<bool> pos_a(n);
  std::vector<bool> pos_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos_a[i] = eval_a[i] && out_a[i];
    pos_b[i] = eval_b[i] && out_b[i];
  }
  const Grounding ga(eval_a, std::move(pos_a));
  const Grounding gb(eval_b, std::move(pos_b));

  IndependenceTrial t;
  t.conj = exact_eval_conj(ga, gb);
  std::size_t uni = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (eval_a[i] || eval_b[i]) {
      ++uni;
      if (out_a[i] || out_b[i]) ++pos;
    }
  }
  t.disj.count = uni;
  if (uni > 0) t.disj.strength = static_cast<double>(pos) / static_cast<double>(uni);
  return t;
}

/// Monte Carlo check of the Independence formulas. Trial i draws from
/// stream i of `seed`, so trials are reproducible and addressable.
inline IndependenceEstimate mc_independence(const IndependenceParams& p, const Universe& u, std::size_t trials,
                                            std::uint64_t seed) {
  if (p.count_a > u.size() || p.count_b > u.size()) throw std::invalid_argument("sample size exceeds the universe");
  if (!(p.strength_a >= 0.0 && p.strength_a <= 1.0) || !(p.strength_b >= 0.0 && p.strength_b <= 1.0)) {
    throw std::invalid_argument("strength must lie in [0, 1]");
  }
  if (trials == 0) throw std::invalid_argument("at least one trial is required");

  Accumulator conj_p, conj_n, disj_p, disj_n;
  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    const auto t = independence_trial(p, u, rng);
    conj_n.add(static_cast<double>(t.conj.count));
    disj_n.add(static_cast<double>(t.disj.count));
    if (t.conj.strength) conj_p.add(*t.conj.strength);
    if (t.disj.strength) disj_p.add(*t.disj.strength);
  }
  return {conj_p.estimate(), *conj_n.estimate(), disj_p.estimate(), *disj_n.estimate()};
}

struct DetectorEstimate {
  McEstimate independent_joint;
  double combined_min;
};

/// Two fuzzy detectors held up together. Each tick, T rings with probability
/// `bt` and C independently with probability `bc`; a trial's sample is the
/// fraction of ticks where both ring. The single combined detector reading
/// is min(bt, bc).
inline DetectorEstimate detector_sim(double bt, double bc, std::size_t ticks, std::size_t trials, std::uint64_t seed) {
  if (!(bt >= 0.0 && bt <= 1.0) || !(bc >= 0.0 && bc <= 1.0)) throw std::invalid_argument("degrees must lie in [0, 1]");
  if (ticks == 0 || trials == 0) throw std::invalid_argument("ticks and trials must be positive");
  Accumulator joint;
  for (std::size_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    std::size_t both = 0;
    for (std::size_t t = 0; t < ticks; ++t) {
      const bool rt = rng.bernoulli(bt);
      const bool rc = rng.bernoulli(bc);
      if (rt && rc) ++both;
    }
    joint.add(static_cast<double>(both) / static_cast<double>(ticks));
  }
  return {*joint.estimate(), std::min(bt, bc)};
}

/// |mean - target| <= sigmas * std_error. A zero-variance estimate must hit
/// the target exactly.
inline bool within_sigmas(const McEstimate& e, double target, double sigmas = 3.0) {
  return std::abs(e.mean - target) <= sigmas * e.std_error;
}

}  // namespace ull::oracle
