#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ull/environment.hpp"
#include "ull/formula.hpp"

namespace ull {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: output i of stream `key` is mix64(key + i*gamma),
/// so any (seed, stream) pair can be addressed without replaying others.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix64(seed ^ mix64(stream ^ 0x6a09e667f3bcc909ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform in [0, bound); Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// A uniformly random k-subset of {0..n-1}, as a membership mask.
inline std::vector<bool> random_subset(std::size_t n, std::size_t k, CounterRng& rng) {
  std::vector<std::uint32_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> mask(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + rng.below(n - i);
    std::swap(ids[i], ids[j]);
    mask[ids[i]] = true;
  }
  return mask;
}

inline std::string atom_name(std::size_t i) { return "P" + std::to_string(i); }

/// Random formula over atoms P0..P{atoms-1}; every connective and constant
/// can appear. Depth counts edges, so depth 0 is a leaf.
inline Formula random_formula(CounterRng& rng, int depth, std::size_t atoms) {
  if (depth <= 0 || rng.below(4) == 0) {
    switch (rng.below(10)) {
      case 0:
        return Formula::nullary(static_cast<Connective>(static_cast<int>(Connective::Top) + rng.below(4)));
      default:
        return Formula::atom(atom_name(rng.below(atoms)));
    }
  }
  switch (rng.below(8)) {
    case 0:
      return Formula::dual(random_formula(rng, depth - 1, atoms));
    case 1:
      return Formula::bang(random_formula(rng, depth - 1, atoms));
    case 2:
      return Formula::quest(random_formula(rng, depth - 1, atoms));
    default: {
      static constexpr Connective kBinary[] = {Connective::Tensor, Connective::Par, Connective::With, Connective::Plus,
                                               Connective::Lollipop};
      const auto c = kBinary[rng.below(5)];
      auto l = random_formula(rng, depth - 1, atoms);
      return Formula::binary(c, std::move(l), random_formula(rng, depth - 1, atoms));
    }
  }
}

/// Binds P0..P{atoms-1} to strengths uniform in [0,1] and counts uniform in [0,N].
inline Environment random_environment(CounterRng& rng, std::size_t atoms, double universe) {
  Environment env{UniverseConfig(universe)};
  for (std::size_t i = 0; i < atoms; ++i) {
    const double s = rng.uniform01();
    const double n = rng.uniform(0.0, universe);
    env.bind(atom_name(i), TruthValue(s, n));
  }
  return env;
}

}  // namespace ull
