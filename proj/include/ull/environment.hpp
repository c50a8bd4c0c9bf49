#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ull/formula.hpp"
#include "ull/truth_value.hpp"

namespace ull {

class EnvFormatError : public std::runtime_error {
 public:
  EnvFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Atom bindings over one universe. Finite counts never exceed its size.
class Environment {
 public:
  explicit Environment(UniverseConfig cfg) : cfg_(cfg) {}

  const UniverseConfig& universe() const { return cfg_; }

  Environment& bind(const std::string& atom, const TruthValue& tv) {
    if (!is_atom_name(atom)) throw std::invalid_argument("invalid atom name '" + atom + "'");
    if (!tv.count().is_infinite() && tv.count().value() > cfg_.size()) {
      throw std::domain_error("count of '" + atom + "' exceeds the universe size");
    }
    bindings_.insert_or_assign(atom, tv);
    return *this;
  }

  std::optional<TruthValue> lookup(const std::string& atom) const {
    if (auto it = bindings_.find(atom); it != bindings_.end()) return it->second;
    return std::nullopt;
  }

  const std::map<std::string, TruthValue>& bindings() const { return bindings_; }

 private:
  UniverseConfig cfg_;
  std::map<std::string, TruthValue> bindings_;
};

namespace detail {

inline std::optional<double> parse_real(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

}  // namespace detail

/// Reads the line-oriented environment format:
///
///     universe 100
///     American 0.5 20
///     Crazy    0.3 10   # comment
///
/// Counts may be "inf".
inline Environment parse_environment(std::istream& in) {
  std::optional<Environment> env;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::vector<std::string> fields;
    for (std::string f; line >> f;) fields.push_back(f);
    if (fields.empty()) continue;

    if (!env) {
      if (fields.size() != 2 || fields[0] != "universe") {
        throw EnvFormatError(line_no, "expected 'universe <N>'");
      }
      auto n = detail::parse_real(fields[1]);
      if (!n || !(*n > 0.0) || std::isinf(*n)) throw EnvFormatError(line_no, "universe size must be positive");
      env.emplace(UniverseConfig(*n));
      continue;
    }

    if (fields.size() != 3) throw EnvFormatError(line_no, "expected '<atom> <strength> <count>'");
    if (!is_atom_name(fields[0])) throw EnvFormatError(line_no, "invalid atom name '" + fields[0] + "'");
    if (env->lookup(fields[0])) throw EnvFormatError(line_no, "atom '" + fields[0] + "' bound twice");
    auto s = detail::parse_real(fields[1]);
    if (!s || !(*s >= 0.0 && *s <= 1.0)) throw EnvFormatError(line_no, "strength must be a number in [0, 1]");
    Count count;
    if (fields[2] == "inf") {
      count = Count::infinite();
    } else {
      auto n = detail::parse_real(fields[2]);
      if (!n || !(*n >= 0.0) || std::isinf(*n)) throw EnvFormatError(line_no, "count must be non-negative or 'inf'");
      count = Count::finite(*n);
    }
    try {
      env->bind(fields[0], TruthValue(*s, count));
    } catch (const std::domain_error& e) {
      throw EnvFormatError(line_no, e.what());
    }
  }
  if (!env) throw EnvFormatError(line_no, "missing 'universe <N>' line");
  return *std::move(env);
}

inline Environment load_environment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open environment file '" + path + "'");
  return parse_environment(in);
}

}  // namespace ull
