#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ull/parser.hpp"
#include "ull/sequent.hpp"

namespace ull {

namespace detail {

/// Reader for the S-expression proof format:
///
///     node  := "(" rule arg* premise* ")"
///     arg   := "[" formula,* "]" | formula-token | concl
///     concl := ("[" formula,* "]")? "|-" "[" formula,* "]"
///
/// Formula lists may separate items with commas or plain whitespace.
/// ";" starts a comment that runs to the end of the line.
class ProofReader {
 public:
  explicit ProofReader(std::string_view text) : text_(text) {}

  ProofNode read() {
    skip();
    ProofNode root = node();
    skip();
    if (pos_ != text_.size()) fail({"<end>"}, "trailing input after the proof");
    return root;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected, const std::string& detail) const {
    throw SyntaxError(pos_ + 1, std::move(expected), detail);
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  std::vector<Formula> list() {
    ++pos_;  // '['
    std::vector<Formula> out;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) fail({"]"}, "unterminated formula list");
      if (text_[pos_] == ']') {
        ++pos_;
        return out;
      }
      out.push_back(parse_prefix(text_, pos_));
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
    }
  }

  ProofNode node() {
    if (pos_ >= text_.size() || text_[pos_] != '(') fail({"("}, "expected a proof node");
    const std::size_t node_start = pos_;
    ++pos_;
    skip();
    const std::size_t name_start = pos_;
    while (pos_ < text_.size() && std::string_view(" \t\r\n()[];").find(text_[pos_]) == std::string_view::npos) ++pos_;
    const auto name = text_.substr(name_start, pos_ - name_start);
    auto rule = rule_from_name(name);
    if (!rule) {
      pos_ = name_start;
      fail({"ax", "cut", "tensor", "par", "with", "plus1", "plus2", "one", "bottom", "top", "promote", "derelict",
            "weaken?", "contract?"},
           "unknown rule '" + std::string(name) + "'");
    }

    ProofNode n;
    n.rule = *rule;
    n.offset = node_start + 1;
    std::vector<std::vector<Formula>> args;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) fail({")"}, "unterminated node for rule '" + std::string(name) + "'");
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        n.premises.push_back(node());
        continue;
      }
      if (!n.premises.empty()) fail({"(", ")"}, "arguments must precede premises");
      if (c == '[') {
        auto items = list();
        skip();
        if (at("|-")) {
          pos_ += 2;
          n.declared = Sequent::two_sided(items, conclusion_list());
        } else {
          args.push_back(std::move(items));
        }
        continue;
      }
      if (at("|-")) {
        pos_ += 2;
        n.declared = Sequent(conclusion_list());
        continue;
      }
      args.push_back({parse_prefix(text_, pos_)});
    }

    const auto rule_str = "rule '" + std::string(name) + "'";
    if (n.premises.size() != rule_arity(n.rule)) {
      pos_ = node_start;
      fail({}, rule_str + " expects " + std::to_string(rule_arity(n.rule)) + " premise(s), got " +
                   std::to_string(n.premises.size()));
    }
    auto expect_args = [&](std::size_t k) {
      if (args.size() != k) {
        pos_ = node_start;
        fail({}, rule_str + " expects " + std::to_string(k) + " argument(s), got " + std::to_string(args.size()));
      }
    };
    switch (n.rule) {
      case Rule::Cut:
      case Rule::TensorR:
        expect_args(2);
        n.split = ContextSplit{std::move(args[0]), std::move(args[1])};
        break;
      case Rule::OneR:
      case Rule::TopR:
        if (args.size() > 1) expect_args(1);
        if (!args.empty()) n.context = std::move(args[0]);
        break;
      case Rule::BottomR:
        expect_args(0);
        break;
      default:
        expect_args(1);
        if (args[0].size() != 1) {
          pos_ = node_start;
          fail({}, rule_str + " expects a single principal formula, got " + std::to_string(args[0].size()));
        }
        n.principal = args[0][0];
        break;
    }
    return n;
  }

  std::vector<Formula> conclusion_list() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '[') fail({"["}, "expected a formula list after '|-'");
    return list();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ProofNode parse_proof(std::string_view text) { return detail::ProofReader(text).read(); }

inline ProofNode load_proof(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open proof file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_proof(ss.str());
}

/// Writes a node back in the surface format.
inline std::string render(const ProofNode& n) {
  auto list = [](const std::vector<Formula>& fs) {
    std::string out = "[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ", ";
      out += render(fs[i]);
    }
    return out + "]";
  };
  std::string out = "(" + std::string(rule_name(n.rule));
  if (n.declared) out += " |- " + list(n.declared->formulas());
  if (n.principal) out += " " + list({*n.principal});
  if (n.split) out += " " + list(n.split->left) + " " + list(n.split->right);
  if (n.rule == Rule::TopR || (n.rule == Rule::OneR && !n.context.empty())) out += " " + list(n.context);
  for (const auto& p : n.premises) out += " " + render(p);
  return out + ")";
}

}  // namespace ull
