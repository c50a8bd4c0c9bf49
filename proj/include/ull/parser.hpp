#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ull/formula.hpp"

namespace ull {

/// Parse failure. `offset` is the 1-based character position of the
/// offending token; `expected` lists the tokens that would have been accepted.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& detail = {})
      : std::runtime_error(compose(offset, expected, detail)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string compose(std::size_t offset, const std::set<std::string>& expected, const std::string& detail) {
    std::string msg = "syntax error at offset " + std::to_string(offset);
    if (!detail.empty()) msg += ": " + detail;
    if (!expected.empty()) {
      msg += "; expected one of:";
      for (const auto& e : expected) msg += " " + e;
    }
    return msg;
  }

  std::size_t offset_;
  std::set<std::string> expected_;
};

namespace detail {

enum class Tok {
  Ident,
  One,
  Zero,
  Top,
  Bottom,
  LParen,
  RParen,
  Star,
  Bar,
  Amp,
  Plus,
  Lolli,
  Caret,
  Bang,
  Quest,
  End,
  Other,  // anything the formula grammar does not know; ends a prefix parse
};

struct Token {
  Tok kind = Tok::End;
  std::size_t begin = 0;  // 0-based
  std::size_t end = 0;
  std::string_view text;
};

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t pos) : text_(text), pos_(pos) { advance(); }

  Formula formula() { return lolli(); }

  /// Offset of the first unconsumed token.
  std::size_t position() const { return tok_.begin; }
  const Token& lookahead() const { return tok_; }

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& detail = {}) const {
    throw SyntaxError(tok_.begin + 1, std::move(expected), detail);
  }

 private:
  static const std::set<std::string>& primary_starts() {
    static const std::set<std::string> s{"<atom>", "1", "0", "T", "F", "(", "!", "?"};
    return s;
  }

  void advance() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    tok_ = Token{};
    tok_.begin = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      tok_.end = pos_;
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.end = ++pos_;
    };
    switch (c) {
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      case '*':
        return single(Tok::Star);
      case '|':
        // "|-" is the turnstile of the proof format, not a par.
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') break;
        return single(Tok::Bar);
      case '&':
        return single(Tok::Amp);
      case '+':
        return single(Tok::Plus);
      case '^':
        return single(Tok::Caret);
      case '!':
        return single(Tok::Bang);
      case '?':
        return single(Tok::Quest);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'o') {
          tok_.kind = Tok::Lolli;
          pos_ += 2;
          tok_.end = pos_;
          return;
        }
        break;
      default:
        break;
    }
    if (is_digit(c)) {
      std::size_t e = pos_;
      while (e < text_.size() && (is_digit(text_[e]) || is_alpha(text_[e]) || text_[e] == '_')) ++e;
      const auto word = text_.substr(pos_, e - pos_);
      tok_.kind = word == "1" ? Tok::One : word == "0" ? Tok::Zero : Tok::Other;
      tok_.end = e;
      tok_.text = word;
      pos_ = e;
      return;
    }
    if (is_alpha(c)) {
      std::size_t e = pos_;
      while (e < text_.size() && (is_alpha(text_[e]) || is_digit(text_[e]) || text_[e] == '_')) ++e;
      const auto word = text_.substr(pos_, e - pos_);
      tok_.kind = word == "T" ? Tok::Top : word == "F" ? Tok::Bottom : Tok::Ident;
      tok_.end = e;
      tok_.text = word;
      pos_ = e;
      return;
    }
    tok_.kind = Tok::Other;
    tok_.end = pos_ + 1;
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

  Formula lolli() {
    Formula lhs = additive();
    if (tok_.kind == Tok::Lolli) {
      advance();
      return Formula::lollipop(std::move(lhs), lolli());
    }
    return lhs;
  }

  // A chain of one operator only; mixing & with + (or * with |) at one level
  // without parentheses is rejected.
  template <class Operand>
  Formula chain(Tok first, Connective first_c, Tok second, Connective second_c, Operand operand) {
    Formula lhs = operand();
    if (tok_.kind != first && tok_.kind != second) return lhs;
    const Tok op = tok_.kind;
    const Connective c = op == first ? first_c : second_c;
    while (tok_.kind == op) {
      advance();
      lhs = Formula::binary(c, std::move(lhs), operand());
    }
    if (tok_.kind == first || tok_.kind == second) {
      const auto other = std::string(symbol(c == first_c ? second_c : first_c));
      fail({std::string(symbol(c)), "-o", ")", "<end>"},
           "'" + other + "' cannot be mixed with '" + std::string(symbol(c)) + "' without parentheses");
    }
    return lhs;
  }

  Formula additive() {
    return chain(Tok::Amp, Connective::With, Tok::Plus, Connective::Plus, [this] { return multiplicative(); });
  }

  Formula multiplicative() {
    return chain(Tok::Star, Connective::Tensor, Tok::Bar, Connective::Par, [this] { return unary(); });
  }

  Formula unary() {
    if (tok_.kind == Tok::Bang || tok_.kind == Tok::Quest) {
      const Connective c = tok_.kind == Tok::Bang ? Connective::Bang : Connective::Quest;
      advance();
      return Formula::unary(c, unary());
    }
    Formula f = primary();
    while (tok_.kind == Tok::Caret) {
      advance();
      f = Formula::dual(std::move(f));
    }
    return f;
  }

  Formula primary() {
    switch (tok_.kind) {
      case Tok::Ident: {
        std::string name(tok_.text);
        advance();
        return Formula::atom(std::move(name));
      }
      case Tok::One:
        advance();
        return Formula::one();
      case Tok::Zero:
        advance();
        return Formula::zero();
      case Tok::Top:
        advance();
        return Formula::top();
      case Tok::Bottom:
        advance();
        return Formula::bottom();
      case Tok::LParen: {
        advance();
        Formula inner = lolli();
        if (tok_.kind != Tok::RParen) {
          fail({"*", "|", "&", "+", "-o", "^", ")"});
        }
        advance();
        return inner;
      }
      default:
        fail(primary_starts());
    }
  }

  std::string_view text_;
  std::size_t pos_;
  Token tok_;
};

}  // namespace detail

/// Parses the longest formula starting at `pos` (0-based) and leaves `pos`
/// at the first unconsumed token. Used to embed formulas in other formats.
inline Formula parse_prefix(std::string_view text, std::size_t& pos) {
  detail::FormulaParser p(text, pos);
  Formula f = p.formula();
  pos = p.position();
  return f;
}

/// Parses a complete formula; trailing input is a syntax error.
inline Formula parse(std::string_view text) {
  detail::FormulaParser p(text, 0);
  Formula f = p.formula();
  if (p.lookahead().kind != detail::Tok::End) {
    std::set<std::string> expected{"*", "|", "&", "+", "-o", "^", "<end>"};
    p.fail(std::move(expected));
  }
  return f;
}

}  // namespace ull
