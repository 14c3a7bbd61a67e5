#pragma once

#include <cctype>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scrollink/base.hpp"
#include "scrollink/chow.hpp"
#include "scrollink/scroll.hpp"

namespace scrollink::expr {

/// Syntax or semantic error in a divisor product expression.  `position()`
/// is the zero-based offset of the offending character in the source text.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

namespace detail {

struct Token {
  enum Kind { Integer, SymH, SymR, Plus, Minus, Star, LParen, RParen, End };
  Kind kind = End;
  Int value = 0;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::End, 0, start};
    char c = text_[pos_];
    switch (c) {
      case 'H': ++pos_; return {Token::SymH, 0, start};
      case 'R': ++pos_; return {Token::SymR, 0, start};
      case '+': ++pos_; return {Token::Plus, 0, start};
      case '-': ++pos_; return {Token::Minus, 0, start};
      case '*': ++pos_; return {Token::Star, 0, start};
      case '(': ++pos_; return {Token::LParen, 0, start};
      case ')': ++pos_; return {Token::RParen, 0, start};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > (Int{1} << 40)) throw parse_error(start, "integer literal too large");
        ++pos_;
      }
      return {Token::Integer, value, start};
    }
    throw parse_error(start, std::string("unexpected character '") + c + "'");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Recursive-descent parser for divisor products.
///
/// Grammar:
///   product := factor ('*' factor)*
///   factor  := '(' linear ')' | term
///   linear  := ['-'] term (('+' | '-') term)*
///   term    := integer? ('H' | 'R') | integer
///
/// Every term must carry an H or R: a bare integer parses lexically but is
/// rejected here with its position, because a constant has no divisor
/// meaning and would make the product non-multilinear.
class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  std::vector<ResolvedClass> parse_product() {
    std::vector<ResolvedClass> factors;
    factors.push_back(parse_factor());
    while (current_.kind == detail::Token::Star) {
      advance();
      factors.push_back(parse_factor());
    }
    if (current_.kind != detail::Token::End) {
      throw parse_error(current_.pos, "expected '*' or end of expression");
    }
    return factors;
  }

private:
  void advance() { current_ = lexer_.next(); }

  ResolvedClass parse_factor() {
    if (current_.kind == detail::Token::LParen) {
      advance();
      ResolvedClass linear = parse_linear();
      if (current_.kind != detail::Token::RParen) {
        throw parse_error(current_.pos, "expected ')'");
      }
      advance();
      return linear;
    }
    ResolvedClass single{0, 0};
    parse_term(1, single);
    return single;
  }

  ResolvedClass parse_linear() {
    ResolvedClass acc{0, 0};
    Int sign = 1;
    if (current_.kind == detail::Token::Minus) {
      sign = -1;
      advance();
    }
    parse_term(sign, acc);
    while (current_.kind == detail::Token::Plus || current_.kind == detail::Token::Minus) {
      sign = current_.kind == detail::Token::Plus ? 1 : -1;
      advance();
      parse_term(sign, acc);
    }
    return acc;
  }

  void parse_term(Int sign, ResolvedClass& acc) {
    std::size_t start = current_.pos;
    Int coefficient = 1;
    bool have_integer = false;
    if (current_.kind == detail::Token::Integer) {
      coefficient = current_.value;
      have_integer = true;
      advance();
    }
    if (current_.kind == detail::Token::SymH) {
      acc.h += sign * coefficient;
      advance();
      return;
    }
    if (current_.kind == detail::Token::SymR) {
      acc.r += sign * coefficient;
      advance();
      return;
    }
    if (have_integer) {
      throw parse_error(start, "constant term: every factor must be degree 1 in {H, R}");
    }
    throw parse_error(current_.pos, "expected a term (optional integer coefficient, then 'H' or 'R')");
  }

  detail::Lexer lexer_;
  detail::Token current_;
};

inline std::vector<ResolvedClass> parse_divisor_product(std::string_view text) {
  return Parser(text).parse_product();
}

/// Parse and evaluate against a scroll.  The factor count must equal dim(X);
/// that check (and the resulting domain error) lives in intersect().
inline Int evaluate(const Scroll& x, std::string_view text) {
  std::vector<ResolvedClass> factors = parse_divisor_product(text);
  return intersect(x, std::span<const ResolvedClass>(factors.data(), factors.size()));
}

}  // namespace scrollink::expr
