#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "kconj/errors.hpp"
#include "kconj/ring.hpp"

namespace kconj {

namespace detail {

/// Recursive-descent parser for sums of products of atoms:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*' | '∧' | '·' | <juxtaposition>) power)*
///   power  := atom ['^' ['-'] integer]
///   atom   := integer | identifier | '(' expr ')'
///
/// Identifiers are [A-Za-z_][A-Za-z0-9_']*, optionally followed by a
/// bracketed suffix such as `b[y1]`. Traits supplies the value type:
///   Value from_integer(const mpz_class&);
///   Value identifier(const std::string&, std::size_t pos);
///   Value power(const Value&, long exponent, std::size_t pos);
/// and Value must support +, -, * and unary -.
template <class Traits>
class ExpressionParser {
 public:
  using Value = typename Traits::Value;

  ExpressionParser(std::string_view text, const Traits& traits) : text_(text), traits_(traits) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Value expr() {
    skip_ws();
    bool negate = false;
    if (accept("-"))
      negate = true;
    else
      accept("+");
    Value acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept("+"))
        acc = acc + term();
      else if (accept("-"))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Value term() {
    Value acc = power();
    while (true) {
      if (accept("*") || accept("∧") || accept("·")) {
        acc = acc * power();
      } else if (at_atom_start()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Value power() {
    skip_ws();
    std::size_t at = pos_;
    Value base = atom();
    if (accept("^")) {
      skip_ws();
      bool neg = accept("-");
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected an integer exponent", pos_);
      if (pos_ - start > 9) throw ParseError("exponent too large", start);
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      return traits_.power(base, neg ? -e : e, at);
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return traits_.from_integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        unsigned char d = static_cast<unsigned char>(text_[pos_]);
        if (std::isalnum(d) || d == '_' || d == '\'')
          ++pos_;
        else
          break;
      }
      if (pos_ < text_.size() && text_[pos_] == '[') {
        std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw ParseError("unterminated '['", pos_);
        pos_ = close + 1;
      }
      return traits_.identifier(std::string(text_.substr(start, pos_ - start)), start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const Traits& traits_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `3*y1^2*t1^-1 - 2` style text in the given ring.
RingElement parse_ring_element(std::string_view text, const RingModelPtr& ring);

}  // namespace kconj
