#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ajlab/errors.hpp"
#include "ajlab/ratfun.hpp"

namespace ajlab {

/// Recursive-descent parser for the polynomial text format, generic over the value algebra.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ('-' | '+') factor | atom ('^' int)?
///   atom   := integer | identifier | '(' expr ')'
///   int    := ['-' | '+'] digits | '(' ['-' | '+'] digits ')'
///
/// The algebra supplies number(), symbol(), add(), sub(), mul(), div(), neg() and pow(); mul()
/// is applied in source order, so noncommutative algebras parse correctly.
template <class Algebra>
class ExpressionParser {
 public:
  using Value = typename Algebra::Value;

  ExpressionParser(std::string_view text, const Algebra& algebra) : text_(text), alg_(algebra) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept('+')) {
        v = alg_.add(v, term());
      } else if (accept('-')) {
        v = alg_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (accept('*')) {
        v = alg_.mul(v, factor());
      } else if (accept('/')) {
        v = alg_.div(v, factor());
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (accept('-')) return alg_.neg(factor());
    if (accept('+')) return factor();
    Value base = atom();
    if (accept('^')) return alg_.pow(base, exponent());
    return base;
  }

  long exponent() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -e : e;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return alg_.number(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return alg_.symbol(text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

/// Parses the polynomial text format into a rational function.
RationalFunction parse_rational_function(std::string_view text);

/// Parses into a Laurent polynomial; any division must be by a monomial (a Laurent unit).
LaurentMPoly parse_poly(std::string_view text);

nlohmann::json to_json(const LaurentMPoly& p);
LaurentMPoly poly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const nlohmann::json& j);

}  // namespace ajlab
