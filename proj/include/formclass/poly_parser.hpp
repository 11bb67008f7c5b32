/*
   Copyright 2026 The formclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FORMCLASS_POLY_PARSER_HPP
#define FORMCLASS_POLY_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "formclass/polynomial.hpp"

namespace formclass {

/// Raised for text outside the polynomial grammar. `column` is 1-based.
class PolynomialSyntaxError : public std::runtime_error {
 public:
  PolynomialSyntaxError(std::size_t column, const std::string& message, std::string expected = {})
      : std::runtime_error("column " + std::to_string(column) + ": " + message +
                           (expected.empty() ? "" : " (expected " + expected + ")")),
        column_(column),
        expected_(std::move(expected)) {}

  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::string expected_;
};

namespace detail {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
// Juxtaposition ("2x") is rejected.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression", "expression");
    Polynomial result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", "operator or end of input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
    throw PolynomialSyntaxError(pos_ + 1, message, expected);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer", "integer");
      const std::string digits = integer_literal();
      if (digits.size() > 6) fail("exponent too large", "integer below 1000000");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input", "number, variable or '('");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string numerator = integer_literal();
      std::string denominator = "1";
      if (accept('/')) {
        skip_space();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("rational literal needs an integer denominator", "integer");
        const std::size_t denominator_pos = pos_;
        denominator = integer_literal();
        if (mpz_class(denominator, 10) == 0) {
          pos_ = denominator_pos;
          fail("zero denominator", "nonzero integer");
        }
      }
      reject_juxtaposition();
      return Polynomial::constant(vars_.size(), Rational(mpq_class(mpz_class(numerator, 10), mpz_class(denominator, 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          reject_juxtaposition();
          return Polynomial::variable(vars_.size(), i);
        }
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'", "declared variable");
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("missing ')'", "')'");
      reject_juxtaposition();
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'", "number, variable or '('");
  }

  // An operand directly followed by another operand is implicit
  // multiplication, which the grammar forbids.
  void reject_juxtaposition() {
    std::size_t look = pos_;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    if (look == text_.size()) return;
    const char c = text_[look];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
      pos_ = look;
      fail("implicit multiplication is not allowed", "'*'");
    }
  }

  std::string integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` as a polynomial in the ordered variables `vars`.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return detail::PolynomialParser(text, vars).parse();
}

}  // namespace formclass

#endif  // FORMCLASS_POLY_PARSER_HPP
