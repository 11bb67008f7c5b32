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

#ifndef FORMCLASS_RATIONAL_HPP
#define FORMCLASS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace formclass {

/// Exact fraction backed by GMP. Always kept in lowest terms with a
/// positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (no whitespace).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty literal");
    const std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view part, bool allow_sign) {
      if (part.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    if (slash == std::string::npos) {
      if (!valid_int(s, true)) throw std::invalid_argument("Rational: malformed literal '" + s + "'");
      return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s, 10));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw std::invalid_argument("Rational: malformed literal '" + s + "'");
    mpz_class d(den, 10);
    if (d == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    return Rational(mpq_class(mpz_class(num[0] == '+' ? num.substr(1) : num, 10), d));
  }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace formclass

#endif  // FORMCLASS_RATIONAL_HPP
