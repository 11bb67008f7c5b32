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

#ifndef FORMCLASS_POLYNOMIAL_HPP
#define FORMCLASS_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "formclass/exterior.hpp"
#include "formclass/rational.hpp"

namespace formclass {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, larger monomials first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), 0u);
    const auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Multivariate polynomial with rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(num_vars);
    Exponents e(num_vars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }

  [[nodiscard]] Rational constant_term() const {
    auto it = terms_.find(Exponents(num_vars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] unsigned total_degree() const {
    if (terms_.empty()) return 0;
    const auto& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0u);
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != num_vars_) throw std::invalid_argument("Polynomial::add_term: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.num_vars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.num_vars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial r(a.num_vars_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(num_vars_, Rational(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
  }

  [[nodiscard]] Polynomial derivative(std::size_t var) const {
    if (var >= num_vars_) throw std::out_of_range("Polynomial::derivative: variable out of range");
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      r.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return r;
  }

  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
    Rational sum;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        if (e[i] != 0) term *= formclass::pow(point[i], e[i]);
      sum += term;
    }
    return sum;
  }

  /// Same polynomial viewed in `new_num_vars` >= num_vars() variables; the
  /// extra variables are appended and do not occur.
  [[nodiscard]] Polynomial lift(std::size_t new_num_vars) const {
    if (new_num_vars < num_vars_) throw std::invalid_argument("Polynomial::lift: cannot drop variables");
    Polynomial r(new_num_vars);
    for (const auto& [e, c] : terms_) {
      Exponents le = e;
      le.resize(new_num_vars, 0);
      r.terms_.emplace(std::move(le), c);
    }
    return r;
  }

  /// Canonical text in the parser grammar, terms in descending grlex order.
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() != num_vars_) throw std::invalid_argument("Polynomial::to_string: name count mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c.sign() < 0;
      const Rational magnitude = negative ? -c : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string monomial;
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (e[i] == 0) continue;
        if (!monomial.empty()) monomial += "*";
        monomial += names[i];
        if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
      }
      if (monomial.empty()) {
        out += magnitude.to_string();
      } else if (magnitude.is_one()) {
        out += monomial;
      } else {
        out += magnitude.to_string() + "*" + monomial;
      }
    }
    return out;
  }

  void check_compatible(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

 private:
  std::size_t num_vars_ = 0;
  Terms terms_;
};

template <>
struct coeff_traits<Polynomial> {
  static Polynomial zero(std::size_t dim) { return Polynomial(dim); }
  static Polynomial one(std::size_t dim) { return Polynomial::constant(dim, Rational(1)); }
  static bool is_zero(const Polynomial& c) { return c.is_zero(); }
};

}  // namespace formclass

#endif  // FORMCLASS_POLYNOMIAL_HPP
