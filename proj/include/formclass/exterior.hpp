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

#ifndef FORMCLASS_EXTERIOR_HPP
#define FORMCLASS_EXTERIOR_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "formclass/matrix.hpp"
#include "formclass/rational.hpp"
#include "formclass/subspace.hpp"

namespace formclass {

/// Strictly increasing, 0-based coordinate indices of a basis monomial
/// dx^{i1} ∧ ... ∧ dx^{ip}.
using IndexSet = std::vector<std::size_t>;

/// Ring operations a coefficient type must expose to the form algebra. The
/// ambient dimension is passed so that polynomial coefficients can be built
/// with the right number of variables.
template <class Coeff>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational zero(std::size_t) { return Rational(0); }
  static Rational one(std::size_t) { return Rational(1); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
};

/// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> combinations(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace detail {

/// Concatenates two disjoint sorted index sets, returning the sorted union and
/// the sign of the sorting permutation; sign 0 when they overlap.
inline std::pair<IndexSet, int> merge_sign(const IndexSet& a, const IndexSet& b) {
  IndexSet merged;
  merged.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0, inversions = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += a.size() - i;
      merged.push_back(b[j++]);
    } else {
      return {{}, 0};
    }
  }
  return {std::move(merged), (inversions % 2 == 0) ? 1 : -1};
}

inline bool strictly_increasing(const IndexSet& s, std::size_t dim) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= dim) return false;
    if (k > 0 && s[k - 1] >= s[k]) return false;
  }
  return true;
}

}  // namespace detail

/// Alternating p-form on an m-dimensional space with coefficients in `Coeff`:
/// Rational for a form at a point, Polynomial for a form on a chart.
/// Absent index sets have coefficient zero. A form of degree > m is always
/// the zero form; it appears only as the result of wedge products.
template <class Coeff>
class Form {
 public:
  using Terms = std::map<IndexSet, Coeff>;
  using traits = coeff_traits<Coeff>;

  Form() = default;
  Form(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  static Form scalar(std::size_t dim, Coeff value) {
    Form f(dim, 0);
    f.add_term({}, std::move(value));
    return f;
  }

  /// The coordinate differential dx^i.
  static Form differential(std::size_t dim, std::size_t i) {
    Form f(dim, 1);
    f.add_term({i}, traits::one(dim));
    return f;
  }

  /// 1-form with the given component list.
  static Form covector(std::size_t dim, const std::vector<Coeff>& components) {
    if (components.size() != dim) throw std::invalid_argument("Form::covector: dimension mismatch");
    Form f(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) f.add_term({i}, components[i]);
    return f;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Coeff coefficient(const IndexSet& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? traits::zero(dim_) : it->second;
  }

  /// Adds c to the coefficient of `idx`, which must be strictly increasing.
  void add_term(const IndexSet& idx, const Coeff& c) {
    if (idx.size() != degree_) throw std::invalid_argument("Form::add_term: index count differs from degree");
    if (!detail::strictly_increasing(idx, dim_))
      throw std::invalid_argument("Form::add_term: indices must be strictly increasing and < dim");
    if (traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second = it->second + c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Components of a 1-form.
  [[nodiscard]] std::vector<Coeff> components() const {
    if (degree_ != 1) throw std::invalid_argument("Form::components: not a 1-form");
    std::vector<Coeff> out(dim_, traits::zero(dim_));
    for (const auto& [idx, c] : terms_) out[idx[0]] = c;
    return out;
  }

  Form& operator+=(const Form& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  Form& operator-=(const Form& o) { return *this += -o; }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(const Form& a) {
    Form r(a.dim_, a.degree_);
    for (const auto& [idx, c] : a.terms_) r.terms_.emplace(idx, -c);
    return r;
  }
  friend Form operator*(const Coeff& s, const Form& a) {
    Form r(a.dim_, a.degree_);
    for (const auto& [idx, c] : a.terms_) r.add_term(idx, s * c);
    return r;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Form& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
      throw std::invalid_argument("Form: dimension or degree mismatch");
  }

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  Terms terms_;
};

using AltForm = Form<Rational>;

template <class Coeff>
Form<Coeff> wedge(const Form<Coeff>& a, const Form<Coeff>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  Form<Coeff> out(a.dim(), a.degree() + b.degree());
  if (out.degree() > a.dim()) return out;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      auto [merged, sign] = detail::merge_sign(ia, ib);
      if (sign == 0) continue;
      const Coeff product = ca * cb;
      out.add_term(merged, sign > 0 ? product : -product);
    }
  }
  return out;
}

/// Contraction ι_v a(w2, ..., wp) = a(v, w2, ..., wp).
template <class Coeff>
Form<Coeff> interior(std::span<const Coeff> v, const Form<Coeff>& a) {
  if (v.size() != a.dim()) throw std::invalid_argument("interior: dimension mismatch");
  if (a.degree() == 0) throw std::invalid_argument("interior: contraction of a 0-form");
  Form<Coeff> out(a.dim(), a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Coeff& component = v[idx[k]];
      if (coeff_traits<Coeff>::is_zero(component)) continue;
      IndexSet rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t l = 0; l < idx.size(); ++l)
        if (l != k) rest.push_back(idx[l]);
      const Coeff term = component * c;
      out.add_term(rest, (k % 2 == 0) ? term : -term);
    }
  }
  return out;
}

template <class Coeff>
Form<Coeff> interior(const std::vector<Coeff>& v, const Form<Coeff>& a) {
  return interior(std::span<const Coeff>(v), a);
}

/// w^0 = 1, w^k = w ∧ w^{k-1}.
template <class Coeff>
Form<Coeff> wedge_power(const Form<Coeff>& w, std::size_t k) {
  Form<Coeff> result = Form<Coeff>::scalar(w.dim(), coeff_traits<Coeff>::one(w.dim()));
  for (std::size_t i = 0; i < k; ++i) {
    result = wedge(w, result);
    if (result.is_zero()) {
      // Remaining factors keep it zero; only the degree needs updating.
      return Form<Coeff>(w.dim(), w.degree() * k);
    }
  }
  return result;
}

/// Applies `fn` to every coefficient, e.g. evaluating polynomial
/// coefficients at a point.
template <class To, class From, class Fn>
Form<To> map_coefficients(const Form<From>& a, Fn&& fn) {
  Form<To> out(a.dim(), a.degree());
  for (const auto& [idx, c] : a.terms()) out.add_term(idx, fn(c));
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise linear algebra of forms with rational coefficients.

/// Matrix of v ↦ ι_v a: column i holds the coefficients of ι_{e_i} a over the
/// (p-1)-index sets that occur.
inline Matrix contraction_matrix(const AltForm& a) {
  if (a.degree() == 0) throw std::invalid_argument("contraction_matrix: degree-0 form");
  const std::size_t m = a.dim();
  std::vector<AltForm> columns;
  std::map<IndexSet, std::size_t> row_of;
  columns.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    columns.push_back(interior(unit_vector(m, i), a));
    for (const auto& term : columns.back().terms()) row_of.try_emplace(term.first, 0);
  }
  std::size_t r = 0;
  for (auto& entry : row_of) entry.second = r++;
  Matrix out(row_of.size(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [idx, c] : columns[i].terms()) out(row_of[idx], i) = c;
  return out;
}

/// Ker a = {v : ι_v a = 0}.
inline Subspace form_kernel(const AltForm& a) {
  if (a.degree() == 0) throw std::invalid_argument("form_kernel: degree-0 form");
  return kernel_basis(contraction_matrix(a));
}

/// Rank of a form: codimension of its kernel.
inline std::size_t form_rank(const AltForm& a) { return form_kernel(a).codim(); }

/// Span of ι_{v1} ... ι_{v(p-1)} a over basis tuples, as covectors.
inline Subspace multilinear_image(const AltForm& a) {
  if (a.degree() == 0) throw std::invalid_argument("multilinear_image: degree-0 form");
  const std::size_t m = a.dim();
  std::vector<Vector> generators;
  if (a.degree() > m) return Subspace::zero(m);
  for (const auto& tuple : combinations(m, a.degree() - 1)) {
    AltForm contracted = a;
    for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) contracted = interior(unit_vector(m, *it), contracted);
    if (!contracted.is_zero()) generators.push_back(contracted.components());
  }
  return Subspace::span(m, generators);
}

/// Skew matrix W with W(i, j) = ω(e_i, e_j); (ι_v ω)_j = Σ_i v_i W(i, j).
inline Matrix skew_matrix(const AltForm& w) {
  if (w.degree() != 2) throw std::invalid_argument("skew_matrix: not a 2-form");
  Matrix out(w.dim(), w.dim());
  for (const auto& [idx, c] : w.terms()) {
    out(idx[0], idx[1]) = c;
    out(idx[1], idx[0]) = -c;
  }
  return out;
}

inline std::size_t two_form_rank(const AltForm& w) {
  if (w.degree() != 2) throw std::invalid_argument("two_form_rank: not a 2-form");
  return form_kernel(w).codim();
}

/// Rank 2r from the wedge-power criterion ω^r ≠ 0, ω^{r+1} = 0.
inline std::size_t two_form_rank_by_powers(const AltForm& w) {
  if (w.degree() != 2) throw std::invalid_argument("two_form_rank_by_powers: not a 2-form");
  std::size_t r = 0;
  AltForm power = AltForm::scalar(w.dim(), 1);
  while (true) {
    power = wedge(w, power);
    if (power.is_zero()) return 2 * r;
    ++r;
  }
}

}  // namespace formclass

#endif  // FORMCLASS_EXTERIOR_HPP
