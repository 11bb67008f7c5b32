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

#ifndef FORMCLASS_POLYFIELD_HPP
#define FORMCLASS_POLYFIELD_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "formclass/exterior.hpp"
#include "formclass/pair.hpp"
#include "formclass/polynomial.hpp"

namespace formclass {

/// Differential form on a chart R^m with polynomial coefficients in the m
/// chart coordinates.
using PolyForm = Form<Polynomial>;

/// Vector field on R^m with polynomial components.
struct PolyVectorField {
  std::vector<Polynomial> components;

  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Polynomial> comps) : components(std::move(comps)) {}

  static PolyVectorField zero(std::size_t dim) { return PolyVectorField(std::vector<Polynomial>(dim, Polynomial(dim))); }

  /// The coordinate field ∂/∂x^i.
  static PolyVectorField coordinate(std::size_t dim, std::size_t i) {
    PolyVectorField v = zero(dim);
    v.components.at(i) = Polynomial::constant(dim, Rational(1));
    return v;
  }

  [[nodiscard]] std::size_t dim() const { return components.size(); }

  [[nodiscard]] Vector evaluate(std::span<const Rational> point) const {
    Vector out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.evaluate(point));
    return out;
  }

  friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
    check(a, b);
    PolyVectorField r = a;
    for (std::size_t i = 0; i < a.dim(); ++i) r.components[i] += b.components[i];
    return r;
  }
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
    check(a, b);
    PolyVectorField r = a;
    for (std::size_t i = 0; i < a.dim(); ++i) r.components[i] -= b.components[i];
    return r;
  }
  friend PolyVectorField operator*(const Polynomial& s, const PolyVectorField& a) {
    PolyVectorField r = a;
    for (auto& c : r.components) c = s * c;
    return r;
  }
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) = default;

  static void check(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("PolyVectorField: dimension mismatch");
  }
};

inline PolyForm interior(const PolyVectorField& x, const PolyForm& a) {
  return interior(std::span<const Polynomial>(x.components), a);
}

/// df as a 1-form.
inline PolyForm differential(const Polynomial& f) {
  const std::size_t m = f.num_vars();
  PolyForm out(m, 1);
  for (std::size_t i = 0; i < m; ++i) out.add_term({i}, f.derivative(i));
  return out;
}

/// Constant-coefficient polynomial form with the same coefficients as `a`.
inline PolyForm constant_form(const AltForm& a) {
  return map_coefficients<Polynomial>(a, [&](const Rational& c) { return Polynomial::constant(a.dim(), c); });
}

inline PolyForm scalar_form(const Polynomial& f) { return PolyForm::scalar(f.num_vars(), f); }

inline PolyForm exterior_derivative(const PolyForm& a) {
  const std::size_t m = a.dim();
  PolyForm out(m, a.degree() + 1);
  if (out.degree() > m) return out;
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t j = 0; j < m; ++j) {
      auto [merged, sign] = detail::merge_sign(IndexSet{j}, idx);
      if (sign == 0) continue;
      const Polynomial partial = c.derivative(j);
      if (partial.is_zero()) continue;
      out.add_term(merged, sign > 0 ? partial : -partial);
    }
  }
  return out;
}

/// X(f) = Σ X^i ∂f/∂x^i.
inline Polynomial directional_derivative(const PolyVectorField& x, const Polynomial& f) {
  if (x.dim() != f.num_vars()) throw std::invalid_argument("directional_derivative: dimension mismatch");
  Polynomial out(f.num_vars());
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (!x.components[i].is_zero()) out += x.components[i] * f.derivative(i);
  return out;
}

/// [X, Y]^i = X(Y^i) − Y(X^i).
inline PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  PolyVectorField::check(x, y);
  PolyVectorField out = PolyVectorField::zero(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    out.components[i] = directional_derivative(x, y.components[i]) - directional_derivative(y, x.components[i]);
  return out;
}

/// Cartan's formula L_X a = ι_X da + d ι_X a.
inline PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& a) {
  if (x.dim() != a.dim()) throw std::invalid_argument("lie_derivative: dimension mismatch");
  if (a.degree() == 0) return scalar_form(directional_derivative(x, a.coefficient({})));
  return interior(x, exterior_derivative(a)) + exterior_derivative(interior(x, a));
}

inline AltForm evaluate(const PolyForm& a, std::span<const Rational> point) {
  if (point.size() != a.dim()) throw std::invalid_argument("evaluate: point dimension mismatch");
  return map_coefficients<Rational>(a, [&](const Polynomial& c) { return c.evaluate(point); });
}

inline Vector evaluate_vf(const PolyVectorField& v, std::span<const Rational> point) {
  if (point.size() != v.dim()) throw std::invalid_argument("evaluate_vf: point dimension mismatch");
  return v.evaluate(point);
}

/// Finite grid of sample points standing in for "every point of the chart".
struct SampleDomain {
  std::vector<std::vector<Rational>> axes;  // per-coordinate sample values
  std::vector<Vector> extra_points;

  [[nodiscard]] std::size_t dim() const { return axes.size(); }

  /// Grid points (first coordinate varies slowest) followed by extra points.
  [[nodiscard]] std::vector<Vector> points() const {
    std::vector<Vector> out;
    bool grid_empty = axes.empty();
    for (const auto& axis : axes) grid_empty = grid_empty || axis.empty();
    if (!grid_empty) {
      std::vector<std::size_t> cursor(axes.size(), 0);
      while (true) {
        Vector p(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) p[i] = axes[i][cursor[i]];
        out.push_back(std::move(p));
        std::size_t k = axes.size();
        while (k > 0) {
          --k;
          if (++cursor[k] < axes[k].size()) break;
          cursor[k] = 0;
          if (k == 0) return append_extras(std::move(out));
        }
      }
    }
    return append_extras(std::move(out));
  }

  /// Values {−2, −1, 0, 1, 2} per coordinate, thinned to {−1, 0, 1, 2},
  /// {−1, 0, 1} or {0, 1} until the grid has at most 3125 points.
  /// Coordinates flagged nonzero drop 0.
  static SampleDomain default_for(std::size_t m, const std::vector<bool>& nonzero = {}) {
    static const std::vector<std::vector<long>> choices{{-2, -1, 0, 1, 2}, {-1, 0, 1, 2}, {-1, 0, 1}, {0, 1}};
    std::size_t pick = 0;
    while (pick + 1 < choices.size() && !fits(choices[pick].size(), m)) ++pick;
    SampleDomain d;
    for (std::size_t i = 0; i < m; ++i) d.axes.push_back(default_axis(choices[pick], i < nonzero.size() && nonzero[i]));
    return d;
  }

  static std::vector<Rational> default_axis(const std::vector<long>& values, bool nonzero) {
    std::vector<Rational> axis;
    for (long v : values)
      if (!(nonzero && v == 0)) axis.emplace_back(v);
    return axis;
  }

  void validate(std::size_t m) const {
    if (axes.size() != m) throw std::invalid_argument("SampleDomain: axis count differs from dimension");
    for (const auto& p : extra_points)
      if (p.size() != m) throw std::invalid_argument("SampleDomain: extra point has wrong dimension");
    if (points().empty()) throw std::invalid_argument("SampleDomain: empty domain");
  }

 private:
  static bool fits(std::size_t k, std::size_t m) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
      total *= k;
      if (total > 3125) return false;
    }
    return true;
  }

  std::vector<Vector> append_extras(std::vector<Vector> out) const {
    out.insert(out.end(), extra_points.begin(), extra_points.end());
    return out;
  }
};

struct PointResult {
  Vector point;
  PairReport report;
};

/// Per-point classification over a sample domain. Constancy is only ever
/// claimed for the sampled points.
struct ScanReport {
  std::vector<PointResult> results;
  std::set<std::size_t> classes;
  bool constant_on_samples = false;
  bool tau_vanishes_somewhere = false;
  std::size_t odd_points = 0;
  std::size_t even_points = 0;

  [[nodiscard]] std::optional<std::size_t> constant_class() const {
    if (!constant_on_samples) return std::nullopt;
    return *classes.begin();
  }
};

inline void check_poly_pair(const PolyForm& tau, const PolyForm& omega) {
  if (tau.degree() != 1 || omega.degree() != 2) throw std::invalid_argument("pair: expected a 1-form and a 2-form");
  if (tau.dim() != omega.dim()) throw std::invalid_argument("pair: dimension mismatch");
}

inline ScanReport grid_scan(const PolyForm& tau, const PolyForm& omega, const SampleDomain& domain) {
  check_poly_pair(tau, omega);
  domain.validate(tau.dim());
  ScanReport scan;
  for (auto& p : domain.points()) {
    PairReport report = classify(evaluate(tau, p), evaluate(omega, p));
    scan.classes.insert(report.class_value);
    scan.tau_vanishes_somewhere = scan.tau_vanishes_somewhere || report.tau_vanishes;
    (report.parity == Parity::Odd ? scan.odd_points : scan.even_points) += 1;
    scan.results.push_back({std::move(p), std::move(report)});
  }
  scan.constant_on_samples = scan.classes.size() == 1;
  return scan;
}

/// Every pairwise bracket of `fields` lies in their pointwise span at every
/// sample. Throws when the span dimension varies over the samples.
inline bool involutive_at(const std::vector<PolyVectorField>& fields, const SampleDomain& domain) {
  if (fields.empty()) return true;
  const std::size_t m = fields.front().dim();
  for (const auto& f : fields)
    if (f.dim() != m) throw std::invalid_argument("involutive_at: dimension mismatch");
  domain.validate(m);

  std::vector<PolyVectorField> brackets;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j) brackets.push_back(lie_bracket(fields[i], fields[j]));

  std::optional<std::size_t> rank;
  bool involutive = true;
  for (const auto& p : domain.points()) {
    std::vector<Vector> values;
    for (const auto& f : fields) values.push_back(f.evaluate(p));
    const Subspace span = Subspace::span(m, values);
    if (rank && *rank != span.dim())
      throw std::invalid_argument("involutive_at: fields do not span a constant-dimension distribution");
    rank = span.dim();
    for (const auto& b : brackets)
      if (!span.contains(b.evaluate(p))) involutive = false;
  }
  return involutive;
}

/// Outcome of solving a linear system with polynomial entries using only
/// nonzero constant pivots, so every step is valid at every point.
struct PolynomialSolve {
  enum class Status { Solved, Inconsistent, NeedsNonConstantPivot };
  Status status = Status::Solved;
  PolyVectorField particular;
  std::vector<PolyVectorField> kernel;
};

/// Solves A X = b over the polynomial ring. When Solved, `kernel` spans the
/// pointwise kernel of A at every point and `particular` is a polynomial
/// solution.
inline PolynomialSolve solve_polynomial_system(std::vector<std::vector<Polynomial>> a, std::vector<Polynomial> b,
                                               std::size_t num_vars) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  if (b.size() != rows) throw std::invalid_argument("solve_polynomial_system: rhs length mismatch");
  PolynomialSolve out;
  std::vector<std::size_t> pivot_col;
  std::vector<bool> used_col(cols, false);
  std::size_t lead = 0;
  while (lead < rows) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t r = lead; r < rows && !pivot; ++r)
      for (std::size_t c = 0; c < cols && !pivot; ++c)
        if (!used_col[c] && !a[r][c].is_zero() && a[r][c].is_constant()) pivot = {r, c};
    if (!pivot) break;
    auto [pr, pc] = *pivot;
    std::swap(a[pr], a[lead]);
    std::swap(b[pr], b[lead]);
    const Rational inv = Rational(1) / a[lead][pc].constant_term();
    for (auto& e : a[lead]) e = inv * e;
    b[lead] = inv * b[lead];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][pc].is_zero()) continue;
      const Polynomial factor = a[r][pc];
      for (std::size_t c = 0; c < cols; ++c)
        if (!a[lead][c].is_zero()) a[r][c] -= factor * a[lead][c];
      b[r] -= factor * b[lead];
    }
    used_col[pc] = true;
    pivot_col.push_back(pc);
    ++lead;
  }
  for (std::size_t r = lead; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!a[r][c].is_zero()) {
        out.status = PolynomialSolve::Status::NeedsNonConstantPivot;
        return out;
      }
  for (std::size_t r = lead; r < rows; ++r)
    if (!b[r].is_zero()) {
      out.status = PolynomialSolve::Status::Inconsistent;
      return out;
    }
  out.particular = PolyVectorField::zero(num_vars);
  out.particular.components.resize(cols, Polynomial(num_vars));
  for (std::size_t r = 0; r < lead; ++r) out.particular.components[pivot_col[r]] = b[r];
  for (std::size_t free = 0; free < cols; ++free) {
    if (used_col[free]) continue;
    PolyVectorField v = PolyVectorField::zero(num_vars);
    v.components.resize(cols, Polynomial(num_vars));
    v.components[free] = Polynomial::constant(num_vars, Rational(1));
    for (std::size_t r = 0; r < lead; ++r) v.components[pivot_col[r]] = -a[r][free];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

/// Rows j of Σ_i X^i ω_{ij} as polynomials.
inline std::vector<std::vector<Polynomial>> contraction_rows(const PolyForm& omega) {
  if (omega.degree() != 2) throw std::invalid_argument("contraction_rows: not a 2-form");
  const std::size_t m = omega.dim();
  std::vector<std::vector<Polynomial>> rows(m, std::vector<Polynomial>(m, Polynomial(m)));
  for (const auto& [idx, c] : omega.terms()) {
    // (ι_X ω)_{idx[1]} gets +X^{idx[0]} c, (ι_X ω)_{idx[0]} gets −X^{idx[1]} c.
    rows[idx[1]][idx[0]] += c;
    rows[idx[0]][idx[1]] -= c;
  }
  return rows;
}

/// Polynomial fields spanning Ker ω at every point, when constant pivots suffice.
inline std::optional<std::vector<PolyVectorField>> polynomial_kernel_fields(const PolyForm& omega) {
  const std::size_t m = omega.dim();
  auto solve = solve_polynomial_system(contraction_rows(omega), std::vector<Polynomial>(m, Polynomial(m)), m);
  if (solve.status != PolynomialSolve::Status::Solved) return std::nullopt;
  return solve.kernel;
}

/// A polynomial Liouville field ι_Δ ω = τ, when constant pivots suffice.
inline std::optional<PolyVectorField> polynomial_liouville_field(const PolyForm& tau, const PolyForm& omega) {
  check_poly_pair(tau, omega);
  auto solve = solve_polynomial_system(contraction_rows(omega), tau.components(), tau.dim());
  if (solve.status != PolynomialSolve::Status::Solved) return std::nullopt;
  return solve.particular;
}

}  // namespace formclass

#endif  // FORMCLASS_POLYFIELD_HPP
