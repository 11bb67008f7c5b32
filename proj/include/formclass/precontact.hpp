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

#ifndef FORMCLASS_PRECONTACT_HPP
#define FORMCLASS_PRECONTACT_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "formclass/pair.hpp"
#include "formclass/polyfield.hpp"

namespace formclass {

// ---------------------------------------------------------------------------
// Precontact forms

enum class DarbouxFamily { OddModel, EvenModel, NotConstant, NotPrecontact };

inline const char* to_string(DarbouxFamily f) {
  switch (f) {
    case DarbouxFamily::OddModel: return "odd_model";
    case DarbouxFamily::EvenModel: return "even_model";
    case DarbouxFamily::NotConstant: return "not_constant";
    case DarbouxFamily::NotPrecontact: return "not_precontact";
  }
  return "unknown";
}

struct PrecontactReport {
  ScanReport scan;
  bool nowhere_vanishing_on_samples = false;
  std::set<std::size_t> class_values;
  bool constant_on_samples = false;
  bool precontact_on_samples = false;
  std::optional<std::size_t> r;
  std::optional<Parity> parity;
  DarbouxFamily family = DarbouxFamily::NotConstant;
  /// Pointwise wedge criteria matched the kernel computation at every sample
  /// where η does not vanish.
  bool wedge_route_agrees = true;
  /// For a constant sampled class, the polynomial-level identity
  /// ((dη)^{r+1} = 0 for odd, η∧(dη)^{r+1} = 0 for even) holds.
  bool identity_level_consistent = false;
};

inline PrecontactReport precontact_report(const PolyForm& eta, const SampleDomain& domain) {
  if (eta.degree() != 1) throw std::invalid_argument("precontact_report: expected a 1-form");
  const std::size_t m = eta.dim();
  const PolyForm d_eta = exterior_derivative(eta);

  PrecontactReport out;
  out.scan = grid_scan(eta, d_eta, domain);
  out.class_values = out.scan.classes;
  out.constant_on_samples = out.scan.constant_on_samples;
  out.nowhere_vanishing_on_samples = !out.scan.tau_vanishes_somewhere;
  out.precontact_on_samples = out.constant_on_samples && out.nowhere_vanishing_on_samples;

  // Polynomial powers (dη)^k and η∧(dη)^k, evaluated per point below.
  std::vector<PolyForm> powers{PolyForm::scalar(m, Polynomial::constant(m, Rational(1)))};
  for (std::size_t k = 1; k <= m / 2 + 1; ++k) powers.push_back(wedge(d_eta, powers.back()));
  std::vector<PolyForm> eta_powers;
  for (const auto& p : powers) eta_powers.push_back(wedge(eta, p));

  for (const auto& [point, report] : out.scan.results) {
    if (report.tau_vanishes) continue;
    const std::size_t c = report.class_value;
    bool odd_ok = false;
    bool even_ok = false;
    if (c % 2 == 1) {
      const std::size_t s = (c - 1) / 2;
      odd_ok = !evaluate(eta_powers[s], point).is_zero() && evaluate(powers[s + 1], point).is_zero();
    } else if (c >= 2) {
      const std::size_t s = (c - 2) / 2;
      even_ok = evaluate(eta_powers[s + 1], point).is_zero() && !evaluate(powers[s + 1], point).is_zero();
    }
    if (!(odd_ok || even_ok)) out.wedge_route_agrees = false;
  }
  if (!out.wedge_route_agrees) throw std::logic_error("precontact_report: wedge criteria disagree with kernel class");

  if (!out.constant_on_samples) {
    out.family = DarbouxFamily::NotConstant;
  } else if (!out.precontact_on_samples) {
    out.family = DarbouxFamily::NotPrecontact;
  } else {
    const std::size_t c = *out.class_values.begin();
    if (c % 2 == 1) {
      out.r = (c - 1) / 2;
      out.parity = Parity::Odd;
      out.family = DarbouxFamily::OddModel;
      out.identity_level_consistent = powers[*out.r + 1].is_zero();
    } else {
      out.r = (c - 2) / 2;
      out.parity = Parity::Even;
      out.family = DarbouxFamily::EvenModel;
      out.identity_level_consistent = eta_powers[*out.r + 1].is_zero();
    }
  }
  return out;
}

/// Coordinate names of the model chart: q's, p's, then s (odd only), then u's.
inline std::vector<std::string> darboux_coordinate_names(Parity parity, std::size_t r, std::size_t m) {
  const std::size_t pairs = parity == Parity::Odd ? r : r + 1;
  const std::size_t used = 2 * pairs + (parity == Parity::Odd ? 1 : 0);
  if (used > m) throw std::invalid_argument("darboux_model: dimension too small for the requested class");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= pairs; ++i) names.push_back("q" + std::to_string(i));
  for (std::size_t i = 1; i <= pairs; ++i) names.push_back("p" + std::to_string(i));
  if (parity == Parity::Odd) names.emplace_back("s");
  for (std::size_t i = 1; i + used <= m; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

/// ds − Σ p_i dq^i (odd class 2r+1) or Σ_{i ≤ r+1} p_i dq^i (even class 2r+2).
inline PolyForm darboux_model(Parity parity, std::size_t r, std::size_t m) {
  const auto names = darboux_coordinate_names(parity, r, m);
  const std::size_t pairs = parity == Parity::Odd ? r : r + 1;
  PolyForm eta(m, 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    const Polynomial p = Polynomial::variable(m, pairs + i);
    eta.add_term({i}, parity == Parity::Odd ? -p : p);
  }
  if (parity == Parity::Odd) eta.add_term({2 * pairs}, Polynomial::constant(m, Rational(1)));
  return eta;
}

/// Exact equality with a model form; no coordinate search.
inline bool model_equals(const PolyForm& eta, const PolyForm& model) { return eta == model; }

// ---------------------------------------------------------------------------
// Presymplectization

inline PolyForm lift_form(const PolyForm& a, std::size_t new_dim) {
  PolyForm out(new_dim, a.degree());
  for (const auto& [idx, c] : a.terms()) out.add_term(idx, c.lift(new_dim));
  return out;
}

/// z·η on R^{m+1}; z is the appended last coordinate.
inline PolyForm presymplectize(const PolyForm& eta) {
  if (eta.degree() != 1) throw std::invalid_argument("presymplectize: expected a 1-form");
  const std::size_t n = eta.dim() + 1;
  return Polynomial::variable(n, n - 1) * lift_form(eta, n);
}

/// The field z ∂/∂z on the presymplectized chart.
inline PolyVectorField z_euler_field(std::size_t n) {
  PolyVectorField v = PolyVectorField::zero(n);
  v.components[n - 1] = Polynomial::variable(n, n - 1);
  return v;
}

/// ι_{z∂z} d(zη) == zη as a polynomial identity.
inline bool z_liouville_identity(const PolyForm& eta) {
  const PolyForm z_eta = presymplectize(eta);
  return interior(z_euler_field(z_eta.dim()), exterior_derivative(z_eta)) == z_eta;
}

/// Appends a z axis that avoids 0.
inline SampleDomain presymplectic_domain(const SampleDomain& base, std::vector<Rational> z_values = {}) {
  if (z_values.empty()) z_values = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
  for (const auto& z : z_values)
    if (z.is_zero()) throw std::invalid_argument("presymplectic_domain: z samples must be nonzero");
  SampleDomain d = base;
  d.axes.push_back(std::move(z_values));
  for (auto& p : d.extra_points) p.emplace_back(1);
  return d;
}

struct PresymplectizationReport {
  PolyForm form;
  ScanReport scan;
  bool liouville_identity = false;
  /// Classes of η on the base samples, each rounded up to even.
  std::set<std::size_t> predicted_classes;
  bool matches_prediction = false;
};

inline PresymplectizationReport presymplectization_report(const PolyForm& eta, const SampleDomain& base) {
  PresymplectizationReport out;
  out.form = presymplectize(eta);
  out.liouville_identity = z_liouville_identity(eta);
  const ScanReport base_scan = grid_scan(eta, exterior_derivative(eta), base);
  for (std::size_t c : base_scan.classes) out.predicted_classes.insert(c + (c % 2));
  out.scan = grid_scan(out.form, exterior_derivative(out.form), presymplectic_domain(base));
  out.matches_prediction = out.scan.classes == out.predicted_classes;
  return out;
}

// ---------------------------------------------------------------------------
// Conformal changes (e^f τ, e^f(df∧τ + ω)), represented by the reduced pair
// (τ, df∧τ + ω): the nowhere-zero factor e^f does not change kernels.

struct ConformalPair {
  PolyForm base_tau;
  PolyForm base_omega;
  Polynomial factor_exponent;

  [[nodiscard]] PolyForm reduced_omega() const { return wedge(differential(factor_exponent), base_tau) + base_omega; }
};

inline ConformalPair conformal_pair(PolyForm tau, PolyForm omega, Polynomial f) {
  check_poly_pair(tau, omega);
  if (f.num_vars() != tau.dim()) throw std::invalid_argument("conformal_pair: exponent has wrong variable count");
  return ConformalPair{std::move(tau), std::move(omega), std::move(f)};
}

inline ScanReport conformal_scan(const ConformalPair& cp, const SampleDomain& domain) {
  return grid_scan(cp.base_tau, cp.reduced_omega(), domain);
}

/// (df∧τ + ω)^n == n df∧τ∧ω^{n−1} + ω^n and τ∧(df∧τ + ω)^n == τ∧ω^n.
inline bool wedge_power_identity_check(const PolyForm& tau, const PolyForm& omega, const Polynomial& f, std::size_t n) {
  if (n < 1) throw std::invalid_argument("wedge_power_identity_check: n must be >= 1");
  const ConformalPair cp = conformal_pair(tau, omega, f);
  const std::size_t m = tau.dim();
  const PolyForm reduced_power = wedge_power(cp.reduced_omega(), n);
  const PolyForm expected =
      Polynomial::constant(m, Rational(static_cast<long>(n))) *
          wedge(wedge(differential(f), tau), wedge_power(omega, n - 1)) +
      wedge_power(omega, n);
  const bool power_identity = reduced_power == expected;
  const bool tau_identity = wedge(tau, reduced_power) == wedge(tau, wedge_power(omega, n));
  return power_identity && tau_identity;
}

inline Vector gradient_at(const Polynomial& f, const Vector& point) {
  Vector g;
  for (std::size_t i = 0; i < f.num_vars(); ++i) g.push_back(f.derivative(i).evaluate(point));
  return g;
}

struct ParityChangePoint {
  Vector point;
  std::size_t base_class = 0;
  std::size_t conformal_class = 0;
  Rational liouville_residual;            // L_{Δ₀} f + 1
  std::vector<Rational> kernel_residuals;  // L_Γ f over a Ker ω basis
  bool holds = false;
};

struct ParityChangeVerdict {
  bool holds = false;
  std::vector<ParityChangePoint> points;
  ScanReport conformal;
};

/// Tests L_{Δ₀} f = −1 and L_Γ f = 0 (Γ ∈ Ker ω) at every sample of an even
/// pair with τ ≠ 0, and cross-checks against the class of the reduced pair.
inline ParityChangeVerdict parity_change_check(const PolyForm& tau, const PolyForm& omega, const Polynomial& f,
                                               const SampleDomain& domain) {
  const ConformalPair cp = conformal_pair(tau, omega, f);
  const ScanReport base = grid_scan(tau, omega, domain);
  ParityChangeVerdict out;
  out.conformal = conformal_scan(cp, domain);
  out.holds = true;
  for (std::size_t k = 0; k < base.results.size(); ++k) {
    const auto& [point, report] = base.results[k];
    if (report.parity != Parity::Even || report.tau_vanishes)
      throw std::invalid_argument("parity_change_check: base pair is not even with nonzero τ at every sample");
    const Vector grad = gradient_at(f, point);
    ParityChangePoint p;
    p.point = point;
    p.base_class = report.class_value;
    p.conformal_class = out.conformal.results[k].report.class_value;
    p.liouville_residual = dot(grad, report.liouville().particular) + Rational(1);
    p.holds = p.liouville_residual.is_zero();
    for (const auto& gamma : report.liouville().freedom.vectors()) {
      p.kernel_residuals.push_back(dot(grad, gamma));
      if (!p.kernel_residuals.back().is_zero()) p.holds = false;
    }
    const bool conformal_odd = p.conformal_class % 2 == 1;
    if (p.holds != conformal_odd || (p.holds && p.conformal_class + 1 != p.base_class))
      throw std::logic_error("parity_change_check: Lie-derivative test disagrees with conformal class");
    out.holds = out.holds && p.holds;
    out.points.push_back(std::move(p));
  }
  return out;
}

struct OddPreservationPoint {
  Vector point;
  std::size_t base_class = 0;
  std::size_t conformal_class = 0;
  std::vector<Rational> kernel_residuals;  // L_Γ f over a 𝒦 basis
  bool wedge_identity = false;             // (ι_R df) τ∧ω^r == df∧ω^r
  bool holds = false;
};

struct OddPreservationVerdict {
  bool holds = false;
  std::vector<OddPreservationPoint> points;
  ScanReport conformal;
};

inline OddPreservationVerdict odd_preservation_check(const PolyForm& tau, const PolyForm& omega, const Polynomial& f,
                                                     const SampleDomain& domain) {
  const ConformalPair cp = conformal_pair(tau, omega, f);
  const ScanReport base = grid_scan(tau, omega, domain);
  const PolyForm df = differential(f);
  OddPreservationVerdict out;
  out.conformal = conformal_scan(cp, domain);
  out.holds = true;
  for (std::size_t k = 0; k < base.results.size(); ++k) {
    const auto& [point, report] = base.results[k];
    if (report.parity != Parity::Odd) throw std::invalid_argument("odd_preservation_check: base pair is not odd at every sample");
    const AltForm tau_p = evaluate(tau, point);
    const AltForm omega_p = evaluate(omega, point);
    const AltForm df_p = evaluate(df, point);
    const Vector grad = df_p.components();
    OddPreservationPoint p;
    p.point = point;
    p.base_class = report.class_value;
    p.conformal_class = out.conformal.results[k].report.class_value;
    p.holds = true;
    for (const auto& gamma : report.characteristic.vectors()) {
      p.kernel_residuals.push_back(dot(grad, gamma));
      if (!p.kernel_residuals.back().is_zero()) p.holds = false;
    }
    const AltForm omega_r = wedge_power(omega_p, report.omega_rank / 2);
    const Rational r_df = dot(grad, report.reeb().particular);
    p.wedge_identity = (r_df * wedge(tau_p, omega_r)) == wedge(df_p, omega_r);
    if (p.wedge_identity != p.holds)
      throw std::logic_error("odd_preservation_check: wedge identity disagrees with Lie-derivative test");
    if (p.holds != (p.conformal_class == p.base_class))
      throw std::logic_error("odd_preservation_check: verdict disagrees with conformal class");
    out.holds = out.holds && p.holds;
    out.points.push_back(std::move(p));
  }
  return out;
}

struct SufficientConditionsVerdict {
  bool holds = false;
  bool kernel_involutive = false;     // [Γ, Γ'] ∈ Ker ω
  bool bracket_condition = false;     // [Δ₀, Γ] ∈ Ker ω
  bool contraction_condition = false; // ι_Γ ι_Γ' dω = 0
  std::vector<PolyVectorField> kernel_fields;
  PolyVectorField liouville;
};

/// Hypothesis checks for the existence of a parity-changing factor. Does not
/// construct the factor. `kernel_fields`, when given, must span Ker ω at
/// every sample; otherwise they are computed when constant pivots suffice.
inline SufficientConditionsVerdict sufficient_conditions_check(
    const PolyForm& tau, const PolyForm& omega, const SampleDomain& domain,
    std::optional<std::vector<PolyVectorField>> kernel_fields = std::nullopt) {
  const ScanReport base = grid_scan(tau, omega, domain);
  for (const auto& [point, report] : base.results)
    if (report.parity != Parity::Even || report.tau_vanishes)
      throw std::invalid_argument("sufficient_conditions_check: base pair is not even with nonzero τ at every sample");

  if (!kernel_fields) kernel_fields = polynomial_kernel_fields(omega);
  if (!kernel_fields) throw std::invalid_argument("sufficient_conditions_check: spanning fields for Ker ω unavailable");
  auto liouville = polynomial_liouville_field(tau, omega);
  if (!liouville) throw std::invalid_argument("sufficient_conditions_check: no polynomial Liouville field available");

  const std::size_t m = tau.dim();
  for (const auto& [point, report] : base.results) {
    std::vector<Vector> values;
    for (const auto& g : *kernel_fields) values.push_back(g.evaluate(point));
    if (Subspace::span(m, values) != report.liouville().freedom)
      throw std::invalid_argument("sufficient_conditions_check: fields do not span Ker ω at a sample");
  }

  SufficientConditionsVerdict out;
  out.kernel_fields = *kernel_fields;
  out.liouville = *liouville;
  out.kernel_involutive = involutive_at(out.kernel_fields, domain);

  const PolyForm d_omega = exterior_derivative(omega);
  out.bracket_condition = true;
  out.contraction_condition = true;
  for (const auto& gamma : out.kernel_fields) {
    const PolyVectorField bracket = lie_bracket(out.liouville, gamma);
    for (const auto& [point, report] : base.results)
      if (!interior(bracket.evaluate(point), evaluate(omega, point)).is_zero()) out.bracket_condition = false;
    for (const auto& other : out.kernel_fields) {
      const PolyForm contracted = interior(gamma, interior(other, d_omega));
      for (const auto& [point, report] : base.results)
        if (!evaluate(contracted, point).is_zero()) out.contraction_condition = false;
    }
  }
  out.holds = out.kernel_involutive && out.bracket_condition;
  return out;
}

// ---------------------------------------------------------------------------
// Precontact Hamiltonian dynamics

struct HamiltonianSolutionSet {
  Vector point;
  bool consistent = false;
  Vector particular;
  Subspace freedom;
  /// The solution set of ι_X(η∧dη) = −H dη + dH∧η with ι_X η = −H matched.
  bool second_form_agrees = false;

  [[nodiscard]] bool same_set(const HamiltonianSolutionSet& o) const {
    if (consistent != o.consistent) return false;
    if (!consistent) return true;
    return AffineSolution{particular, freedom}.same_set(AffineSolution{o.particular, o.freedom});
  }
};

namespace detail {

/// Appends the linear equations "Σ_i X_i cols[i] == rhs" for forms of a common
/// degree, one row per index set.
inline void append_form_equations(const std::vector<AltForm>& cols, const AltForm& rhs, std::vector<Vector>& rows,
                                  Vector& values) {
  std::set<IndexSet> keys;
  for (const auto& c : cols)
    for (const auto& term : c.terms()) keys.insert(term.first);
  for (const auto& term : rhs.terms()) keys.insert(term.first);
  for (const auto& key : keys) {
    Vector row;
    for (const auto& c : cols) row.push_back(c.coefficient(key));
    rows.push_back(std::move(row));
    values.push_back(rhs.coefficient(key));
  }
}

inline std::optional<AffineSolution> solve_rows(std::size_t m, const std::vector<Vector>& rows, const Vector& values) {
  return solve_affine(Matrix::from_rows(m, rows), values);
}

}  // namespace detail

/// Solves (ι_X dη)∧η = dH∧η together with ι_X η = −H at `point`.
inline HamiltonianSolutionSet hamiltonian_solutions_at(const PolyForm& eta, const Polynomial& h, const Vector& point) {
  if (eta.degree() != 1 || h.num_vars() != eta.dim()) throw std::invalid_argument("hamiltonian_solutions_at: bad input");
  const std::size_t m = eta.dim();
  const AltForm eta_p = evaluate(eta, point);
  const AltForm d_eta_p = evaluate(exterior_derivative(eta), point);
  const AltForm dh_p = evaluate(differential(h), point);
  const Rational h_p = h.evaluate(point);

  std::vector<Vector> rows;
  Vector values;
  std::vector<AltForm> cols;
  for (std::size_t i = 0; i < m; ++i) cols.push_back(wedge(interior(unit_vector(m, i), d_eta_p), eta_p));
  detail::append_form_equations(cols, wedge(dh_p, eta_p), rows, values);
  rows.push_back(eta_p.components());
  values.push_back(-h_p);
  const auto primary = detail::solve_rows(m, rows, values);

  rows.clear();
  values.clear();
  cols.clear();
  const AltForm three = wedge(eta_p, d_eta_p);
  for (std::size_t i = 0; i < m; ++i) cols.push_back(interior(unit_vector(m, i), three));
  detail::append_form_equations(cols, (-h_p) * d_eta_p + wedge(dh_p, eta_p), rows, values);
  rows.push_back(eta_p.components());
  values.push_back(-h_p);
  const auto second = detail::solve_rows(m, rows, values);

  HamiltonianSolutionSet out;
  out.point = point;
  out.consistent = primary.has_value();
  if (primary) {
    out.particular = primary->homogeneous.reduce(primary->particular);
    out.freedom = primary->homogeneous;
  }
  out.second_form_agrees = primary.has_value() == second.has_value() && (!primary || primary->same_set(*second));
  return out;
}

struct NecessaryConditionsReport {
  std::size_t class_value = 0;
  Parity parity = Parity::Even;
  std::vector<Rational> kernel_residuals;       // L_Γ H
  std::optional<Rational> liouville_residual;   // L_{Δ₀} H − H (even class)
  bool all_zero = false;
};

/// Odd class: L_Γ H over 𝒦. Even class: L_{Δ₀}H − H and L_Γ H over Ker dη.
inline NecessaryConditionsReport necessary_conditions_at(const PolyForm& eta, const Polynomial& h, const Vector& point) {
  const PairReport report = classify(evaluate(eta, point), evaluate(exterior_derivative(eta), point));
  const Vector grad = gradient_at(h, point);
  NecessaryConditionsReport out;
  out.class_value = report.class_value;
  out.parity = report.parity;
  if (report.parity == Parity::Odd) {
    for (const auto& gamma : report.characteristic.vectors()) out.kernel_residuals.push_back(dot(grad, gamma));
  } else {
    out.liouville_residual = dot(grad, report.liouville().particular) - h.evaluate(point);
    for (const auto& gamma : report.liouville().freedom.vectors()) out.kernel_residuals.push_back(dot(grad, gamma));
  }
  out.all_zero = !out.liouville_residual || out.liouville_residual->is_zero();
  for (const auto& r : out.kernel_residuals) out.all_zero = out.all_zero && r.is_zero();
  return out;
}

struct ConformalEquivalenceReport {
  bool equivalent_everywhere = false;   // (η, H) and (gη, gH) agree at every sample
  std::size_t mismatch_points = 0;      // samples where H ≠ gH
  bool mismatch_confirmed = false;      // (gη, H) differs at every such consistent sample
};

inline ConformalEquivalenceReport conformal_equivalence_check(const PolyForm& eta, const Polynomial& h,
                                                              const Polynomial& g, const SampleDomain& domain) {
  domain.validate(eta.dim());
  const auto points = domain.points();
  for (const auto& p : points)
    if (g.evaluate(p).is_zero()) throw std::invalid_argument("conformal_equivalence_check: g vanishes at a sample");
  const PolyForm g_eta = g * eta;
  const Polynomial g_h = g * h;
  ConformalEquivalenceReport out;
  out.equivalent_everywhere = true;
  out.mismatch_confirmed = true;
  for (const auto& p : points) {
    const auto base = hamiltonian_solutions_at(eta, h, p);
    const auto scaled = hamiltonian_solutions_at(g_eta, g_h, p);
    if (!base.same_set(scaled)) out.equivalent_everywhere = false;
    const Rational hp = h.evaluate(p);
    if (hp == g_h.evaluate(p)) continue;
    ++out.mismatch_points;
    const auto wrong = hamiltonian_solutions_at(g_eta, h, p);
    if (base.consistent && base.same_set(wrong)) out.mismatch_confirmed = false;
  }
  return out;
}

/// Samples where ι_X ω = dH is solvable, i.e. where (dH, ω) has even class.
inline std::vector<Vector> primary_constraint_scan(const PolyForm& omega, const Polynomial& h,
                                                   const SampleDomain& domain) {
  const PolyForm dh = differential(h);
  const ScanReport scan = grid_scan(dh, omega, domain);
  std::vector<Vector> out;
  for (const auto& [point, report] : scan.results) {
    const bool solvable = solve_liouville(evaluate(dh, point), evaluate(omega, point)).has_value();
    if (solvable != (report.parity == Parity::Even))
      throw std::logic_error("primary_constraint_scan: solvability disagrees with parity");
    if (solvable) out.push_back(point);
  }
  return out;
}

}  // namespace formclass

#endif  // FORMCLASS_PRECONTACT_HPP
