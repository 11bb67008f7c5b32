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

#ifndef FORMCLASS_PAIR_HPP
#define FORMCLASS_PAIR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "formclass/exterior.hpp"
#include "formclass/subspace.hpp"

// Pointwise analysis of a pair (τ, ω) of a 1-form and a 2-form at one point:
// class, parity, Reeb / Liouville vectors and the associated subspaces.

namespace formclass {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

inline Parity parity_of(std::size_t n) { return n % 2 == 1 ? Parity::Odd : Parity::Even; }

/// Solutions of ι_R τ = 1, ι_R ω = 0: particular + freedom (= 𝒦).
struct ReebSolutions {
  Vector particular;
  Subspace freedom;
};

/// Solutions of ι_Δ ω = τ: particular + freedom (= Ker ω).
struct LiouvilleSolutions {
  Vector particular;
  Subspace freedom;
};

struct PairReport {
  std::size_t class_value = 0;
  std::size_t omega_rank = 0;
  Parity parity = Parity::Even;
  Subspace characteristic;
  Subspace extended;
  bool tau_vanishes = false;
  std::variant<ReebSolutions, LiouvilleSolutions> witness;

  [[nodiscard]] bool has_reeb() const { return std::holds_alternative<ReebSolutions>(witness); }
  [[nodiscard]] const ReebSolutions& reeb() const { return std::get<ReebSolutions>(witness); }
  [[nodiscard]] const LiouvilleSolutions& liouville() const { return std::get<LiouvilleSolutions>(witness); }
};

inline void check_pair(const AltForm& tau, const AltForm& omega) {
  if (tau.degree() != 1) throw std::invalid_argument("pair: first form must have degree 1");
  if (omega.degree() != 2) throw std::invalid_argument("pair: second form must have degree 2");
  if (tau.dim() != omega.dim()) throw std::invalid_argument("pair: dimension mismatch");
}

inline Vector covector_of(const AltForm& one_form) { return one_form.components(); }

/// 𝒦 = Ker τ ∩ Ker ω.
inline Subspace characteristic_space(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  return subspace_intersect(form_kernel(tau), form_kernel(omega));
}

/// rk τ + rk ω − dim((Ker τ)° ∩ (Ker ω)°).
inline std::size_t class_by_grassmann(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  const Subspace ker_tau = form_kernel(tau);
  const Subspace ker_omega = form_kernel(omega);
  const Subspace common = subspace_intersect(annihilator(ker_tau), annihilator(ker_omega));
  return ker_tau.codim() + ker_omega.codim() - common.dim();
}

/// Codimension of the characteristic space, checked against the Grassmann route.
inline std::size_t class_of_pair(const AltForm& tau, const AltForm& omega) {
  const std::size_t by_kernel = characteristic_space(tau, omega).codim();
  if (by_kernel != class_by_grassmann(tau, omega))
    throw std::logic_error("class_of_pair: kernel and Grassmann routes disagree");
  return by_kernel;
}

/// Matrix rows j of Σ_i X_i ω(e_i, e_j), i.e. the transpose of the skew matrix.
inline Matrix contraction_rows(const AltForm& omega) { return skew_matrix(omega).transpose(); }

/// ι_R τ = 1, ι_R ω = 0 stacked into one system.
inline std::optional<AffineSolution> solve_reeb(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  const std::size_t m = tau.dim();
  const Vector t = covector_of(tau);
  const Matrix rows = contraction_rows(omega);
  Matrix system(m + 1, m);
  Vector rhs(m + 1);
  for (std::size_t j = 0; j < m; ++j) system(0, j) = t[j];
  rhs[0] = 1;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < m; ++j) system(r + 1, j) = rows(r, j);
  return solve_affine(system, rhs);
}

/// ι_Δ ω = τ.
inline std::optional<AffineSolution> solve_liouville(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  return solve_affine(contraction_rows(omega), covector_of(tau));
}

/// {v ∈ Ker τ : ι_v ω = a τ for some a}; the scalar a is an extra unknown.
inline Subspace extended_characteristic_space(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  const std::size_t m = tau.dim();
  const Vector t = covector_of(tau);
  const Matrix rows = contraction_rows(omega);
  Matrix system(m + 1, m + 1);
  for (std::size_t j = 0; j < m; ++j) system(0, j) = t[j];
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < m; ++j) system(r + 1, j) = rows(r, j);
    system(r + 1, m) = -t[r];
  }
  std::vector<Vector> projected;
  for (const auto& v : kernel_basis(system).vectors()) projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
  return Subspace::span(m, projected);
}

/// Full pointwise classification. Exactly one of the Reeb / Liouville
/// systems is solvable; which one must match the parity of the class.
inline PairReport classify(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  PairReport report;
  report.characteristic = characteristic_space(tau, omega);
  report.class_value = class_of_pair(tau, omega);
  report.omega_rank = two_form_rank(omega);
  report.parity = parity_of(report.class_value);
  report.tau_vanishes = tau.is_zero();
  report.extended = extended_characteristic_space(tau, omega);

  auto reeb = solve_reeb(tau, omega);
  auto liouville = solve_liouville(tau, omega);
  if (reeb && liouville) throw std::logic_error("classify: Reeb and Liouville vectors coexist");
  if (report.parity == Parity::Odd) {
    if (!reeb) throw std::logic_error("classify: odd class without a Reeb vector");
    // Representatives are reduced modulo the freedom so they do not depend on
    // which columns happened to be free.
    report.witness = ReebSolutions{reeb->homogeneous.reduce(reeb->particular), std::move(reeb->homogeneous)};
  } else {
    if (!liouville) throw std::logic_error("classify: even class without a Liouville vector");
    report.witness =
        LiouvilleSolutions{liouville->homogeneous.reduce(liouville->particular), std::move(liouville->homogeneous)};
  }
  if (report.class_value != report.omega_rank && report.class_value != report.omega_rank + 1)
    throw std::logic_error("classify: class outside {2r, 2r+1}");
  return report;
}

/// B(e_i, e_j) = τ_i τ_j + ω(e_i, e_j).
inline Matrix characteristic_tensor(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  const Vector t = covector_of(tau);
  Matrix b = skew_matrix(omega);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) b(i, j) += t[i] * t[j];
  return b;
}

/// Solutions of B̂(X) = (ι_X τ) τ + ι_X ω = τ. Pointwise this system is
/// always consistent; failure indicates a bug.
inline AffineSolution solve_B_preimage_of_tau(const AltForm& tau, const AltForm& omega) {
  const Matrix b = characteristic_tensor(tau, omega);
  auto solution = solve_affine(b.transpose(), covector_of(tau));
  if (!solution) throw std::logic_error("solve_B_preimage_of_tau: inconsistent system");
  return *solution;
}

struct KerOmegaDecomposition {
  Subspace ker_omega;
  Subspace characteristic;
  Parity parity = Parity::Even;
  std::optional<Vector> reeb_particular;
  bool holds = false;
};

/// Odd class: Ker ω = 𝒦 ⊕ ⟨R₀⟩. Even class: Ker ω = 𝒦.
inline KerOmegaDecomposition ker_omega_decomposition(const AltForm& tau, const AltForm& omega) {
  const PairReport report = classify(tau, omega);
  KerOmegaDecomposition out;
  out.ker_omega = form_kernel(omega);
  out.characteristic = report.characteristic;
  out.parity = report.parity;
  if (report.parity == Parity::Odd) {
    const Vector& r0 = report.reeb().particular;
    out.reeb_particular = r0;
    const Subspace with_reeb = subspace_sum(report.characteristic, Subspace::span(tau.dim(), {r0}));
    out.holds = with_reeb == out.ker_omega && with_reeb.dim() == report.characteristic.dim() + 1;
  } else {
    out.holds = out.ker_omega == report.characteristic;
  }
  return out;
}

inline AltForm extended_three_form(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  return wedge(tau, omega);
}

inline Subspace kernel_of_three_form(const AltForm& tau, const AltForm& omega) {
  return form_kernel(extended_three_form(tau, omega));
}

/// τ ∧ ω has injective contraction map: τ ≠ 0 and 𝒳 = 0.
inline bool almost_multisymplectic(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  return !tau.is_zero() && extended_characteristic_space(tau, omega).is_zero();
}

/// Tangent space splits as Ker τ ⊕ Ker ω.
inline bool tangent_direct_sum(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  const Subspace kt = form_kernel(tau);
  const Subspace kw = form_kernel(omega);
  return kt.dim() + kw.dim() == tau.dim() && subspace_intersect(kt, kw).is_zero();
}

struct ClassCriteria {
  std::size_t class_value = 0;
  std::size_t r = 0;  // rank ω = 2r
  bool tau_nonzero = false;
  bool omega_r_nonzero = false;
  bool omega_r1_zero = false;
  bool tau_omega_r_nonzero = false;
  bool tau_omega_r1_zero = false;
  bool odd_criteria = false;   // ω^{r+1} = 0, τ∧ω^r ≠ 0
  bool even_criteria = false;  // ω^r ≠ 0, ω^{r+1} = 0, τ∧ω^r = 0
  bool criteria_agree = false;
  bool lepage = false;
  bool intermediate_powers_nonzero = false;
  bool prepair_rank_agrees = false;
};

/// Wedge-power characterisations of the class, compared against the
/// kernel computation.
inline ClassCriteria verify_class_criteria(const AltForm& tau, const AltForm& omega) {
  check_pair(tau, omega);
  ClassCriteria c;
  c.class_value = class_of_pair(tau, omega);
  c.r = two_form_rank(omega) / 2;
  c.tau_nonzero = !tau.is_zero();

  const std::size_t m = tau.dim();
  std::vector<AltForm> powers{AltForm::scalar(m, 1)};
  for (std::size_t k = 1; k <= c.r + 2; ++k) powers.push_back(wedge(omega, powers.back()));
  auto tau_power = [&](std::size_t k) { return wedge(tau, powers[k]); };

  c.omega_r_nonzero = !powers[c.r].is_zero();
  c.omega_r1_zero = powers[c.r + 1].is_zero();
  c.tau_omega_r_nonzero = !tau_power(c.r).is_zero();
  c.tau_omega_r1_zero = tau_power(c.r + 1).is_zero();
  c.odd_criteria = c.omega_r1_zero && c.tau_omega_r_nonzero;
  c.even_criteria = c.omega_r_nonzero && c.omega_r1_zero && !c.tau_omega_r_nonzero;
  c.criteria_agree = (c.odd_criteria == (c.class_value == 2 * c.r + 1)) &&
                     (c.even_criteria == (c.class_value == 2 * c.r));

  // Lepage: τ ≠ 0, ω^k ≠ 0, τ∧ω^k = 0 force ω^{k+1} = 0, for every k.
  c.lepage = true;
  for (std::size_t k = 0; k <= c.r + 1; ++k)
    if (c.tau_nonzero && !powers[k].is_zero() && tau_power(k).is_zero() && !powers[k + 1].is_zero())
      c.lepage = false;

  // Even class 2r with τ ≠ 0: τ∧ω^i ≠ 0 for 1 ≤ i ≤ r−1.
  c.intermediate_powers_nonzero = true;
  if (c.tau_nonzero && c.class_value % 2 == 0)
    for (std::size_t i = 1; i + 1 <= c.r; ++i)
      if (tau_power(i).is_zero()) c.intermediate_powers_nonzero = false;

  // τ ≠ 0 with class 2s+1 or 2s+2: τ∧ω^s ≠ 0, τ∧ω^{s+1} = 0, and ω^{s+1} = 0 iff odd.
  c.prepair_rank_agrees = true;
  if (c.tau_nonzero) {
    const std::size_t s = (c.class_value - 1) / 2;
    const bool shape = !tau_power(s).is_zero() && tau_power(s + 1).is_zero();
    const bool parity = powers[s + 1].is_zero() == (c.class_value % 2 == 1);
    c.prepair_rank_agrees = shape && parity;
  }
  return c;
}

}  // namespace formclass

#endif  // FORMCLASS_PAIR_HPP
