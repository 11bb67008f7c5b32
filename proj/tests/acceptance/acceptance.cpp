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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "formclass/document.hpp"
#include "formclass/precontact.hpp"
#include "oracle.hpp"

namespace {

using namespace formclass;

constexpr int kCases = 200;

/// Raised by check() to stop a criterion at its first failure.
struct Failed {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failed{what};
}

WorkspaceDocument fixture(const std::string& name) { return load(std::string(FORMCLASS_FIXTURE_DIR) + "/" + name); }

// ---------------------------------------------------------------------------
// 1. Golden examples

void golden_class_drop() {
  const auto doc = fixture("doublet_class_drop_r3.json");
  const ScanReport scan = grid_scan(doc.form("tau"), doc.form("omega"), doc.sample_domain());
  bool saw_zero = false;
  for (const auto& [p, r] : scan.results) {
    saw_zero = saw_zero || p[2].is_zero();
    check(r.class_value == (p[2].is_zero() ? 2u : 3u), "class at a sample");
  }
  check(saw_zero, "z = 0 sampled");
  check(scan.classes == std::set<std::size_t>{2, 3}, "classes {2, 3}");
}

void golden_constant_class() {
  const auto doc = fixture("doublet_constant_r2.json");
  const ScanReport scan = grid_scan(doc.form("tau"), doc.form("omega"), doc.sample_domain());
  check(scan.constant_class() == std::optional<std::size_t>(2), "constant class 2");
  check(scan.tau_vanishes_somewhere, "x = 0 sampled");
}

void golden_precosymplectic() {
  const auto doc = fixture("precosymplectic_r4.json");
  const PolyForm& tau = doc.form("tau");
  for (const auto& p : doc.sample_domain().points()) {
    const PairReport odd = classify(evaluate(tau, p), evaluate(doc.form("omega1"), p));
    check(odd.class_value == 3 && odd.has_reeb(), "(dt, omega1) class 3");
    const AffineSolution reeb{Vector{0, 0, 0, 1}, Subspace::span(4, {Vector{p[1], 0, 1, 0}})};
    check(reeb.same_set({odd.reeb().particular, odd.reeb().freedom}), "Reeb set");

    const PairReport even = classify(evaluate(tau, p), evaluate(doc.form("omega2"), p));
    check(even.class_value == 2 && !even.has_reeb(), "(dt, omega2) class 2");
    const AffineSolution liouville{Vector{1, 0, 0, 0}, Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 2)})};
    check(liouville.same_set({even.liouville().particular, even.liouville().freedom}), "Liouville set");
  }
}

void golden_nonconstant_precontact() {
  const auto doc = fixture("precontact_nonconstant_r3.json");
  const PrecontactReport r = precontact_report(doc.form("eta"), doc.sample_domain());
  for (const auto& [p, rep] : r.scan.results) check(rep.class_value == (p[0].is_zero() ? 1u : 2u), "class at a sample");
  check(!r.precontact_on_samples, "not precontact");
}

void golden_seven_dimensional() {
  const auto doc = fixture("precontact_even_r7.json");
  const PolyForm& eta = doc.form("eta");
  const PrecontactReport r = precontact_report(eta, doc.sample_domain());
  check(r.constant_on_samples && r.class_values == std::set<std::size_t>{6}, "constant class 6");
  check(r.parity == Parity::Even && r.precontact_on_samples, "even precontact");
  const PolyForm d_eta = exterior_derivative(eta);
  for (const char* name : {"delta_f0", "delta_fx", "delta_fpy"}) {
    const PolyVectorField& delta = doc.vector_field(name);
    for (const auto& p : doc.sample_domain().points())
      check(oracle::interior(delta.evaluate(p), evaluate(d_eta, p)) == evaluate(eta, p), std::string("Liouville ") + name);
  }
}

void golden_conformal_split() {
  const auto doc = fixture("conformal_parity_r4.json");
  const ScanReport scan =
      conformal_scan(conformal_pair(doc.form("tau"), doc.form("omega"), doc.function("f")), doc.sample_domain());
  for (const auto& [p, r] : scan.results) check(r.class_value == (p[3].is_zero() ? 3u : 4u), "class split by t");
  check(scan.classes == std::set<std::size_t>{3, 4}, "classes {3, 4}");
}

void golden_no_solution() {
  const auto doc = fixture("no_solution_r4.json");
  const PolyForm &tau = doc.form("tau"), &omega = doc.form("omega");
  const SampleDomain dom = doc.sample_domain();
  check(grid_scan(tau, omega, dom).constant_class() == std::optional<std::size_t>(2), "class 2");
  check(!parity_change_check(tau, omega, doc.function("f"), dom).holds, "parity change fails");
  check(!sufficient_conditions_check(tau, omega, dom).holds, "sufficient conditions fail");
  const PolyVectorField bracket = lie_bracket(doc.vector_field("gamma_x"), doc.vector_field("gamma_y"));
  for (const auto& p : dom.points()) {
    check(bracket.evaluate(p) == Vector{0, 0, 0, -2}, "bracket is -2 dt");
    check(!oracle::interior(bracket.evaluate(p), evaluate(omega, p)).is_zero(), "bracket escapes Ker omega");
  }
}

void golden_final_example() {
  const auto doc = fixture("parity_change_r3.json");
  const PolyForm& eta = doc.form("eta");
  const PolyForm d_eta = exterior_derivative(eta);
  const SampleDomain dom = doc.sample_domain();
  check(grid_scan(eta, d_eta, dom).constant_class() == std::optional<std::size_t>(2), "class 2");
  const ParityChangeVerdict v = parity_change_check(eta, d_eta, doc.function("f"), dom);
  check(v.holds, "parity change holds");
  check(v.conformal.constant_class() == std::optional<std::size_t>(1), "conformal class 1");
}

// ---------------------------------------------------------------------------
// 2. Property suites (seeds differ from the unit tests)

std::pair<AltForm, AltForm> random_pair(oracle::Gen& gen) {
  const std::size_t m = gen.dim();
  AltForm omega = gen.two_form(m);
  AltForm tau = gen.one_form_for(omega);
  return {tau, omega};
}

void property_rank_parity() {
  oracle::Gen gen(9001);
  for (int i = 0; i < kCases; ++i) {
    const AltForm w = gen.two_form(gen.dim());
    const std::size_t r = two_form_rank(w);
    check(r % 2 == 0, "even rank");
    check(r == oracle::bareiss_rank(skew_matrix(w)) && r == two_form_rank_by_powers(w), "rank routes");
    check(!oracle::wedge_power(w, r / 2).is_zero() && oracle::wedge_power(w, r / 2 + 1).is_zero(), "power criterion");
  }
}

void property_multilinear_image() {
  oracle::Gen gen(9002);
  for (int i = 0; i < kCases; ++i) {
    const std::size_t m = gen.dim();
    const AltForm a = gen.form(m, static_cast<std::size_t>(gen.integer(1, 3)));
    const Subspace k = form_kernel(a);
    for (const auto& v : k.vectors()) check(oracle::interior(v, a).is_zero(), "kernel vector");
    check(multilinear_image(a) == annihilator(k), "image == annihilator of kernel");
  }
}

void property_parity_theorem() {
  oracle::Gen gen(9003);
  for (int i = 0; i < kCases; ++i) {
    const auto [tau, omega] = random_pair(gen);
    const bool odd = class_of_pair(tau, omega) % 2 == 1;
    const bool reeb = solve_reeb(tau, omega).has_value(), liouville = solve_liouville(tau, omega).has_value();
    check(reeb == odd && liouville == !odd && !(reeb && liouville), "witness matches parity");
  }
}

void property_characteristic_tensor() {
  oracle::Gen gen(9004);
  for (int i = 0; i < kCases; ++i) {
    const auto [tau, omega] = random_pair(gen);
    const Matrix b = characteristic_tensor(tau, omega);
    check(oracle::bareiss_rank(b) == class_of_pair(tau, omega), "rank B == class");
    check(kernel_basis(b) == characteristic_space(tau, omega), "Ker B == K");
  }
}

void property_grassmann() {
  oracle::Gen gen(9005);
  for (int i = 0; i < kCases; ++i) {
    const auto [tau, omega] = random_pair(gen);
    check(class_by_grassmann(tau, omega) == characteristic_space(tau, omega).codim(), "Grassmann route");
  }
}

void property_three_form_kernel() {
  oracle::Gen gen(9006);
  for (int checked = 0; checked < kCases;) {
    const auto [tau, omega] = random_pair(gen);
    if (tau.is_zero() || class_of_pair(tau, omega) < 3) continue;
    ++checked;
    check(kernel_of_three_form(tau, omega) == extended_characteristic_space(tau, omega), "Ker(tau^omega) == X");
  }
}

void property_lemma62() {
  oracle::Gen gen(9007);
  for (int checked = 0; checked < kCases;) {
    const std::size_t m = gen.dim();
    const PolyForm tau = gen.poly_form(m, 1, 1, 0.5), omega = gen.poly_form(m, 2, 1, 0.4);
    const Polynomial f = gen.polynomial(m, 2, 3);
    if (wedge(differential(f), tau).is_zero()) continue;
    ++checked;
    for (std::size_t n = 1; n <= 3; ++n) check(wedge_power_identity_check(tau, omega, f, n), "identity");
  }
}

void property_oracle_equivalence() {
  oracle::Gen gen(9008);
  for (int i = 0; i < kCases; ++i) {
    const std::size_t m = gen.dim();
    const AltForm a = gen.form(m, static_cast<std::size_t>(gen.integer(1, 3)));
    const AltForm b = gen.form(m, static_cast<std::size_t>(gen.integer(0, 2)));
    const AltForm w = gen.two_form(m);
    const Vector v = gen.vector(m);
    check(wedge(a, b) == oracle::wedge(a, b), "wedge");
    check(interior(v, a) == oracle::interior(v, a), "interior");
    const auto k = static_cast<std::size_t>(gen.integer(0, 3));
    check(wedge_power(w, k) == oracle::wedge_power(w, k), "wedge_power");
  }
}

void property_d_identities() {
  oracle::Gen gen(9009);
  for (int checked = 0; checked < kCases;) {
    const std::size_t m = gen.dim(2, 5);
    const auto p = static_cast<std::size_t>(gen.integer(0, 2)), q = static_cast<std::size_t>(gen.integer(0, 2));
    const PolyForm a = gen.poly_form(m, p, 3, 0.8), b = gen.poly_form(m, q, 2, 0.8);
    const PolyForm da = exterior_derivative(a);
    if (da.is_zero() || exterior_derivative(wedge(a, b)).is_zero()) continue;
    ++checked;
    check(da == oracle::exterior_derivative(a), "d vs oracle");
    check(exterior_derivative(da).is_zero(), "dd = 0");
    const PolyForm second = wedge(a, exterior_derivative(b));
    check(exterior_derivative(wedge(a, b)) == wedge(da, b) + (p % 2 == 0 ? second : -second), "anti-derivation");
  }
}

// ---------------------------------------------------------------------------
// 3. Hamiltonian suite

void hamiltonian_suite() {
  const auto contact = fixture("contact_r3.json");
  const PolyForm& eta = contact.form("eta");
  for (const char* name : {"H", "H_mixed", "f", "zero"}) {
    const Polynomial& h = contact.function(name);
    for (const auto& p : contact.sample_domain().points()) {
      // Classical contact field for ds - p dq, solved independently.
      const Rational hq = h.derivative(0).evaluate(p), hp = h.derivative(1).evaluate(p), hs = h.derivative(2).evaluate(p);
      const Vector classical{hp, -(hq + p[1] * hs), p[1] * hp - h.evaluate(p)};
      const HamiltonianSolutionSet s = hamiltonian_solutions_at(eta, h, p);
      check(s.consistent && s.freedom.is_zero() && s.particular == classical, std::string("contact field for ") + name);
    }
  }

  const auto odd = fixture("odd_precontact_r4.json");
  const PolyVectorField& gamma = odd.vector_field("gamma");
  const Polynomial& h = odd.function("H");
  const Polynomial residual = directional_derivative(gamma, h);
  check(!residual.is_zero(), "L_Gamma H is not identically zero");
  for (const auto& p : odd.sample_domain().points())
    check(hamiltonian_solutions_at(odd.form("eta"), h, p).consistent == residual.evaluate(p).is_zero(),
          "consistency exactly where the residual vanishes");

  const ConformalEquivalenceReport c =
      conformal_equivalence_check(eta, contact.function("H"), contact.function("g"), contact.sample_domain());
  check(c.equivalent_everywhere, "(g eta, g H) equivalent");
  check(c.mismatch_points > 0 && c.mismatch_confirmed, "(g eta, H) differs");
}

// ---------------------------------------------------------------------------
// 4. Presymplectization

void presymplectization() {
  const auto contact = fixture("contact_r3.json");
  const PolyForm z_eta = presymplectize(contact.form("eta"));
  const ScanReport scan =
      grid_scan(z_eta, exterior_derivative(z_eta), presymplectic_domain(contact.sample_domain()));
  check(scan.constant_class() == std::optional<std::size_t>(4), "constant class 4");
  check(z_liouville_identity(contact.form("eta")), "z dz Liouville identity");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"1a class drops to 2 on z=0", golden_class_drop},
      {"1b constant class 2 with vanishing tau", golden_constant_class},
      {"1c precosymplectic Reeb and Liouville sets", golden_precosymplectic},
      {"1d non-constant precontact class", golden_nonconstant_precontact},
      {"1e seven-dimensional even precontact", golden_seven_dimensional},
      {"1f conformal classes split by t", golden_conformal_split},
      {"1g parity change without solution", golden_no_solution},
      {"1h parity change to class 1", golden_final_example},
      {"2a rank parity and wedge powers", property_rank_parity},
      {"2b multilinear image", property_multilinear_image},
      {"2c parity of Reeb and Liouville", property_parity_theorem},
      {"2d characteristic tensor", property_characteristic_tensor},
      {"2e Grassmann routes", property_grassmann},
      {"2f kernel of the extended 3-form", property_three_form_kernel},
      {"2g conformal wedge-power identity", property_lemma62},
      {"2h oracle equivalence", property_oracle_equivalence},
      {"2i exterior derivative identities", property_d_identities},
      {"3 Hamiltonian suite", hamiltonian_suite},
      {"4 presymplectization", presymplectization},
  };
  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    std::string detail;
    try {
      fn();
    } catch (const Failed& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "PASS " << label << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << label << ": " << detail << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
