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

#ifndef FORMCLASS_REPORT_HPP
#define FORMCLASS_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "formclass/document.hpp"
#include "formclass/pair.hpp"
#include "formclass/polyfield.hpp"
#include "formclass/precontact.hpp"

namespace formclass {

using nlohmann::json;

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"classify-point", "scan",         "precontact", "presymplectize",
                                              "conformal",      "parity-change", "odd-preserve", "hamiltonian",
                                              "constraints",    "involutive",   "lemma62"};
  return names;
}

/// Raised for a missing or inconsistent command-line flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunFlags {
  std::optional<std::string> point;
  std::optional<std::string> form;
  std::optional<std::string> omega;
  std::optional<std::string> function;
  std::optional<std::string> scale;
  std::vector<std::string> fields;
  std::optional<std::size_t> n;
};

// ---------------------------------------------------------------------------
// JSON rendering of library values

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.vectors()) basis.push_back(to_json(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

inline std::string form_to_string(const PolyForm& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : f.terms()) {
    std::string basis;
    for (std::size_t i : idx) basis += (basis.empty() ? "d" : "^d") + names[i];
    std::string coeff = c.to_string(names);
    const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (basis.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = basis;
    } else if (coeff == "-1") {
      term = "-" + basis;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + basis;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

inline std::string form_to_string(const AltForm& f, const std::vector<std::string>& names) {
  return form_to_string(map_coefficients<Polynomial>(f, [&](const Rational& c) {
                          return Polynomial::constant(names.size(), c);
                        }),
                        names);
}

inline json to_json(const PairReport& r) {
  json out{{"class", r.class_value},
           {"omega_rank", r.omega_rank},
           {"parity", to_string(r.parity)},
           {"tau_vanishes", r.tau_vanishes},
           {"characteristic", to_json(r.characteristic)},
           {"extended", to_json(r.extended)}};
  if (r.has_reeb()) {
    out["reeb"] = {{"particular", to_json(r.reeb().particular)}, {"freedom", to_json(r.reeb().freedom)}};
  } else {
    out["liouville"] = {{"particular", to_json(r.liouville().particular)},
                        {"freedom", to_json(r.liouville().freedom)}};
  }
  return out;
}

inline json classes_json(const std::set<std::size_t>& classes) {
  json out = json::array();
  for (auto c : classes) out.push_back(c);
  return out;
}

inline json scan_json(const ScanReport& scan, const std::vector<std::string>& names) {
  json points = json::array();
  for (const auto& [p, r] : scan.results)
    points.push_back({{"point", point_to_json(p, names)},
                      {"class", r.class_value},
                      {"parity", to_string(r.parity)},
                      {"tau_vanishes", r.tau_vanishes}});
  json summary{{"classes", classes_json(scan.classes)},
               {"constant_on_samples", scan.constant_on_samples},
               {"tau_vanishes_somewhere", scan.tau_vanishes_somewhere},
               {"odd_points", scan.odd_points},
               {"even_points", scan.even_points},
               {"sample_count", scan.results.size()},
               {"scope", "sampled points"}};
  return {{"points", points}, {"summary", summary}};
}

inline json field_json(const PolyVectorField& v, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& c : v.components) out.push_back(c.to_string(names));
  return out;
}

inline json rationals_json(const std::vector<Rational>& values) { return to_json(Vector(values)); }

// ---------------------------------------------------------------------------
// Command dispatch

namespace detail {

inline const std::string& need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag --") + flag);
  return *v;
}

inline PolyForm need_form(const WorkspaceDocument& doc, const std::optional<std::string>& name, const char* flag,
                          std::size_t degree) {
  const PolyForm& f = doc.form(need(name, flag));
  if (f.degree() != degree)
    throw UsageError("--" + std::string(flag) + " '" + *name + "' has degree " + std::to_string(f.degree()) +
                     ", expected " + std::to_string(degree));
  return f;
}

/// ω from --omega, or dτ when omitted.
inline PolyForm omega_or_d(const WorkspaceDocument& doc, const RunFlags& flags, const PolyForm& tau) {
  if (flags.omega) return need_form(doc, flags.omega, "omega", 2);
  return exterior_derivative(tau);
}

/// The document's sample domain, or just the --point when given.
inline SampleDomain domain_for(const WorkspaceDocument& doc, const RunFlags& flags) {
  if (!flags.point) return doc.sample_domain();
  SampleDomain d;
  const Vector p = parse_point_spec(*flags.point, doc);
  for (const auto& x : p) d.axes.push_back({x});
  return d;
}

inline std::string fresh_name(const std::vector<std::string>& names, std::string base) {
  auto used = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
  while (used(base)) base += "_";
  return base;
}

inline json run_classify_point(const WorkspaceDocument& doc, const RunFlags& flags) {
  const Vector p = parse_point_spec(need(flags.point, "point"), doc);
  const PolyForm tau = need_form(doc, flags.form, "form", 1);
  const PolyForm omega = omega_or_d(doc, flags, tau);
  const AltForm tp = evaluate(tau, p);
  const AltForm wp = evaluate(omega, p);
  const PairReport report = classify(tp, wp);
  const ClassCriteria c = verify_class_criteria(tp, wp);
  json out = to_json(report);
  out["point"] = point_to_json(p, doc.coordinates);
  out["tau"] = form_to_string(tp, doc.coordinates);
  out["omega"] = form_to_string(wp, doc.coordinates);
  out["criteria"] = {{"criteria_agree", c.criteria_agree},
                     {"lepage", c.lepage},
                     {"intermediate_powers_nonzero", c.intermediate_powers_nonzero},
                     {"prepair_rank_agrees", c.prepair_rank_agrees}};
  out["almost_multisymplectic"] = almost_multisymplectic(tp, wp);
  return out;
}

inline json run_scan(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm tau = need_form(doc, flags.form, "form", 1);
  return scan_json(grid_scan(tau, omega_or_d(doc, flags, tau), domain_for(doc, flags)), doc.coordinates);
}

inline json run_precontact(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm eta = need_form(doc, flags.form, "form", 1);
  const PrecontactReport r = precontact_report(eta, domain_for(doc, flags));
  json out = scan_json(r.scan, doc.coordinates);
  json& s = out["summary"];
  s["class_values"] = classes_json(r.class_values);
  s["nowhere_vanishing_on_samples"] = r.nowhere_vanishing_on_samples;
  s["precontact_on_samples"] = r.precontact_on_samples;
  s["darboux_family"] = to_string(r.family);
  s["wedge_route_agrees"] = r.wedge_route_agrees;
  s["parity"] = r.parity ? json(to_string(*r.parity)) : json(nullptr);
  s["r"] = r.r ? json(*r.r) : json(nullptr);
  if (r.r && r.parity) {
    s["identity_level_consistent"] = r.identity_level_consistent;
    const PolyForm model = darboux_model(*r.parity, *r.r, eta.dim());
    const auto model_names = darboux_coordinate_names(*r.parity, *r.r, eta.dim());
    s["model"] = {{"coordinates", model_names},
                  {"form", form_to_string(model, model_names)},
                  {"equals_input", model_equals(eta, model)}};
  }
  out["form"] = form_to_string(eta, doc.coordinates);
  out["d_form"] = form_to_string(exterior_derivative(eta), doc.coordinates);
  return out;
}

inline json run_presymplectize(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm eta = need_form(doc, flags.form, "form", 1);
  const PresymplectizationReport r = presymplectization_report(eta, domain_for(doc, flags));
  std::vector<std::string> names = doc.coordinates;
  names.push_back(fresh_name(names, "z"));
  json out = scan_json(r.scan, names);
  out["coordinates"] = names;
  out["form"] = form_to_string(r.form, names);
  json& s = out["summary"];
  s["liouville_identity"] = r.liouville_identity;
  s["predicted_classes"] = classes_json(r.predicted_classes);
  s["matches_prediction"] = r.matches_prediction;
  return out;
}

inline json run_conformal(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm tau = need_form(doc, flags.form, "form", 1);
  const PolyForm omega = omega_or_d(doc, flags, tau);
  const ConformalPair cp = conformal_pair(tau, omega, doc.function(need(flags.function, "function")));
  const SampleDomain domain = domain_for(doc, flags);
  json out = scan_json(conformal_scan(cp, domain), doc.coordinates);
  out["reduced_omega"] = form_to_string(cp.reduced_omega(), doc.coordinates);
  out["base_classes"] = classes_json(grid_scan(tau, omega, domain).classes);
  return out;
}

inline json sufficient_json(const PolyForm& tau, const PolyForm& omega, const SampleDomain& domain,
                            const WorkspaceDocument& doc, const RunFlags& flags) {
  std::optional<std::vector<PolyVectorField>> provided;
  if (!flags.fields.empty()) {
    provided.emplace();
    for (const auto& name : flags.fields) provided->push_back(doc.vector_field(name));
  }
  try {
    const SufficientConditionsVerdict v = sufficient_conditions_check(tau, omega, domain, provided);
    json fields = json::array();
    for (const auto& f : v.kernel_fields) fields.push_back(field_json(f, doc.coordinates));
    return {{"available", true},
            {"holds", v.holds},
            {"kernel_involutive", v.kernel_involutive},
            {"bracket_condition", v.bracket_condition},
            {"contraction_condition", v.contraction_condition},
            {"kernel_fields", fields},
            {"liouville_field", field_json(v.liouville, doc.coordinates)}};
  } catch (const std::invalid_argument& e) {
    return {{"available", false}, {"reason", e.what()}};
  }
}

inline json run_parity_change(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm tau = need_form(doc, flags.form, "form", 1);
  const PolyForm omega = omega_or_d(doc, flags, tau);
  const Polynomial& f = doc.function(need(flags.function, "function"));
  const SampleDomain domain = domain_for(doc, flags);
  const ParityChangeVerdict v = parity_change_check(tau, omega, f, domain);
  json points = json::array();
  for (const auto& p : v.points)
    points.push_back({{"point", point_to_json(p.point, doc.coordinates)},
                      {"base_class", p.base_class},
                      {"conformal_class", p.conformal_class},
                      {"liouville_residual", p.liouville_residual.to_string()},
                      {"kernel_residuals", rationals_json(p.kernel_residuals)},
                      {"holds", p.holds}});
  json summary{{"holds", v.holds},
               {"conformal_classes", classes_json(v.conformal.classes)},
               {"sample_count", v.points.size()},
               {"scope", "sampled points"}};
  return {{"points", points},
          {"summary", summary},
          {"reduced_omega", form_to_string(conformal_pair(tau, omega, f).reduced_omega(), doc.coordinates)},
          {"sufficient_conditions", sufficient_json(tau, omega, domain, doc, flags)}};
}

inline json run_odd_preserve(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm tau = need_form(doc, flags.form, "form", 1);
  const PolyForm omega = omega_or_d(doc, flags, tau);
  const OddPreservationVerdict v =
      odd_preservation_check(tau, omega, doc.function(need(flags.function, "function")), domain_for(doc, flags));
  json points = json::array();
  for (const auto& p : v.points)
    points.push_back({{"point", point_to_json(p.point, doc.coordinates)},
                      {"base_class", p.base_class},
                      {"conformal_class", p.conformal_class},
                      {"kernel_residuals", rationals_json(p.kernel_residuals)},
                      {"wedge_identity", p.wedge_identity},
                      {"holds", p.holds}});
  json summary{{"holds", v.holds},
               {"conformal_classes", classes_json(v.conformal.classes)},
               {"sample_count", v.points.size()},
               {"scope", "sampled points"}};
  return {{"points", points}, {"summary", summary}};
}

inline json run_hamiltonian(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm eta = need_form(doc, flags.form, "form", 1);
  const Polynomial& h = doc.function(need(flags.function, "function"));
  const SampleDomain domain = domain_for(doc, flags);
  domain.validate(doc.dim());
  json points = json::array();
  std::size_t consistent = 0;
  bool implication = true;
  bool second_form = true;
  const auto samples = domain.points();
  for (const auto& p : samples) {
    const HamiltonianSolutionSet s = hamiltonian_solutions_at(eta, h, p);
    const NecessaryConditionsReport n = necessary_conditions_at(eta, h, p);
    json entry{{"point", point_to_json(p, doc.coordinates)},
               {"consistent", s.consistent},
               {"second_form_agrees", s.second_form_agrees},
               {"class", n.class_value},
               {"parity", to_string(n.parity)},
               {"kernel_residuals", rationals_json(n.kernel_residuals)},
               {"necessary_conditions_hold", n.all_zero}};
    if (n.liouville_residual) entry["liouville_residual"] = n.liouville_residual->to_string();
    if (s.consistent) {
      entry["particular"] = to_json(s.particular);
      entry["freedom"] = to_json(s.freedom);
      ++consistent;
      implication = implication && n.all_zero;
    }
    second_form = second_form && s.second_form_agrees;
    points.push_back(std::move(entry));
  }
  json summary{{"consistent_points", consistent},
               {"sample_count", samples.size()},
               {"consistency_implies_necessary_conditions", implication},
               {"second_form_agrees", second_form},
               {"scope", "sampled points"}};
  json out{{"points", points}, {"summary", summary}};
  if (flags.scale) {
    const ConformalEquivalenceReport c = conformal_equivalence_check(eta, h, doc.function(*flags.scale), domain);
    out["conformal_equivalence"] = {{"equivalent_everywhere", c.equivalent_everywhere},
                                    {"mismatch_points", c.mismatch_points},
                                    {"mismatch_confirmed", c.mismatch_confirmed}};
  }
  return out;
}

inline json run_constraints(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm omega = need_form(doc, flags.omega, "omega", 2);
  const SampleDomain domain = domain_for(doc, flags);
  const auto found = primary_constraint_scan(omega, doc.function(need(flags.function, "function")), domain);
  json points = json::array();
  for (const auto& p : found) points.push_back(point_to_json(p, doc.coordinates));
  return {{"points", points},
          {"summary", {{"constraint_points", found.size()}, {"sample_count", domain.points().size()},
                       {"scope", "sampled points"}}}};
}

inline json run_involutive(const WorkspaceDocument& doc, const RunFlags& flags) {
  std::vector<PolyVectorField> fields;
  std::string source;
  if (!flags.fields.empty()) {
    for (const auto& name : flags.fields) fields.push_back(doc.vector_field(name));
    source = "fields";
  } else if (flags.omega) {
    auto computed = polynomial_kernel_fields(need_form(doc, flags.omega, "omega", 2));
    if (!computed) throw UsageError("kernel fields of --omega need non-constant pivots; pass --fields instead");
    fields = *computed;
    source = "kernel of " + *flags.omega;
  } else {
    throw UsageError("involutive needs --fields or --omega");
  }
  json listed = json::array();
  for (const auto& f : fields) listed.push_back(field_json(f, doc.coordinates));
  const SampleDomain domain = domain_for(doc, flags);
  const bool involutive = involutive_at(fields, domain);
  return {{"fields", listed},
          {"source", source},
          {"summary", {{"involutive", involutive}, {"sample_count", domain.points().size()},
                       {"scope", "sampled points"}}}};
}

inline json run_lemma62(const WorkspaceDocument& doc, const RunFlags& flags) {
  const PolyForm tau = need_form(doc, flags.form, "form", 1);
  const PolyForm omega = omega_or_d(doc, flags, tau);
  const Polynomial& f = doc.function(need(flags.function, "function"));
  std::vector<std::size_t> ns;
  if (flags.n) {
    if (*flags.n < 1) throw UsageError("--n must be at least 1");
    ns.push_back(*flags.n);
  } else {
    ns = {1, 2, 3};
  }
  json results = json::object();
  bool all = true;
  for (auto n : ns) {
    const bool ok = wedge_power_identity_check(tau, omega, f, n);
    results[std::to_string(n)] = ok;
    all = all && ok;
  }
  return {{"identity_holds", results}, {"summary", {{"holds", all}}}};
}

}  // namespace detail

/// Runs one command; the result carries the command echo and schema version.
inline json run(const std::string& command, const WorkspaceDocument& doc, const RunFlags& flags) {
  json body;
  if (command == "classify-point") {
    body = detail::run_classify_point(doc, flags);
  } else if (command == "scan") {
    body = detail::run_scan(doc, flags);
  } else if (command == "precontact") {
    body = detail::run_precontact(doc, flags);
  } else if (command == "presymplectize") {
    body = detail::run_presymplectize(doc, flags);
  } else if (command == "conformal") {
    body = detail::run_conformal(doc, flags);
  } else if (command == "parity-change") {
    body = detail::run_parity_change(doc, flags);
  } else if (command == "odd-preserve") {
    body = detail::run_odd_preserve(doc, flags);
  } else if (command == "hamiltonian") {
    body = detail::run_hamiltonian(doc, flags);
  } else if (command == "constraints") {
    body = detail::run_constraints(doc, flags);
  } else if (command == "involutive") {
    body = detail::run_involutive(doc, flags);
  } else if (command == "lemma62") {
    body = detail::run_lemma62(doc, flags);
  } else {
    throw UsageError("unknown command '" + command + "'");
  }
  json args = json::object();
  if (flags.form) args["form"] = *flags.form;
  if (flags.omega) args["omega"] = *flags.omega;
  if (flags.function) args["function"] = *flags.function;
  if (flags.scale) args["scale"] = *flags.scale;
  if (flags.point) args["point"] = *flags.point;
  if (flags.n) args["n"] = *flags.n;
  if (!flags.fields.empty()) args["fields"] = flags.fields;
  body["command"] = command;
  body["arguments"] = args;
  body["schema_version"] = kSchemaVersion;
  if (!body.contains("coordinates")) body["coordinates"] = doc.coordinates;
  return body;
}

namespace detail {

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool flat_array(const json& v) {
  for (const auto& x : v)
    if (x.is_object()) return false;
  return true;
}

inline void render(const json& v, const std::string& prefix, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& item : v.items()) render(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), os);
  } else if (v.is_array() && !flat_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) render(v[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (v.is_array()) {
    os << prefix << ": " << v.dump() << "\n";
  } else {
    os << prefix << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace detail

/// Line-per-field text rendering: summary first, then everything else.
inline std::string render_text(const json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "") << "\n";
  if (report.contains("summary")) detail::render(report["summary"], "summary", os);
  for (const auto& item : report.items()) {
    if (item.key() == "summary" || item.key() == "command") continue;
    detail::render(item.value(), item.key(), os);
  }
  return os.str();
}

}  // namespace formclass

#endif  // FORMCLASS_REPORT_HPP
