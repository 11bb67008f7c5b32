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

#ifndef FORMCLASS_DOCUMENT_HPP
#define FORMCLASS_DOCUMENT_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "formclass/poly_parser.hpp"
#include "formclass/polyfield.hpp"

namespace formclass {

inline constexpr const char* kSchemaVersion = "1";

/// Input problem in a workspace document; `path` names the offending field,
/// e.g. "forms.omega.terms[2].coeff".
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string path, const std::string& message)
      : std::runtime_error((path.empty() ? std::string() : path + ": ") + message), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct DomainSpec {
  std::map<std::string, std::vector<Rational>> values;
  std::set<std::string> nonzero;
  std::vector<Vector> extra_points;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

struct WorkspaceDocument {
  std::vector<std::string> coordinates;
  std::map<std::string, PolyForm> forms;
  std::map<std::string, PolyVectorField> vector_fields;
  std::map<std::string, Polynomial> functions;
  std::optional<DomainSpec> domain;

  [[nodiscard]] std::size_t dim() const { return coordinates.size(); }

  [[nodiscard]] std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < coordinates.size(); ++i)
      if (coordinates[i] == name) return i;
    throw DocumentError("", "undeclared coordinate '" + name + "'");
  }

  [[nodiscard]] const PolyForm& form(const std::string& name) const {
    auto it = forms.find(name);
    if (it == forms.end()) throw DocumentError("", "undeclared form '" + name + "'");
    return it->second;
  }
  [[nodiscard]] const Polynomial& function(const std::string& name) const {
    auto it = functions.find(name);
    if (it == functions.end()) throw DocumentError("", "undeclared function '" + name + "'");
    return it->second;
  }
  [[nodiscard]] const PolyVectorField& vector_field(const std::string& name) const {
    auto it = vector_fields.find(name);
    if (it == vector_fields.end()) throw DocumentError("", "undeclared vector field '" + name + "'");
    return it->second;
  }

  /// Declared sample values; coordinates without values get the default axis.
  [[nodiscard]] SampleDomain sample_domain() const {
    std::vector<bool> nonzero(dim(), false);
    if (domain)
      for (const auto& name : domain->nonzero) nonzero[index_of(name)] = true;
    SampleDomain d = SampleDomain::default_for(dim(), nonzero);
    if (domain) {
      for (std::size_t i = 0; i < dim(); ++i) {
        auto it = domain->values.find(coordinates[i]);
        if (it != domain->values.end()) d.axes[i] = it->second;
      }
      d.extra_points = domain->extra_points;
    }
    return d;
  }

  friend bool operator==(const WorkspaceDocument&, const WorkspaceDocument&) = default;
};

namespace detail {

using nlohmann::json;

inline std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(at(path, key), "missing field");
  return *it;
}

inline std::string require_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw DocumentError(path, "expected a string");
  return v.get<std::string>();
}

inline void expect(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw DocumentError(path, message);
}

inline void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) throw DocumentError(at(path, item.key()), "unknown field");
}

inline Polynomial parse_field(const json& v, const std::vector<std::string>& vars, const std::string& path) {
  const std::string text = require_string(v, path);
  try {
    return parse_polynomial(text, vars);
  } catch (const PolynomialSyntaxError& e) {
    throw DocumentError(path, std::string("polynomial syntax error at line 1, ") + e.what());
  }
}

inline Rational parse_rational_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  const std::string text = require_string(v, path);
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw DocumentError(path, std::string("bad rational: ") + e.what());
  }
}

inline PolyForm parse_form(const json& v, const WorkspaceDocument& doc, const std::string& path) {
  const json* terms = &v;
  std::optional<std::size_t> degree;
  std::string terms_path = path;
  if (v.is_object()) {
    reject_unknown(v, {"degree", "terms"}, path);
    const json& d = require(v, "degree", path);
    expect(d.is_number_unsigned(), at(path, "degree"), "expected a non-negative integer");
    degree = d.get<std::size_t>();
    terms = &require(v, "terms", path);
    terms_path = at(path, "terms");
  }
  expect(terms->is_array(), terms_path, "expected a list of terms");
  if (!degree) {
    expect(!terms->empty(), terms_path, "empty term list needs an explicit degree");
    const json& first = (*terms)[0];
    expect(first.is_object() && first.contains("indices") && first["indices"].is_array(), at(terms_path, 0),
           "expected {indices, coeff}");
    degree = first["indices"].size();
  }
  expect(*degree <= doc.dim(), path, "degree exceeds the number of coordinates");
  PolyForm out(doc.dim(), *degree);
  std::set<IndexSet> seen;
  for (std::size_t t = 0; t < terms->size(); ++t) {
    const json& term = (*terms)[t];
    const std::string tp = at(terms_path, t);
    expect(term.is_object(), tp, "expected {indices, coeff}");
    reject_unknown(term, {"indices", "coeff"}, tp);
    const json& idx = require(term, "indices", tp);
    expect(idx.is_array(), at(tp, "indices"), "expected a list of coordinate names");
    expect(idx.size() == *degree, at(tp, "indices"), "index count differs from degree");
    IndexSet set;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::string name = require_string(idx[k], at(at(tp, "indices"), k));
      std::size_t pos = 0;
      try {
        pos = doc.index_of(name);
      } catch (const DocumentError&) {
        throw DocumentError(at(at(tp, "indices"), k), "undeclared coordinate '" + name + "'");
      }
      set.push_back(pos);
    }
    expect(detail::strictly_increasing(set, doc.dim()), at(tp, "indices"),
           "indices must be strictly increasing in coordinate order");
    expect(seen.insert(set).second, at(tp, "indices"), "duplicate index set");
    out.add_term(set, parse_field(require(term, "coeff", tp), doc.coordinates, at(tp, "coeff")));
  }
  return out;
}

inline Vector parse_point(const json& v, const WorkspaceDocument& doc, const std::string& path) {
  expect(v.is_object(), path, "expected an object mapping every coordinate to a value");
  Vector p(doc.dim());
  std::vector<bool> given(doc.dim(), false);
  for (const auto& item : v.items()) {
    std::size_t i = 0;
    try {
      i = doc.index_of(item.key());
    } catch (const DocumentError&) {
      throw DocumentError(at(path, item.key()), "undeclared coordinate");
    }
    p[i] = parse_rational_field(item.value(), at(path, item.key()));
    given[i] = true;
  }
  for (std::size_t i = 0; i < doc.dim(); ++i)
    expect(given[i], path, "missing coordinate '" + doc.coordinates[i] + "'");
  return p;
}

inline DomainSpec parse_domain(const json& v, const WorkspaceDocument& doc, const std::string& path) {
  expect(v.is_object(), path, "expected an object");
  reject_unknown(v, {"values", "nonzero", "extra_points"}, path);
  DomainSpec d;
  if (v.contains("values")) {
    const json& values = v["values"];
    const std::string vp = at(path, "values");
    expect(values.is_object(), vp, "expected an object keyed by coordinate");
    for (const auto& item : values.items()) {
      const std::string ip = at(vp, item.key());
      try {
        static_cast<void>(doc.index_of(item.key()));
      } catch (const DocumentError&) {
        throw DocumentError(ip, "undeclared coordinate");
      }
      expect(item.value().is_array() && !item.value().empty(), ip, "expected a non-empty list of values");
      std::vector<Rational> axis;
      for (std::size_t k = 0; k < item.value().size(); ++k) axis.push_back(parse_rational_field(item.value()[k], at(ip, k)));
      d.values.emplace(item.key(), std::move(axis));
    }
  }
  if (v.contains("nonzero")) {
    const json& nz = v["nonzero"];
    const std::string np = at(path, "nonzero");
    expect(nz.is_array(), np, "expected a list of coordinate names");
    for (std::size_t k = 0; k < nz.size(); ++k) {
      const std::string name = require_string(nz[k], at(np, k));
      try {
        static_cast<void>(doc.index_of(name));
      } catch (const DocumentError&) {
        throw DocumentError(at(np, k), "undeclared coordinate '" + name + "'");
      }
      d.nonzero.insert(name);
    }
  }
  for (const auto& name : d.nonzero) {
    auto it = d.values.find(name);
    if (it == d.values.end()) continue;
    for (const auto& value : it->second)
      expect(!value.is_zero(), at(at(path, "values"), name), "coordinate flagged nonzero has a zero sample");
  }
  if (v.contains("extra_points")) {
    const json& pts = v["extra_points"];
    const std::string pp = at(path, "extra_points");
    expect(pts.is_array(), pp, "expected a list of points");
    for (std::size_t k = 0; k < pts.size(); ++k) d.extra_points.push_back(parse_point(pts[k], doc, at(pp, k)));
  }
  return d;
}

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace detail

inline WorkspaceDocument document_from_json(const nlohmann::json& root) {
  using detail::at;
  using detail::expect;
  expect(root.is_object(), "", "document must be a JSON object");
  detail::reject_unknown(root, {"schema_version", "coordinates", "forms", "vector_fields", "functions", "domain"}, "");
  if (root.contains("schema_version")) {
    expect(root["schema_version"].is_string() && root["schema_version"] == kSchemaVersion, "schema_version",
           std::string("unsupported schema version (expected \"") + kSchemaVersion + "\")");
  }
  WorkspaceDocument doc;
  const auto& coords = detail::require(root, "coordinates", "");
  expect(coords.is_array(), "coordinates", "expected a list of names");
  expect(!coords.empty(), "coordinates", "at least one coordinate is required");
  std::set<std::string> names;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string name = detail::require_string(coords[i], at("coordinates", i));
    expect(detail::valid_identifier(name), at("coordinates", i), "not an identifier");
    expect(names.insert(name).second, at("coordinates", i), "duplicate coordinate '" + name + "'");
    doc.coordinates.push_back(name);
  }
  if (root.contains("forms")) {
    expect(root["forms"].is_object(), "forms", "expected an object keyed by form name");
    for (const auto& item : root["forms"].items())
      doc.forms.emplace(item.key(), detail::parse_form(item.value(), doc, at("forms", item.key())));
  }
  if (root.contains("vector_fields")) {
    expect(root["vector_fields"].is_object(), "vector_fields", "expected an object keyed by field name");
    for (const auto& item : root["vector_fields"].items()) {
      const std::string path = at("vector_fields", item.key());
      expect(item.value().is_array() && item.value().size() == doc.dim(), path,
             "expected one component per coordinate");
      std::vector<Polynomial> comps;
      for (std::size_t i = 0; i < doc.dim(); ++i)
        comps.push_back(detail::parse_field(item.value()[i], doc.coordinates, at(path, i)));
      doc.vector_fields.emplace(item.key(), PolyVectorField(std::move(comps)));
    }
  }
  if (root.contains("functions")) {
    expect(root["functions"].is_object(), "functions", "expected an object keyed by function name");
    for (const auto& item : root["functions"].items())
      doc.functions.emplace(item.key(),
                            detail::parse_field(item.value(), doc.coordinates, at("functions", item.key())));
  }
  if (root.contains("domain")) doc.domain = detail::parse_domain(root["domain"], doc, "domain");
  return doc;
}

inline WorkspaceDocument parse_document(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("", std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(root);
}

inline WorkspaceDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

inline nlohmann::json form_to_json(const PolyForm& f, const std::vector<std::string>& names) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [idx, c] : f.terms()) {
    nlohmann::json indices = nlohmann::json::array();
    for (std::size_t i : idx) indices.push_back(names[i]);
    terms.push_back({{"indices", indices}, {"coeff", c.to_string(names)}});
  }
  return {{"degree", f.degree()}, {"terms", terms}};
}

inline nlohmann::json point_to_json(const Vector& p, const std::vector<std::string>& names) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < p.size(); ++i) out[names[i]] = p[i].to_string();
  return out;
}

inline nlohmann::json document_to_json(const WorkspaceDocument& doc) {
  nlohmann::json root;
  root["schema_version"] = kSchemaVersion;
  root["coordinates"] = doc.coordinates;
  root["forms"] = nlohmann::json::object();
  for (const auto& [name, f] : doc.forms) root["forms"][name] = form_to_json(f, doc.coordinates);
  root["vector_fields"] = nlohmann::json::object();
  for (const auto& [name, v] : doc.vector_fields) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : v.components) comps.push_back(c.to_string(doc.coordinates));
    root["vector_fields"][name] = comps;
  }
  root["functions"] = nlohmann::json::object();
  for (const auto& [name, f] : doc.functions) root["functions"][name] = f.to_string(doc.coordinates);
  if (doc.domain) {
    nlohmann::json d;
    d["values"] = nlohmann::json::object();
    for (const auto& [name, axis] : doc.domain->values) {
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : axis) vals.push_back(v.to_string());
      d["values"][name] = vals;
    }
    d["nonzero"] = doc.domain->nonzero;
    d["extra_points"] = nlohmann::json::array();
    for (const auto& p : doc.domain->extra_points) d["extra_points"].push_back(point_to_json(p, doc.coordinates));
    root["domain"] = d;
  }
  return root;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string serialize(const WorkspaceDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

/// "x=1,y=-1/2" → point; every coordinate must be given exactly once.
inline Vector parse_point_spec(const std::string& spec, const WorkspaceDocument& doc) {
  Vector p(doc.dim());
  std::vector<bool> given(doc.dim(), false);
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DocumentError("--point", "expected name=value, got '" + item + "'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string name = trim(item.substr(0, eq));
    std::size_t i = 0;
    try {
      i = doc.index_of(name);
    } catch (const DocumentError&) {
      throw DocumentError("--point", "undeclared coordinate '" + name + "'");
    }
    if (given[i]) throw DocumentError("--point", "coordinate '" + name + "' given twice");
    try {
      p[i] = Rational::parse(trim(item.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw DocumentError("--point", "bad value for '" + name + "': " + e.what());
    }
    given[i] = true;
  }
  for (std::size_t i = 0; i < doc.dim(); ++i)
    if (!given[i]) throw DocumentError("--point", "missing coordinate '" + doc.coordinates[i] + "'");
  return p;
}

}  // namespace formclass

#endif  // FORMCLASS_DOCUMENT_HPP
