#ifndef NILREP_SERIALIZATION_HPP
#define NILREP_SERIALIZATION_HPP

#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilrep/bounds.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/rational.hpp"
#include "nilrep/repbuilder.hpp"
#include "nilrep/representation.hpp"
#include "nilrep/subspace.hpp"

namespace nilrep {

/// ordered_json keeps object keys in insertion/document order, which is what
/// makes repeated saves byte-identical.
using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object with key '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing key '" + std::string(key) + "'");
  return *it;
}

inline std::size_t get_size(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError("key '" + std::string(key) + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

inline std::string get_string(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) throw ParseError("key '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

inline const Json& get_array(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) throw ParseError("key '" + std::string(key) + "' must be an array");
  return v;
}

inline Rational scalar_from_json(const Json& v) {
  if (!v.is_string()) throw ParseError("scalars are strings like \"-3/7\"");
  return parse_rational(v.get<std::string>());
}

inline Vec row_from_json(const Json& v, std::size_t width) {
  if (!v.is_array() || v.size() != width)
    throw ParseError("expected a row of " + std::to_string(width) + " scalar strings");
  Vec row;
  row.reserve(width);
  for (const Json& entry : v) row.push_back(scalar_from_json(entry));
  return row;
}

}  // namespace detail

inline Json subspace_to_json(const Subspace& S) {
  Json rows = Json::array();
  for (const Vec& r : S.basis_rows()) {
    Json row = Json::array();
    for (const Rational& c : r) row.push_back(to_string(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  if (!j.is_array()) throw ParseError("a subspace is an array of rows");
  std::vector<Vec> rows;
  rows.reserve(j.size());
  for (const Json& r : j) rows.push_back(detail::row_from_json(r, ambient));
  return Subspace::span(ambient, rows);
}

inline Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  Json brackets = Json::array();
  for (const auto& [ij, terms] : L.table()) {
    (void)terms;
    const Vec value = L.bracket_basis(ij.first, ij.second);
    Json out_terms = Json::array();
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (value[k] == 0) continue;
      out_terms.push_back({{"k", k}, {"c", to_string(value[k])}});
    }
    if (out_terms.empty()) continue;
    brackets.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", std::move(out_terms)}});
  }
  j["brackets"] = std::move(brackets);
  return j;
}

inline LieAlgebra algebra_from_json(const Json& j) {
  const std::string name = detail::get_string(j, "name");
  const std::size_t dim = detail::get_size(j, "dim");
  const Json& basis = detail::get_array(j, "basis");
  if (basis.size() != dim) throw ParseError("'basis' must list exactly 'dim' labels");
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (const Json& b : basis) {
    if (!b.is_string()) throw ParseError("basis labels must be strings");
    labels.push_back(b.get<std::string>());
  }

  LieAlgebra L(dim, name, std::move(labels));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Json& entry : detail::get_array(j, "brackets")) {
    const std::size_t i = detail::get_size(entry, "i");
    const std::size_t jj = detail::get_size(entry, "j");
    if (!(i < jj) || jj >= dim) throw ParseError("bracket indices must satisfy 0 <= i < j < dim");
    if (!seen.insert({i, jj}).second)
      throw ParseError("duplicate bracket for pair (" + std::to_string(i) + ", " +
                       std::to_string(jj) + ")");
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const Json& term : detail::get_array(entry, "terms")) {
      const std::size_t k = detail::get_size(term, "k");
      if (k >= dim) throw ParseError("bracket term index out of range");
      terms.emplace_back(k, detail::scalar_from_json(detail::member(term, "c")));
    }
    L.set_bracket(i, jj, std::move(terms));
  }
  return L;
}

/// Raw file contents: the algebra plus an optional decomposition block. The
/// subspaces are parsed but not validated here; Decomposition::create does the
/// semantic checks so that shape errors and math errors stay distinguishable.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<Subspace> p, m, h;

  bool has_decomposition() const { return p.has_value(); }
};

inline AlgebraFile algebra_file_from_json(const Json& j) {
  AlgebraFile file{algebra_from_json(j), {}, {}, {}};
  if (!j.is_object() || !j.contains("decomposition")) return file;
  const Json& dec = j["decomposition"];
  const std::size_t d = file.algebra.dim();
  file.p = subspace_from_json(detail::member(dec, "p"), d);
  file.m = subspace_from_json(detail::member(dec, "m"), d);
  if (dec.contains("h")) file.h = subspace_from_json(dec["h"], d);
  return file;
}

inline Json decomposition_to_json(const Decomposition& D) {
  Json j = algebra_to_json(D.algebra);
  Json dec;
  dec["p"] = subspace_to_json(D.p);
  dec["m"] = subspace_to_json(D.m);
  dec["h"] = subspace_to_json(D.h);
  j["decomposition"] = std::move(dec);
  return j;
}

inline Json representation_to_json(const Representation& rep) {
  Json j;
  j["degree"] = rep.degree;
  j["algebra"] = rep.algebra;
  j["module_basis"] = rep.module_basis;
  Json mats;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < rep.labels.size(); ++i) {
    if (!seen.insert(rep.labels[i]).second)
      throw Error("cannot serialize: duplicate basis label '" + rep.labels[i] + "'");
    Json matrix = Json::array();
    for (std::size_t r = 0; r < rep.degree; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < rep.degree; ++c) row.push_back(to_string(rep.matrices[i](r, c)));
      matrix.push_back(std::move(row));
    }
    mats[rep.labels[i]] = std::move(matrix);
  }
  j["matrices"] = std::move(mats);
  return j;
}

inline Representation representation_from_json(const Json& j) {
  const std::size_t degree = detail::get_size(j, "degree");
  const std::string algebra = detail::get_string(j, "algebra");
  const Json& basis = detail::get_array(j, "module_basis");
  if (basis.size() != degree) throw ParseError("'module_basis' must list exactly 'degree' names");
  std::vector<std::string> module_basis;
  for (const Json& b : basis) {
    if (!b.is_string()) throw ParseError("module basis names must be strings");
    module_basis.push_back(b.get<std::string>());
  }

  const Json& mats = detail::member(j, "matrices");
  if (!mats.is_object()) throw ParseError("'matrices' must map labels to matrices");
  std::vector<std::string> labels;
  std::vector<Matrix> matrices;
  for (const auto& [label, value] : mats.items()) {
    labels.push_back(label);
    if (!value.is_array() || value.size() != degree)
      throw ParseError("matrix '" + label + "' must have " + std::to_string(degree) + " rows");
    Matrix mat(degree, degree);
    for (std::size_t r = 0; r < degree; ++r) {
      const Vec row = detail::row_from_json(value[r], degree);
      for (std::size_t c = 0; c < degree; ++c) mat(r, c) = row[c];
    }
    matrices.push_back(std::move(mat));
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) throw ParseError("duplicate matrix label");
  return Representation(degree, algebra, std::move(labels), std::move(module_basis),
                        std::move(matrices));
}

inline Json bound_report_to_json(const BoundReport& report) {
  Json j;
  j["d"] = report.d;
  j["n"] = report.n;
  j["r"] = report.r;
  j["e1"] = report.e1;
  j["e2"] = report.e2;
  j["class_m"] = report.class_m;
  j["class_h"] = report.class_h;
  j["achieved_degree"] = report.achieved_degree;
  j["prop_bound"] = report.prop_bound.get_str();
  j["theorem_bound"] = report.theorem_bound.get_str();
  j["birkhoff"] = report.birkhoff.get_str();
  return j;
}

/// Canonical on-disk text: two-space indent plus a trailing newline.
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dump_json(j);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace nilrep

#endif
