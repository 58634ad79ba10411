#ifndef NILREP_CLI_HPP
#define NILREP_CLI_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nilrep/bounds.hpp"
#include "nilrep/filtration.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/repbuilder.hpp"
#include "nilrep/representation.hpp"
#include "nilrep/serialization.hpp"

namespace nilrep {

/// One parsed command-line job. The front end fills this in; run() does the
/// work so that tests can drive every command in-process.
struct JobConfig {
  std::string command;  // validate | analyze | build-rep | verify-rep | bound | denumerant | nil-defect
  std::string input;    // algebra file
  std::string rep_file;  // verify-rep: stored representation
  std::string output;    // build-rep: -o override
  std::string ideal;     // "full" | "center" | "span:i,j,..." | "" = file/default
  std::optional<std::size_t> k1, k2;
  std::size_t max_subset = 2;
  bool json = false;
  // bound calculator inputs
  std::optional<unsigned long> d, n, r, e1, e2, birkhoff_class;
  // denumerant inputs
  std::optional<unsigned long> t;
  std::vector<unsigned long> parts;
};

namespace cli_detail {

inline std::string weight_str(Weight w) {
  return w == kInfiniteWeight ? "inf" : std::to_string(w);
}

inline Json weight_json(Weight w) {
  if (w == kInfiniteWeight) return Json("inf");
  return Json(w);
}

/// "full" = the whole reference space, "center" = center of L,
/// "span:i,j,..." = 0-based coordinate span (checked to be a nilpotent ideal).
inline Subspace select_ideal(const LieAlgebra& L, const std::string& selector,
                             const Subspace& whole) {
  if (selector == "full") return whole;
  if (selector == "center") return center(L);
  const std::string prefix = "span:";
  if (selector.rfind(prefix, 0) != 0)
    throw ParseError("unknown ideal selector '" + selector +
                     "' (expected full, center, or span:i,j,...)");
  std::vector<Vec> rows;
  std::size_t pos = prefix.size();
  while (pos < selector.size()) {
    std::size_t next = selector.find(',', pos);
    if (next == std::string::npos) next = selector.size();
    const std::string token = selector.substr(pos, next - pos);
    std::size_t used = 0;
    unsigned long index = 0;
    try {
      index = std::stoul(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + token + "' in ideal selector");
    }
    if (used != token.size()) throw ParseError("bad index '" + token + "' in ideal selector");
    if (index >= L.dim()) throw Error("ideal selector index " + token + " out of range");
    rows.push_back(L.unit(index));
    pos = next + 1;
  }
  const Subspace S = Subspace::span(L.dim(), rows);
  if (!is_ideal(L, S)) throw Error("selected span is not an ideal");
  nilpotency_class(L, S);  // throws when not nilpotent
  return S;
}

inline void print_rows(std::ostream& out, const char* tag, const Subspace& S) {
  for (std::size_t r = 0; r < S.dim(); ++r) {
    out << tag;
    const Vec row = S.basis_row(r);
    for (const Rational& c : row) out << ' ' << to_string(c);
    out << '\n';
  }
}

inline int cmd_validate(const JobConfig& cfg, std::ostream& out) {
  const LieAlgebra L = algebra_file_from_json(load_json_file(cfg.input)).algebra;
  const auto violation = L.validate();
  if (cfg.json) {
    Json j;
    j["ok"] = !violation.has_value();
    if (violation) j["triple"] = {violation->i, violation->j, violation->k};
    out << dump_json(j);
  } else if (!violation) {
    out << "ok\n";
  } else {
    out << "jacobi violation at (" << L.labels()[violation->i] << ", " << L.labels()[violation->j]
        << ", " << L.labels()[violation->k] << ") = indices (" << violation->i << ", "
        << violation->j << ", " << violation->k << ")\n";
  }
  return violation ? 1 : 0;
}

inline int cmd_analyze(const JobConfig& cfg, std::ostream& out) {
  const LieAlgebra L = algebra_file_from_json(load_json_file(cfg.input)).algebra;
  const auto lcs = lower_central_series(L, L.full_space());
  std::optional<std::size_t> klass;
  if (lcs.back().is_zero_space()) klass = lcs.size() - 1;

  Json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  Json lcs_dims = Json::array();
  for (const auto& term : lcs) lcs_dims.push_back(term.dim());
  j["lcs_dims"] = lcs_dims;
  j["class"] = klass ? Json(*klass) : Json(nullptr);
  j["center_dim"] = center(L).dim();
  j["killing_radical_dim"] = killing_radical(L).dim();

  if (!cfg.ideal.empty()) {
    const Subspace H = select_ideal(L, cfg.ideal, L.full_space());
    const Filtration F = ideal_filtration(L, L.full_space(), H);
    const auto adapted = adapt_two_flags(F.spaces(), F.spaces());
    const WeightVector weights = weights_from_filtration(F, adapted);
    Json filt;
    Json dims = Json::array();
    for (std::size_t dim : F.dims()) dims.push_back(dim);
    filt["dims"] = dims;
    Json ws = Json::array();
    for (Weight w : weights) ws.push_back(weight_json(w));
    filt["weights"] = ws;
    j["filtration"] = filt;
  }

  if (cfg.json) {
    out << dump_json(j);
    return 0;
  }
  out << "algebra: " << L.name() << '\n';
  out << "dim: " << L.dim() << '\n';
  out << "lower central series dims:";
  for (const auto& term : lcs) out << ' ' << term.dim();
  out << '\n';
  if (klass)
    out << "class: " << *klass << '\n';
  else
    out << "class: not nilpotent\n";
  out << "center dim: " << j["center_dim"].get<std::size_t>() << '\n';
  out << "killing radical dim: " << j["killing_radical_dim"].get<std::size_t>() << '\n';
  if (j.contains("filtration")) {
    out << "filtration dims:";
    for (const auto& d : j["filtration"]["dims"]) out << ' ' << d.get<std::size_t>();
    out << '\n';
    out << "filtration weights:";
    for (const auto& w : j["filtration"]["weights"])
      out << ' ' << (w.is_string() ? w.get<std::string>() : std::to_string(w.get<Weight>()));
    out << '\n';
  }
  return 0;
}

inline int cmd_build_rep(const JobConfig& cfg, std::ostream& out) {
  const AlgebraFile file = algebra_file_from_json(load_json_file(cfg.input));
  const LieAlgebra& L = file.algebra;

  Subspace p, m;
  if (file.has_decomposition()) {
    p = *file.p;
    m = *file.m;
  } else {
    if (!is_nilpotent(L))
      throw Error("file has no decomposition and the algebra is not nilpotent");
    p = Subspace::zero(L.dim());
    m = Subspace::full(L.dim());
  }
  Subspace h = file.h.value_or(m);
  if (!cfg.ideal.empty()) h = select_ideal(L, cfg.ideal, m);

  const Decomposition D = Decomposition::create(L, p, m, h);
  const auto defaults = D.default_cutoffs();
  const std::size_t k1 = cfg.k1.value_or(defaults.first);
  const std::size_t k2 = cfg.k2.value_or(defaults.second);
  if (k1 == 0 || k2 == 0) throw Error("cutoffs k1, k2 must be at least 1");

  const AssembledRep assembled = assemble_full(D, k1, k2);
  const bool hom_ok = !verify_homomorphism(assembled.rep, L).has_value();
  const bool faithful = verify_faithful(assembled.rep, L).empty();

  BoundReport report;
  report.d = L.dim();
  report.n = D.m.dim();
  report.r = killing_radical(L).dim();
  report.class_m = D.class_m();
  report.class_h = D.class_h();
  report.e1 = report.class_h;
  report.e2 = D.m.dim() - D.h.dim();
  report.achieved_degree = assembled.rep.degree;
  report.prop_bound = prop_bound(D.m.dim(), report.e2, report.class_h);
  report.theorem_bound = theorem_bound(report.d, report.n, report.r, report.e1, report.e2);
  if (L.dim() > 0 && is_nilpotent(L))
    report.birkhoff = birkhoff_dim(L.dim(), nilpotency_class(L, L.full_space()));

  std::filesystem::path out_path(cfg.output);
  if (cfg.output.empty()) {
    out_path = cfg.input;
    out_path.replace_extension();
    out_path += ".rep.json";
  }
  save_json_file(out_path.string(), representation_to_json(assembled.rep));

  if (cfg.json) {
    Json j = bound_report_to_json(report);
    j["algebra"] = L.name();
    j["k1"] = k1;
    j["k2"] = k2;
    j["homomorphism"] = hom_ok;
    j["faithful"] = faithful;
    j["output"] = out_path.string();
    out << dump_json(j);
  } else {
    out << "algebra: " << L.name() << '\n';
    out << "degree: " << assembled.rep.degree << '\n';
    out << "homomorphism: " << (hom_ok ? "true" : "false") << '\n';
    out << "faithful: " << (faithful ? "true" : "false") << '\n';
    out << "prop_bound: " << report.prop_bound.get_str() << '\n';
    out << "theorem_bound: " << report.theorem_bound.get_str() << '\n';
    if (report.birkhoff != 0) out << "birkhoff: " << report.birkhoff.get_str() << '\n';
    out << "wrote: " << out_path.string() << '\n';
  }
  return 0;
}

inline int cmd_verify_rep(const JobConfig& cfg, std::ostream& out) {
  const LieAlgebra L = algebra_file_from_json(load_json_file(cfg.input)).algebra;
  const Representation rep = representation_from_json(load_json_file(cfg.rep_file));
  if (rep.algebra != L.name())
    throw Error("representation was built for '" + rep.algebra + "', not '" + L.name() + "'");
  if (rep.labels != L.labels()) throw Error("representation labels do not match the algebra");

  const auto defect = verify_homomorphism(rep, L);
  const auto kernel = verify_faithful(rep, L);

  if (cfg.json) {
    Json j;
    j["homomorphism"] = !defect.has_value();
    j["faithful"] = kernel.empty();
    j["kernel_dim"] = kernel.size();
    out << dump_json(j);
  } else {
    if (defect)
      out << "homomorphism: fails at (" << L.labels()[defect->i] << ", " << L.labels()[defect->j]
          << ")\n";
    else
      out << "homomorphism: ok\n";
    out << "faithful: " << (kernel.empty() ? "true" : "false") << '\n';
    if (!kernel.empty()) out << "kernel dim: " << kernel.size() << '\n';
  }
  return (!defect && kernel.empty()) ? 0 : 1;
}

inline int cmd_bound(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.d || !cfg.n || !cfg.r || !cfg.e1 || !cfg.e2)
    throw ParseError("bound needs --d, --n, --r, --e1, --e2");
  BoundReport report;
  report.d = *cfg.d;
  report.n = *cfg.n;
  report.r = *cfg.r;
  report.e1 = *cfg.e1;
  report.e2 = *cfg.e2;
  report.class_h = report.e1;
  report.theorem_bound = theorem_bound(report.d, report.n, report.r, report.e1, report.e2);
  const bool prop_ok = report.e2 <= report.n;
  if (prop_ok) report.prop_bound = prop_bound(report.n, report.e2, report.e1);
  if (cfg.birkhoff_class) report.birkhoff = birkhoff_dim(report.d, *cfg.birkhoff_class);

  if (cfg.json) {
    out << dump_json(bound_report_to_json(report));
    return 0;
  }
  out << "d: " << report.d << '\n';
  out << "n: " << report.n << '\n';
  out << "r: " << report.r << '\n';
  out << "e1: " << report.e1 << '\n';
  out << "e2: " << report.e2 << '\n';
  out << "theorem_bound: " << report.theorem_bound.get_str() << '\n';
  if (prop_ok) out << "prop_bound: " << report.prop_bound.get_str() << '\n';
  if (cfg.birkhoff_class) out << "birkhoff: " << report.birkhoff.get_str() << '\n';
  return 0;
}

inline int cmd_denumerant(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.t) throw ParseError("denumerant needs --t");
  if (cfg.parts.empty()) throw ParseError("denumerant needs --parts");
  const Integer delta = denumerant(*cfg.t, cfg.parts);
  const Integer bound = denumerant_bound(*cfg.t, cfg.parts.size());

  if (cfg.json) {
    Json j;
    j["t"] = *cfg.t;
    j["parts"] = cfg.parts;
    j["denumerant"] = delta.get_str();
    j["bound"] = bound.get_str();
    out << dump_json(j);
    return 0;
  }
  out << "t: " << *cfg.t << '\n';
  out << "parts:";
  for (unsigned long m : cfg.parts) out << ' ' << m;
  out << '\n';
  out << "denumerant: " << delta.get_str() << '\n';
  out << "bound: " << bound.get_str() << '\n';
  return 0;
}

inline int cmd_nil_defect(const JobConfig& cfg, std::ostream& out) {
  const LieAlgebra L = algebra_file_from_json(load_json_file(cfg.input)).algebra;
  const Subspace R = killing_radical(L);
  const NilDefectResult result = nil_defect_search(L, R, cfg.max_subset);

  if (cfg.json) {
    Json j;
    j["radical_dim"] = R.dim();
    j["epsilon"] = result.defect;
    j["witness_dim"] = result.witness.dim();
    j["witness"] = subspace_to_json(result.witness);
    out << dump_json(j);
    return 0;
  }
  out << "radical dim: " << R.dim() << '\n';
  out << "nil defect upper bound: " << result.defect << '\n';
  out << "witness ideal dim: " << result.witness.dim() << '\n';
  print_rows(out, "witness row:", result.witness);
  return 0;
}

inline int dispatch(const JobConfig& cfg, std::ostream& out) {
  if (cfg.command == "validate") return cmd_validate(cfg, out);
  if (cfg.command == "analyze") return cmd_analyze(cfg, out);
  if (cfg.command == "build-rep") return cmd_build_rep(cfg, out);
  if (cfg.command == "verify-rep") return cmd_verify_rep(cfg, out);
  if (cfg.command == "bound") return cmd_bound(cfg, out);
  if (cfg.command == "denumerant") return cmd_denumerant(cfg, out);
  if (cfg.command == "nil-defect") return cmd_nil_defect(cfg, out);
  throw ParseError("unknown command '" + cfg.command + "'");
}

}  // namespace cli_detail

/// Exit status 0 = success/verified, 1 = semantic failure, 2 = parse/usage.
inline int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return cli_detail::dispatch(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nilrep

#endif
