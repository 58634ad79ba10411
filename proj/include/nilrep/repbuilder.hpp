#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/filtration.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/pbw.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

/// The induced Lie algebra on a bracket-closed subspace, over its row basis.
inline LieAlgebra subalgebra_structure(const LieAlgebra& L, const Subspace& S,
                                       const std::string& name) {
  const std::size_t k = S.dim();
  LieAlgebra A(k, name);
  const std::vector<Vec> rows = S.basis_rows();
  const Matrix row_mat = Matrix::from_rows(rows);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto coords = solve_row_combination(row_mat, L.bracket(rows[i], rows[j]));
      if (!coords) throw Error("subalgebra_structure: subspace is not bracket-closed");
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (std::size_t t = 0; t < k; ++t)
        if ((*coords)[t] != 0) terms.emplace_back(t, (*coords)[t]);
      if (!terms.empty()) A.set_bracket(i, j, std::move(terms));
    }
  return A;
}

/// A semidirect splitting g = p ⊕ m together with a distinguished nilpotent
/// ideal h ⊆ m controlling the second truncation weight.
struct Decomposition {
  LieAlgebra algebra;
  Subspace p, m, h;

  static Decomposition create(LieAlgebra L, Subspace p, Subspace m, Subspace h) {
    const std::size_t d = L.dim();
    if (p.ambient_dim() != d || m.ambient_dim() != d || h.ambient_dim() != d)
      throw Error("decomposition: subspace ambient dimension mismatch");
    if (p.dim() + m.dim() != d || sum(p, m).dim() != d)
      throw Error("decomposition: p and m do not decompose the algebra");
    if (!is_ideal(L, m)) throw Error("decomposition: m is not an ideal");
    if (!lower_central_series(L, m).back().is_zero_space())
      throw Error("decomposition: m is not nilpotent");
    if (!is_subalgebra(L, p)) throw Error("decomposition: p is not a subalgebra");
    if (!m.contains(h)) throw Error("decomposition: h is not contained in m");
    if (!is_ideal(L, h)) throw Error("decomposition: h is not an ideal");
    return Decomposition{std::move(L), std::move(p), std::move(m), std::move(h)};
  }

  /// All of a nilpotent algebra as m, with p = 0; h defaults to m.
  static Decomposition nilpotent(LieAlgebra L,
                                 std::optional<Subspace> h = std::nullopt) {
    const std::size_t d = L.dim();
    Subspace ideal = h.value_or(Subspace::full(d));
    return create(std::move(L), Subspace::zero(d), Subspace::full(d),
                  std::move(ideal));
  }

  std::size_t class_m() const { return nilpotency_class(algebra, m); }
  std::size_t class_h() const { return nilpotency_class(algebra, h); }

  /// The smallest cutoffs that guarantee faithfulness: (c(m)+1, c(h)+1).
  std::pair<std::size_t, std::size_t> default_cutoffs() const {
    return {class_m() + 1, class_h() + 1};
  }
};

/// Kernel p0 of the p-action on m, plus a vector-space complement of p0 in p.
/// Complement vectors are drawn from the centralizer of p0 first, so that when
/// p0 does split off as an ideal direct summand the returned pair realizes it.
inline std::pair<Subspace, Subspace> split_p0(const Decomposition& D) {
  const Subspace p0 = action_kernel(D.algebra, D.p, D.m);
  if (p0.dim() == 0) return {p0, D.p};

  std::vector<Vec> eff;
  Subspace reach = p0;
  const auto extend_from = [&](const Subspace& pool) {
    for (std::size_t i = 0; i < pool.dim() && reach.dim() < D.p.dim(); ++i) {
      const Vec v = pool.basis_row(i);
      if (reach.contains(v)) continue;
      eff.push_back(v);
      auto rows = reach.basis_rows();
      rows.push_back(v);
      reach = Subspace::span(D.algebra.dim(), rows);
    }
  };
  extend_from(action_kernel(D.algebra, D.p, p0));
  extend_from(D.p);
  return {p0, Subspace::span(D.algebra.dim(), eff)};
}

/// A quotient-module representation together with the data that defined it.
struct BuiltRep {
  Representation rep;
  std::vector<Vec> adapted;  // adapted basis of m, ambient coordinates
  WeightVector w_mm, w_mh;
  std::vector<Monomial> kept;
  std::size_t k1 = 0, k2 = 0;
};

namespace detail {

/// Matrices of the (p ⋉ m)-module U(m)/S on all of g: the p-part of each basis
/// vector acts by its derivation, the m-part by left multiplication, and every
/// image is truncated back to the kept monomials. Vectors acting trivially on m
/// land in the kernel by design; callers decide whether that is an error.
inline BuiltRep quotient_module(const Decomposition& D, std::size_t k1,
                                std::size_t k2) {
  if (k1 < 1 || k2 < 1) throw Error("build: cutoffs must be at least 1");
  const LieAlgebra& L = D.algebra;

  const Filtration f_mm = ideal_filtration(L, D.m, D.m);
  const Filtration f_mh = ideal_filtration(L, D.m, D.h);
  const std::vector<Vec> adapted = adapt_two_flags(f_mm.spaces(), f_mh.spaces());
  const WeightVector w1 = weights_from_filtration(f_mm, adapted);
  const WeightVector w2 = weights_from_filtration(f_mh, adapted);
  std::vector<Monomial> kept = enumerate_bounded(w1, k1 - 1, w2, k2 - 1);

  std::map<Monomial, std::size_t> index;
  std::vector<std::string> module_basis;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    index[kept[a]] = a;
    module_basis.push_back(to_string(kept[a]));
  }

  const EnvelopingAlgebra U(L, adapted);
  std::vector<Vec> split_rows = D.p.basis_rows();
  split_rows.insert(split_rows.end(), adapted.begin(), adapted.end());
  const Matrix split_mat = Matrix::from_rows(split_rows);

  std::vector<Matrix> mats;
  for (std::size_t g = 0; g < L.dim(); ++g) {
    const auto coords = solve_row_combination(split_mat, L.unit(g));
    if (!coords) throw Error("build: basis vector escapes p + m");
    Vec delta(L.dim(), Rational(0));
    for (std::size_t a = 0; a < D.p.dim(); ++a)
      add_scaled(delta, (*coords)[a], D.p.basis_row(a));
    Vec m_part((*coords).begin() + static_cast<std::ptrdiff_t>(D.p.dim()),
               (*coords).end());

    Matrix mat(kept.size(), kept.size());
    for (std::size_t col = 0; col < kept.size(); ++col) {
      const UElement base = UElement::monomial(kept[col]);
      const UElement image = U.derive(delta, base) + U.mult_vec(m_part, base);
      for (const auto& [mono, c] : image.terms()) {
        if (mono_weight(w1, mono) >= k1 || mono_weight(w2, mono) >= k2) continue;
        const auto hit = index.find(mono);
        if (hit == index.end()) throw Error("build: kept set is not saturated");
        mat(hit->second, col) = c;
      }
    }
    mats.push_back(std::move(mat));
  }

  Representation rep(kept.size(), L.name(), L.labels(), std::move(module_basis),
                     std::move(mats));
  return BuiltRep{std::move(rep), adapted, w1, w2, std::move(kept), k1, k2};
}

}  // namespace detail

/// Faithful module U(m)/S(ω_(m,m) ≥ k1 or ω_(m,h) ≥ k2) for g = p ⋉ m with p
/// acting faithfully on m. Faithfulness of the result needs k1 > c(m), k2 > c(h).
inline BuiltRep build_quotient_rep(const Decomposition& D, std::size_t k1,
                                   std::size_t k2) {
  const Subspace kernel = action_kernel(D.algebra, D.p, D.m);
  if (kernel.dim() != 0)
    throw Error("build: p does not act faithfully on m (kernel dimension " +
                std::to_string(kernel.dim()) + "); split off p0 first");
  return detail::quotient_module(D, k1, k2);
}

inline BuiltRep build_quotient_rep(const Decomposition& D) {
  const auto [k1, k2] = D.default_cutoffs();
  return build_quotient_rep(D, k1, k2);
}

/// Faithful representation of a reductive subalgebra: adjoint for the
/// semisimple part, strictly lower-triangular matrix units for the center.
inline Representation reductive_rep(const LieAlgebra& L, const Subspace& p0) {
  if (p0.dim() == 0) return Representation(0, L.name(), {}, {}, {});
  const LieAlgebra A = subalgebra_structure(L, p0, L.name());
  const Subspace z = center(A);
  const Subspace der = product_space(A, A.full_space(), A.full_space());
  if (der.dim() == 0) return abelian_rep(A.dim(), A.name(), A.labels());
  if (z.dim() == 0) return adjoint_rep(A);
  if (!intersect(z, der).is_zero_space())
    throw Error("reductive_rep: center meets the derived algebra (not reductive)");

  // Project onto the center along a complement containing [p0, p0], and
  // represent the central image faithfully on its own.
  std::vector<Vec> rows = z.basis_rows();
  const std::size_t z_dim = z.dim();
  Subspace reach = sum(z, der);
  auto comp_rows = der.basis_rows();
  for (std::size_t i = 0; i < A.dim() && reach.dim() < A.dim(); ++i) {
    const Vec v = A.unit(i);
    if (reach.contains(v)) continue;
    comp_rows.push_back(v);
    auto all = z.basis_rows();
    all.insert(all.end(), comp_rows.begin(), comp_rows.end());
    reach = Subspace::span(A.dim(), all);
  }
  rows.insert(rows.end(), comp_rows.begin(), comp_rows.end());

  const Matrix row_mat = Matrix::from_rows(rows);
  std::vector<Matrix> central;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const auto coords = solve_row_combination(row_mat, A.unit(i));
    if (!coords) throw Error("reductive_rep: projection basis is not a basis");
    Matrix m(z_dim + 1, z_dim + 1);
    for (std::size_t t = 0; t < z_dim; ++t) m(t + 1, 0) = (*coords)[t];
    central.push_back(std::move(m));
  }
  std::vector<std::string> central_basis{"1"};
  for (std::size_t t = 0; t < z_dim; ++t)
    central_basis.push_back("z" + std::to_string(t + 1));
  const Representation central_rep(z_dim + 1, A.name(), A.labels(),
                                   std::move(central_basis), std::move(central));
  return direct_sum(adjoint_rep(A), central_rep);
}

/// A faithful representation of all of g, with the quotient-module block that
/// witnessed it (absent only when g is its own reductive p0).
struct AssembledRep {
  Representation rep;
  Subspace p0, p_eff;
  std::size_t reductive_degree = 0;
  std::optional<BuiltRep> quotient;
};

/// Representation of g = p0 ⊕ (p_eff ⋉ m): reductive block on p0, quotient
/// module on the rest. Needs p0 to split off as an ideal direct summand.
inline AssembledRep assemble_full(const Decomposition& D, std::size_t k1,
                                  std::size_t k2) {
  const LieAlgebra& L = D.algebra;
  const std::size_t d = L.dim();
  auto [p0, p_eff] = split_p0(D);
  if (p0.dim() > 0) {
    if (!product_space(L, p0, p_eff).is_zero_space())
      throw Error("assemble: no complement of p0 centralizes it; p0 does not split off");
    if (!is_subalgebra(L, p_eff))
      throw Error("assemble: complement of p0 is not a subalgebra");
  }

  const Representation red = reductive_rep(L, p0);

  std::optional<BuiltRep> quotient;
  if (p_eff.dim() + D.m.dim() > 0) quotient = detail::quotient_module(D, k1, k2);
  const std::size_t quot_degree = quotient ? quotient->rep.degree : 0;

  // Coordinates of each basis vector against p0 ⊕ p_eff ⊕ m.
  std::vector<Vec> rows = p0.basis_rows();
  {
    auto r = p_eff.basis_rows();
    rows.insert(rows.end(), r.begin(), r.end());
    r = D.m.basis_rows();
    rows.insert(rows.end(), r.begin(), r.end());
  }

  const Matrix row_mat = Matrix::from_rows(rows);
  const std::size_t degree = red.degree + quot_degree;
  std::vector<Matrix> mats;
  for (std::size_t g = 0; g < d; ++g) {
    const auto coords = solve_row_combination(row_mat, L.unit(g));
    if (!coords) throw Error("assemble: basis vector escapes p0 + p_eff + m");
    Vec p0_coords((*coords).begin(),
                  (*coords).begin() + static_cast<std::ptrdiff_t>(p0.dim()));
    Matrix m(degree, degree);
    const Matrix top = red.act(p0_coords);
    for (std::size_t r = 0; r < red.degree; ++r)
      for (std::size_t c = 0; c < red.degree; ++c) m(r, c) = top(r, c);
    if (quotient) {
      const Matrix& bottom = quotient->rep.matrices[g];
      for (std::size_t r = 0; r < quot_degree; ++r)
        for (std::size_t c = 0; c < quot_degree; ++c)
          m(red.degree + r, red.degree + c) = bottom(r, c);
    }
    mats.push_back(std::move(m));
  }

  std::vector<std::string> module_basis;
  for (const std::string& s : red.module_basis) module_basis.push_back("p0:" + s);
  if (quotient)
    module_basis.insert(module_basis.end(), quotient->rep.module_basis.begin(),
                        quotient->rep.module_basis.end());

  Representation rep(degree, L.name(), L.labels(), std::move(module_basis),
                     std::move(mats));
  return AssembledRep{std::move(rep), std::move(p0), std::move(p_eff), red.degree,
                      std::move(quotient)};
}

inline AssembledRep assemble_full(const Decomposition& D) {
  const auto [k1, k2] = D.default_cutoffs();
  return assemble_full(D, k1, k2);
}

}  // namespace nilrep
