#ifndef NILREP_LIE_ALGEBRA_HPP
#define NILREP_LIE_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/matrix.hpp"
#include "nilrep/subspace.hpp"

namespace nilrep {

struct JacobiViolation {
  std::size_t i, j, k;
  Vec defect;
};

/// Finite-dimensional Lie algebra given by sparse structure constants over an
/// ordered basis. Brackets are stored for i < j only; [x_j, x_i] is the
/// negation, so antisymmetry holds by construction and only Jacobi needs
/// checking.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim, std::string name = "",
                      std::vector<std::string> labels = {})
      : dim_(dim), name_(std::move(name)), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.reserve(dim_);
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("x" + std::to_string(i + 1));
    }
    if (labels_.size() != dim_) throw Error("label count != dimension");
  }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_bracket(std::size_t i, std::size_t j,
                   std::vector<std::pair<std::size_t, Rational>> terms) {
    if (i >= j) throw Error("brackets are stored for i < j only");
    if (j >= dim_) throw Error("bracket index out of range");
    for (const auto& [k, c] : terms) {
      if (k >= dim_) throw Error("bracket target index out of range");
      (void)c;
    }
    table_[{i, j}] = std::move(terms);
  }

  const std::map<std::pair<std::size_t, std::size_t>,
                 std::vector<std::pair<std::size_t, Rational>>>&
  table() const {
    return table_;
  }

  /// [x_i, x_j] as a coordinate vector, any i, j.
  Vec bracket_basis(std::size_t i, std::size_t j) const {
    Vec out(dim_, Rational(0));
    if (i == j) return out;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return out;
    for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
    return out;
  }

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw Error("bracket: dimension mismatch");
    Vec out(dim_, Rational(0));
    for (const auto& [ij, terms] : table_) {
      const auto [i, j] = ij;
      const Rational coeff = u[i] * v[j] - u[j] * v[i];
      if (coeff == 0) continue;
      for (const auto& [k, c] : terms) out[k] += coeff * c;
    }
    return out;
  }

  /// Jacobi check over all basis triples; reports the first violation.
  std::optional<JacobiViolation> validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vec defect = bracket(unit(i), bracket_basis(j, k));
          add_vec(defect, bracket(unit(j), bracket_basis(k, i)));
          add_vec(defect, bracket(unit(k), bracket_basis(i, j)));
          if (!is_zero(defect)) return JacobiViolation{i, j, k, std::move(defect)};
        }
    return std::nullopt;
  }

  Vec unit(std::size_t i) const {
    Vec v(dim_, Rational(0));
    v[i] = 1;
    return v;
  }

  Subspace full_space() const { return Subspace::full(dim_); }

 private:
  static void add_vec(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }

  std::size_t dim_;
  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
      table_;
};

/// Span of all [a, b] with a, b running over bases of A and B.
inline Subspace product_space(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  if (A.ambient_dim() != B.ambient_dim() || A.ambient_dim() != L.dim())
    throw Error("product_space: ambient dimension mismatch");
  std::vector<Vec> products;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j)
      products.push_back(L.bracket(A.basis_row(i), B.basis_row(j)));
  return Subspace::span(L.dim(), products);
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& A) {
  return A.contains(product_space(L, L.full_space(), A));
}

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& A) {
  return A.contains(product_space(L, A, A));
}

/// h_1 = H, h_{i+1} = [H, h_i], listed until the first repeated term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& H) {
  if (!is_subalgebra(L, H)) throw Error("lower_central_series: not a subalgebra");
  std::vector<Subspace> series{H};
  for (std::size_t step = 0; step < 2 * L.dim() + 1; ++step) {
    Subspace next = product_space(L, H, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
  throw Error("lower_central_series: did not stabilize");
}

/// Largest i with h_i != 0. Zero for the zero subalgebra, 1 for abelian.
inline std::size_t nilpotency_class(const LieAlgebra& L, const Subspace& H) {
  auto series = lower_central_series(L, H);
  if (!series.back().is_zero_space())
    throw Error("nilpotency_class: not nilpotent (series stabilizes at dimension " +
                std::to_string(series.back().dim()) + ")");
  return series.size() - 1;
}

inline std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& H) {
  std::vector<Subspace> series{H};
  while (true) {
    Subspace next = product_space(L, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

inline bool is_solvable(const LieAlgebra& L, const Subspace& H) {
  return derived_series(L, H).back().is_zero_space();
}

inline bool is_nilpotent(const LieAlgebra& L) {
  return lower_central_series(L, L.full_space()).back().is_zero_space();
}

/// {x in P : [x, M] = 0}.
inline Subspace action_kernel(const LieAlgebra& L, const Subspace& P, const Subspace& M) {
  const std::size_t d = L.dim();
  if (P.dim() == 0) return Subspace::zero(d);
  if (M.dim() == 0) return P;
  // Rows: one block per basis vector of M, unknowns are P-coordinates.
  Matrix system(M.dim() * d, P.dim());
  for (std::size_t b = 0; b < M.dim(); ++b)
    for (std::size_t a = 0; a < P.dim(); ++a) {
      Vec br = L.bracket(P.basis_row(a), M.basis_row(b));
      for (std::size_t k = 0; k < d; ++k) system(b * d + k, a) = br[k];
    }
  std::vector<Vec> points;
  for (const auto& t : kernel_basis(system)) {
    Vec point(d, Rational(0));
    for (std::size_t a = 0; a < P.dim(); ++a) add_scaled(point, t[a], P.basis_row(a));
    points.push_back(std::move(point));
  }
  return Subspace::span(d, points);
}

/// Kernel of the stacked adjoint map.
inline Subspace center(const LieAlgebra& L) {
  return action_kernel(L, L.full_space(), L.full_space());
}

/// Upper central series Z_1 = center, Z_{i+1}/Z_i = center(L/Z_i), until stable.
inline std::vector<Subspace> upper_central_series(const LieAlgebra& L) {
  std::vector<Subspace> series{center(L)};
  const std::size_t d = L.dim();
  while (true) {
    const Subspace& z = series.back();
    // x with [x, x_j] in z for all j.
    Matrix system(d * d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        Vec residual = z.reduce(L.bracket(L.unit(i), L.unit(j)));
        for (std::size_t k = 0; k < d; ++k) system(j * d + k, i) = residual[k];
      }
    Subspace next = Subspace::span(d, kernel_basis(system));
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

/// Matrix of ad(x_i) for coordinate action: column j holds [x_i, x_j].
inline Matrix adjoint_matrix(const LieAlgebra& L, std::size_t i) {
  Matrix m(L.dim(), L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) {
    Vec br = L.bracket_basis(i, j);
    for (std::size_t k = 0; k < L.dim(); ++k) m(k, j) = br[k];
  }
  return m;
}

inline Matrix killing_form(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  std::vector<Matrix> ad;
  ad.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ad.push_back(adjoint_matrix(L, i));
  Matrix k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational trace = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) trace += ad[i](a, b) * ad[j](b, a);
      k(i, j) = trace;
      k(j, i) = std::move(trace);
    }
  return k;
}

/// Solvable radical as the Killing-orthogonal of the derived subalgebra:
/// rad(g) = {x : kappa(x, [g,g]) = 0} in characteristic zero.
inline Subspace killing_radical(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  const Matrix kappa = killing_form(L);
  const Subspace derived = product_space(L, L.full_space(), L.full_space());
  Matrix system(derived.dim(), d);
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    const Vec w = kappa.apply(derived.basis_row(r));
    for (std::size_t j = 0; j < d; ++j) system(r, j) = w[j];
  }
  Subspace radical = Subspace::span(d, kernel_basis(system));
  // Characterization sanity: the result must be a solvable ideal.
  if (!is_ideal(L, radical) || !is_solvable(L, radical))
    throw Error("killing_radical: result failed the solvable-ideal self-check");
  return radical;
}

}  // namespace nilrep

#endif
