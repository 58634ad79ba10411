#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/matrix.hpp"

namespace nilrep {

/// A matrix representation: one degree×degree matrix per basis element of the
/// algebra it represents, in basis order.
struct Representation {
  std::size_t degree = 0;
  std::string algebra;               // name of the represented algebra
  std::vector<std::string> labels;   // generator labels, one per matrix
  std::vector<std::string> module_basis;  // row/column labels, size == degree
  std::vector<Matrix> matrices;

  Representation(std::size_t deg, std::string alg, std::vector<std::string> lab,
                 std::vector<std::string> mod, std::vector<Matrix> mats)
      : degree(deg),
        algebra(std::move(alg)),
        labels(std::move(lab)),
        module_basis(std::move(mod)),
        matrices(std::move(mats)) {
    if (labels.size() != matrices.size())
      throw Error("representation: one label per matrix required");
    if (module_basis.size() != degree)
      throw Error("representation: one module label per degree required");
    for (const Matrix& m : matrices)
      if (m.rows() != degree || m.cols() != degree)
        throw Error("representation: matrix is not degree x degree");
  }

  /// ρ applied to an arbitrary algebra element given by coordinates.
  Matrix act(const Vec& coords) const {
    if (coords.size() != matrices.size())
      throw Error("representation: coordinate arity mismatch");
    Matrix out(degree, degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) continue;
      out = out + coords[i] * matrices[i];
    }
    return out;
  }
};

/// First pair where ρ fails to be a homomorphism, with the offending matrix.
struct HomDefect {
  std::size_t i = 0;
  std::size_t j = 0;
  Matrix defect;  // ρ(x_i)ρ(x_j) − ρ(x_j)ρ(x_i) − ρ([x_i, x_j])
};

/// Check [ρ(x_i), ρ(x_j)] == ρ([x_i, x_j]) for every pair of basis elements.
inline std::optional<HomDefect> verify_homomorphism(const Representation& rep,
                                                    const LieAlgebra& L) {
  if (rep.matrices.size() != L.dim())
    throw Error("verify: representation arity does not match the algebra");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Matrix commutator =
          rep.matrices[i] * rep.matrices[j] - rep.matrices[j] * rep.matrices[i];
      const Matrix defect = commutator - rep.act(L.bracket_basis(i, j));
      if (!defect.is_zero()) return HomDefect{i, j, defect};
    }
  return std::nullopt;
}

/// Basis of {x in g : ρ(x) = 0}; faithful exactly when this is empty.
inline std::vector<Vec> verify_faithful(const Representation& rep,
                                        const LieAlgebra& L) {
  if (rep.matrices.size() != L.dim())
    throw Error("verify: representation arity does not match the algebra");
  const std::size_t n2 = rep.degree * rep.degree;
  Matrix flat(n2, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t r = 0; r < rep.degree; ++r)
      for (std::size_t c = 0; c < rep.degree; ++c)
        flat(r * rep.degree + c, i) = rep.matrices[i](r, c);
  return kernel_basis(flat);
}

/// ad: x ↦ [x, ·]; kernel is the center, so faithful iff the center vanishes.
inline Representation adjoint_rep(const LieAlgebra& L) {
  std::vector<Matrix> mats;
  mats.reserve(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    mats.push_back(adjoint_matrix(L, i));
  return Representation(L.dim(), L.name(), L.labels(), L.labels(), std::move(mats));
}

/// Faithful representation of the abelian algebra of dimension k in degree
/// k + 1: the i-th generator becomes the matrix unit E_{i+1,0}.
inline Representation abelian_rep(std::size_t k, const std::string& name,
                                  const std::vector<std::string>& labels) {
  if (labels.size() != k) throw Error("abelian_rep: one label per generator");
  std::vector<Matrix> mats;
  std::vector<std::string> module_basis{"1"};
  for (std::size_t i = 0; i < k; ++i) {
    Matrix m(k + 1, k + 1);
    m(i + 1, 0) = 1;
    mats.push_back(std::move(m));
    module_basis.push_back(labels[i]);
  }
  return Representation(k + 1, name, labels, std::move(module_basis), std::move(mats));
}

/// Block-diagonal sum of two representations of the same algebra.
inline Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.matrices.size() != b.matrices.size() || a.labels != b.labels)
    throw Error("direct_sum: representations are of different algebras");
  const std::size_t deg = a.degree + b.degree;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    Matrix m(deg, deg);
    for (std::size_t r = 0; r < a.degree; ++r)
      for (std::size_t c = 0; c < a.degree; ++c) m(r, c) = a.matrices[i](r, c);
    for (std::size_t r = 0; r < b.degree; ++r)
      for (std::size_t c = 0; c < b.degree; ++c)
        m(a.degree + r, a.degree + c) = b.matrices[i](r, c);
    mats.push_back(std::move(m));
  }
  std::vector<std::string> module_basis = a.module_basis;
  module_basis.insert(module_basis.end(), b.module_basis.begin(), b.module_basis.end());
  return Representation(deg, a.algebra, a.labels, std::move(module_basis),
                        std::move(mats));
}

}  // namespace nilrep
