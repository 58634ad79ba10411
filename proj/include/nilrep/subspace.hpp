#ifndef NILREP_SUBSPACE_HPP
#define NILREP_SUBSPACE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nilrep/matrix.hpp"

namespace nilrep {

/// Subspace of Q^n in canonical form: the basis matrix equals its own rref,
/// one row per basis vector. Equality of subspaces is representation equality.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw Error("span: vector length != ambient dimension");
    if (vectors.empty()) return zero(ambient);
    auto [r, pivots] = rref(Matrix::from_rows(vectors));
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) s.basis_(i, j) = r(i, j);
    s.pivots_ = pivots;
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  std::vector<Vec> basis_rows() const {
    std::vector<Vec> rows;
    rows.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    return rows;
  }

  /// Residual of v after eliminating the pivot coordinates; zero iff v lies here.
  Vec reduce(const Vec& v) const {
    if (v.size() != ambient_) throw Error("reduce: vector length != ambient dimension");
    Vec r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rational c = r[pivots_[i]];
      if (c != 0) add_scaled(r, -c, basis_.row(i));
    }
    return r;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_row(i))) return false;
    return true;
  }

  bool is_zero_space() const { return dim() == 0; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("sum: ambient dimension mismatch");
  auto rows = a.basis_rows();
  for (auto& r : b.basis_rows()) rows.push_back(std::move(r));
  return Subspace::span(a.ambient_dim(), rows);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("intersect: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // u*A = v*B  <=>  (u,v) in the kernel of [A; -B]^T.
  const std::size_t n = a.ambient_dim();
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, a.dim() + i) = -b.basis()(i, j);
  std::vector<Vec> points;
  for (const auto& w : kernel_basis(stacked)) {
    Vec point(n, Rational(0));
    for (std::size_t i = 0; i < a.dim(); ++i) add_scaled(point, w[i], a.basis_row(i));
    points.push_back(std::move(point));
  }
  return Subspace::span(n, points);
}

}  // namespace nilrep

#endif
