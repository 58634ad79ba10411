#ifndef NILREP_FILTRATION_HPP
#define NILREP_FILTRATION_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/subspace.hpp"

namespace nilrep {

/// Weights live in N plus a distinguished infinity (reserved for the zero
/// element of the enveloping algebra).
using Weight = unsigned long long;
inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max();

inline Weight weight_add(Weight a, Weight b) {
  if (a == kInfiniteWeight || b == kInfiniteWeight) return kInfiniteWeight;
  if (a > kInfiniteWeight - b) return kInfiniteWeight;
  return a + b;
}

inline Weight weight_scale(unsigned long long n, Weight w) {
  if (n == 0) return 0;
  if (w == kInfiniteWeight) return kInfiniteWeight;
  if (w != 0 && n > kInfiniteWeight / w) return kInfiniteWeight;
  return n * w;
}

using WeightVector = std::vector<Weight>;

/// Descending flag F(0) ⊇ F(1) ⊇ … stored up to its stable tail; F(t) for t
/// beyond the list is the last stored subspace.
class Filtration {
 public:
  explicit Filtration(std::vector<Subspace> spaces) : spaces_(std::move(spaces)) {
    if (spaces_.empty()) throw Error("filtration needs at least one subspace");
    for (std::size_t t = 0; t + 1 < spaces_.size(); ++t)
      if (!spaces_[t].contains(spaces_[t + 1]))
        throw Error("filtration not descending at level " + std::to_string(t));
  }

  const Subspace& at(std::size_t t) const {
    return spaces_[std::min(t, spaces_.size() - 1)];
  }
  std::size_t size() const { return spaces_.size(); }
  const std::vector<Subspace>& spaces() const { return spaces_; }
  std::size_t ambient_dim() const { return spaces_.front().ambient_dim(); }

  bool positive() const { return at(0) == at(1); }
  bool terminates_at_zero() const { return spaces_.back().is_zero_space(); }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    d.reserve(spaces_.size());
    for (const auto& s : spaces_) d.push_back(s.dim());
    return d;
  }

 private:
  std::vector<Subspace> spaces_;
};

/// The (G,H)-filtration: F(0) = G, F(1) = H, F(i) = i-th lower central term
/// of H. Verifies [F(i), F(j)] ⊆ F(i+j) on all stored pairs.
inline Filtration ideal_filtration(const LieAlgebra& L, const Subspace& G, const Subspace& H) {
  if (G.ambient_dim() != L.dim() || H.ambient_dim() != L.dim())
    throw Error("ideal_filtration: ambient dimension mismatch");
  if (!G.contains(H)) throw Error("ideal_filtration: H is not contained in G");
  if (!H.contains(product_space(L, G, H)))
    throw Error("ideal_filtration: H is not an ideal of G");

  std::vector<Subspace> spaces{G};
  for (const auto& term : lower_central_series(L, H)) spaces.push_back(term);

  Filtration f{std::move(spaces)};
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i; j < f.size(); ++j)
      if (!f.at(i + j).contains(product_space(L, f.at(i), f.at(j))))
        throw Error("ideal_filtration: filtration condition fails at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
  return f;
}

/// [M, M, 0]: every nonzero element of M has weight exactly 1 (length weight).
inline Filtration length_filtration(const Subspace& M) {
  return Filtration{{M, M, Subspace::zero(M.ambient_dim())}};
}

/// Basis of the common top space weakly adapted to both flags: a subset of the
/// result spans every subspace of either flag. Cells (i,j) are processed by
/// decreasing i+j (ties by decreasing i); at each cell the vectors collected in
/// deeper cells span (A(i+1) ∩ B(j)) + (A(i) ∩ B(j+1)), and rref rows of
/// A(i) ∩ B(j) complete them. Output is ordered by increasing cell depth.
inline std::vector<Vec> adapt_two_flags(std::vector<Subspace> flag_a,
                                        std::vector<Subspace> flag_b) {
  if (flag_a.empty() || flag_b.empty()) throw Error("adapt_two_flags: empty flag");
  const std::size_t n = flag_a.front().ambient_dim();
  for (const auto& s : flag_a)
    if (s.ambient_dim() != n) throw Error("adapt_two_flags: ambient dimension mismatch");
  for (const auto& s : flag_b)
    if (s.ambient_dim() != n) throw Error("adapt_two_flags: ambient dimension mismatch");
  for (std::size_t t = 0; t + 1 < flag_a.size(); ++t)
    if (!flag_a[t].contains(flag_a[t + 1])) throw Error("adapt_two_flags: flag not descending");
  for (std::size_t t = 0; t + 1 < flag_b.size(); ++t)
    if (!flag_b[t].contains(flag_b[t + 1])) throw Error("adapt_two_flags: flag not descending");
  if (flag_a.front() != flag_b.front())
    throw Error("adapt_two_flags: flags must start at the same space");

  // The sweep needs the chains to bottom out.
  if (!flag_a.back().is_zero_space()) flag_a.push_back(Subspace::zero(n));
  if (!flag_b.back().is_zero_space()) flag_b.push_back(Subspace::zero(n));

  struct Cell {
    std::size_t i, j;
    std::vector<Vec> picked;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < flag_a.size(); ++i)
    for (std::size_t j = 0; j < flag_b.size(); ++j) cells.push_back({i, j, {}});
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    if (x.i + x.j != y.i + y.j) return x.i + x.j > y.i + y.j;
    return x.i > y.i;
  });

  for (auto& cell : cells) {
    const Subspace target = intersect(flag_a[cell.i], flag_b[cell.j]);
    if (target.is_zero_space()) continue;
    std::vector<Vec> deeper;
    for (const auto& done : cells) {
      if (!done.picked.empty() && done.i >= cell.i && done.j >= cell.j &&
          !(done.i == cell.i && done.j == cell.j))
        for (const auto& v : done.picked) deeper.push_back(v);
    }
    Subspace covered = Subspace::span(n, deeper);
    for (std::size_t r = 0; r < target.dim(); ++r) {
      Vec candidate = target.basis_row(r);
      if (covered.contains(candidate)) continue;
      cell.picked.push_back(candidate);
      deeper.push_back(std::move(candidate));
      covered = Subspace::span(n, deeper);
    }
  }

  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
    return x.i < y.i;
  });
  std::vector<Vec> basis;
  for (const auto& cell : cells)
    for (const auto& v : cell.picked) basis.push_back(v);
  return basis;
}

/// ω(x_j) = sup{t : x_j ∈ F(t)} per basis vector. The basis must be weakly
/// adapted to F; infinite only when F has a stable nonzero tail containing the
/// vector.
inline WeightVector weights_from_filtration(const Filtration& f, const std::vector<Vec>& basis) {
  const std::size_t n = f.ambient_dim();
  for (const auto& v : basis)
    if (v.size() != n) throw Error("weights_from_filtration: vector length mismatch");
  if (basis.size() != f.at(0).dim() ||
      Subspace::span(n, basis).dim() != basis.size())
    throw Error("weights_from_filtration: not a basis of F(0)");

  for (std::size_t t = 0; t < f.size(); ++t) {
    std::size_t inside = 0;
    for (const auto& v : basis)
      if (f.at(t).contains(v)) ++inside;
    if (inside != f.at(t).dim())
      throw Error("weights_from_filtration: basis not adapted at level " + std::to_string(t));
  }

  WeightVector w;
  w.reserve(basis.size());
  for (const auto& v : basis) {
    std::size_t last = 0;
    while (last + 1 < f.size() && f.at(last + 1).contains(v)) ++last;
    const bool in_stable_tail = (last + 1 == f.size()) && !f.spaces().back().is_zero_space();
    w.push_back(in_stable_tail ? kInfiniteWeight : Weight(last));
  }
  return w;
}

/// sup{t : v ∈ F(t)} for an arbitrary vector; ∞ for the zero vector or a
/// vector in a stable nonzero tail, 0 when v is not even in F(0).
inline Weight vector_weight(const Filtration& f, const Vec& v) {
  if (is_zero(v)) return kInfiniteWeight;
  std::size_t last = 0;
  if (!f.at(0).contains(v)) return 0;
  while (last + 1 < f.size() && f.at(last + 1).contains(v)) ++last;
  if (last + 1 == f.size() && !f.spaces().back().is_zero_space()) return kInfiniteWeight;
  return Weight(last);
}

}  // namespace nilrep

#endif
