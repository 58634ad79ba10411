#ifndef NILREP_PBW_HPP
#define NILREP_PBW_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/filtration.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/matrix.hpp"

namespace nilrep {

/// Exponent vector of a standard monomial x_1^{a_1} ··· x_d^{a_d} over the
/// ordered generator basis of m.
using Monomial = std::vector<std::uint32_t>;

inline std::size_t mono_length(const Monomial& a) {
  return std::accumulate(a.begin(), a.end(), std::size_t{0});
}

/// "x1*x2^2" style; "1" for the empty monomial.
inline std::string to_string(const Monomial& a) {
  std::string out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j + 1);
    if (a[j] > 1) out += "^" + std::to_string(a[j]);
  }
  return out.empty() ? "1" : out;
}

/// Graded-lexicographic order: total degree first, then exponent vectors
/// compared lexicographically with x1 heaviest.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const std::size_t la = mono_length(a), lb = mono_length(b);
  if (la != lb) return la < lb;
  return b < a;  // higher exponents on early generators come first
}

/// Sparse element of U(m): monomial -> coefficient, zeros never stored.
class UElement {
 public:
  UElement() = default;

  static UElement monomial(Monomial a, Rational c = Rational(1)) {
    UElement e;
    if (c != 0) e.terms_.emplace(std::move(a), std::move(c));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& a, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  UElement& operator+=(const UElement& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }

  UElement& operator-=(const UElement& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, Rational(-c));
    return *this;
  }

  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }

  friend UElement operator*(const Rational& c, const UElement& e) {
    UElement out;
    if (c == 0) return out;
    for (const auto& [a, coeff] : e.terms_) out.terms_.emplace(a, Rational(c * coeff));
    return out;
  }

  bool operator==(const UElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const UElement& o) const { return !(*this == o); }

 private:
  std::map<Monomial, Rational> terms_;
};

/// ω(X^α) = Σ α_j · ω(x_j); 0 for the empty monomial.
inline Weight mono_weight(const WeightVector& w, const Monomial& a) {
  if (w.size() != a.size()) throw Error("mono_weight: arity mismatch");
  Weight total = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    total = weight_add(total, weight_scale(a[j], w[j]));
  return total;
}

/// min over the stored monomials; ∞ exactly for the zero element.
inline Weight elem_weight(const WeightVector& w, const UElement& x) {
  Weight best = kInfiniteWeight;
  for (const auto& [a, c] : x.terms()) best = std::min(best, mono_weight(w, a));
  return best;
}

/// U(m) for a subalgebra m of L with a fixed ordered basis (the generators,
/// given in ambient coordinates). Provides PBW straightening, the left
/// multiplication action of m and the derivation action of p.
class EnvelopingAlgebra {
 public:
  EnvelopingAlgebra(const LieAlgebra& ambient, std::vector<Vec> generators)
      : ambient_(ambient), gens_(std::move(generators)) {
    for (const auto& g : gens_)
      if (g.size() != ambient_.dim()) throw Error("enveloping: generator length mismatch");
    gen_matrix_ = gens_.empty() ? Matrix(0, ambient_.dim()) : Matrix::from_rows(gens_);
    if (rank(gen_matrix_) != gens_.size())
      throw Error("enveloping: generators are linearly dependent");
    const std::size_t d = gens_.size();
    gamma_.assign(d, std::vector<Vec>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        Vec br = ambient_.bracket(gens_[a], gens_[b]);
        auto coords = solve_row_combination(gen_matrix_, br);
        if (!coords)
          throw Error("enveloping: generators are not closed under the bracket");
        gamma_[a][b] = std::move(*coords);
      }
  }

  EnvelopingAlgebra(const EnvelopingAlgebra&) = delete;
  EnvelopingAlgebra& operator=(const EnvelopingAlgebra&) = delete;

  std::size_t num_gens() const { return gens_.size(); }
  const std::vector<Vec>& generators() const { return gens_; }
  const LieAlgebra& ambient() const { return ambient_; }

  /// Coordinates of an ambient vector in the generator basis; error if the
  /// vector lies outside m.
  Vec m_coordinates(const Vec& ambient_vec) const {
    auto coords = solve_row_combination(gen_matrix_, ambient_vec);
    if (!coords) throw Error("enveloping: vector lies outside m");
    return *coords;
  }

  /// PBW normal form of x_i · X^α.
  UElement straighten_mono(std::size_t i, const Monomial& a) const {
    if (i >= num_gens()) throw Error("straighten: generator index out of range");
    // First support index; inserting before it is already normal.
    std::size_t j = 0;
    while (j < a.size() && a[j] == 0) ++j;
    if (j == a.size() || i <= j) {
      Monomial out = a;
      ++out[i];
      return UElement::monomial(std::move(out));
    }

    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find({i, a});
      if (it != memo_.end()) return it->second;
    }

    // x_i x_j W = x_j x_i W + [x_i, x_j] W with j the smallest generator in α.
    Monomial rest = a;
    --rest[j];
    UElement result = mult_gen(j, straighten_mono(i, rest));
    const Vec& bracket = gamma_[i][j];
    for (std::size_t c = 0; c < bracket.size(); ++c)
      if (bracket[c] != 0) result += bracket[c] * straighten_mono(c, rest);

    std::lock_guard<std::mutex> lock(memo_mutex_);
    return memo_.emplace(std::make_pair(i, a), std::move(result)).first->second;
  }

  /// x_i · X for a general element.
  UElement mult_gen(std::size_t i, const UElement& x) const {
    UElement out;
    for (const auto& [a, c] : x.terms()) out += c * straighten_mono(i, a);
    return out;
  }

  /// Left multiplication by the element of m with the given generator
  /// coordinates.
  UElement mult_vec(const Vec& coords, const UElement& x) const {
    if (coords.size() != num_gens()) throw Error("mult_vec: coordinate arity mismatch");
    UElement out;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) out += coords[i] * mult_gen(i, x);
    return out;
  }

  /// Derivation action of δ (ambient coordinates): Leibniz over the positions
  /// of each monomial, each term renormalized. Requires [δ, m] ⊆ m.
  UElement derive(const Vec& delta, const UElement& x) const {
    if (delta.size() != ambient_.dim()) throw Error("derive: ambient length mismatch");
    const std::size_t d = num_gens();
    std::vector<Vec> action(d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec br = ambient_.bracket(delta, gens_[b]);
      auto coords = solve_row_combination(gen_matrix_, br);
      if (!coords) throw Error("derive: bracket leaves m");
      action[b] = std::move(*coords);
    }

    UElement out;
    for (const auto& [a, coeff] : x.terms()) {
      for (std::size_t b = 0; b < d; ++b) {
        if (a[b] == 0) continue;
        for (std::size_t c = 0; c < d; ++c) {
          if (action[b][c] == 0) continue;
          // Replace the j-th copy of x_b in place — the copies are not
          // interchangeable once x_c fails to commute with x_b.
          for (std::uint32_t j = 0; j < a[b]; ++j) {
            Monomial tail(a.size(), 0);
            tail[b] = a[b] - 1 - j;
            for (std::size_t t = b + 1; t < d; ++t) tail[t] = a[t];
            UElement term = straighten_mono(c, tail);
            for (std::uint32_t rep = 0; rep < j; ++rep) term = mult_gen(b, term);
            for (std::size_t p = b; p-- > 0;)
              for (std::uint32_t rep = 0; rep < a[p]; ++rep) term = mult_gen(p, term);
            out += Rational(coeff * action[b][c]) * term;
          }
        }
      }
    }
    return out;
  }

 private:
  LieAlgebra ambient_;
  std::vector<Vec> gens_;
  Matrix gen_matrix_;
  std::vector<std::vector<Vec>> gamma_;  // gamma_[a][b] = [y_a, y_b] in m-coordinates
  mutable std::map<std::pair<std::size_t, Monomial>, UElement> memo_;
  mutable std::mutex memo_mutex_;
};

/// All monomials α with mono_weight(w1, α) ≤ b1 and mono_weight(w2, α) ≤ b2,
/// in graded-lexicographic order. Finiteness needs every w1 entry positive.
inline std::vector<Monomial> enumerate_bounded(const WeightVector& w1, Weight b1,
                                               const WeightVector& w2, Weight b2) {
  if (w1.size() != w2.size()) throw Error("enumerate: weight vector arity mismatch");
  if (b1 == kInfiniteWeight) throw Error("enumerate: first budget must be finite");
  for (const Weight w : w1)
    if (w == 0) throw Error("enumerate: weight vector has a zero entry (not positive)");

  std::vector<Monomial> found;
  Monomial current(w1.size(), 0);
  // DFS over positions with remaining budget on both weights.
  auto visit = [&](auto&& self, std::size_t pos, Weight r1, Weight r2) -> void {
    if (pos == current.size()) {
      found.push_back(current);
      return;
    }
    self(self, pos + 1, r1, r2);
    for (std::uint32_t e = 1;; ++e) {
      const Weight c1 = weight_scale(e, w1[pos]);
      const Weight c2 = weight_scale(e, w2[pos]);
      if (c1 > r1 || c2 > r2) break;
      current[pos] = e;
      self(self, pos + 1, r1 - c1, r2 - c2);
    }
    current[pos] = 0;
  };
  visit(visit, 0, b1, b2);
  std::sort(found.begin(), found.end(), graded_lex_less);
  return found;
}

}  // namespace nilrep

#endif
