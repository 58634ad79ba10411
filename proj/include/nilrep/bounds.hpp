#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "nilrep/filtration.hpp"
#include "nilrep/lie_algebra.hpp"

namespace nilrep {

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// Δ(t; M): the number of ways to write t as a nonnegative integer combination
/// of the parts in M, multiplicities respected.
inline Integer denumerant(unsigned long t, const std::vector<unsigned long>& parts) {
  for (const unsigned long m : parts)
    if (m == 0) throw Error("denumerant: parts must be positive");
  std::vector<Integer> dp(t + 1, Integer(0));
  dp[0] = 1;
  for (const unsigned long m : parts)
    for (unsigned long s = m; s <= t; ++s) dp[s] += dp[s - m];
  return dp[t];
}

/// binom(p + t − 1, t − 1), an upper bound for Δ(t; M) with |M| = p once t ≥ 1.
/// At t = 0 the binomial degenerates to 0 although Δ(0; M) = 1; return 1 there.
inline Integer denumerant_bound(unsigned long t, unsigned long p) {
  if (t == 0) return 1;
  return binomial(p + t - 1, t - 1);
}

/// Dimension bound for the truncated module:
/// binom(dim m + dim(m/h), dim(m/h)) · binom(dim m + c(h), c(h)).
inline Integer prop_bound(unsigned long dim_m, unsigned long codim_h,
                          unsigned long class_h) {
  if (codim_h > dim_m) throw Error("prop_bound: codimension exceeds the dimension");
  return binomial(dim_m + codim_h, codim_h) * binomial(dim_m + class_h, class_h);
}

/// μ(g) ≤ d − n + binom(r + ε1, ε1) · binom(r + ε2, ε2).
inline Integer theorem_bound(unsigned long d, unsigned long n, unsigned long r,
                             unsigned long e1, unsigned long e2) {
  if (n > r || r > d)
    throw Error("theorem_bound: need dim(nilradical) <= dim(radical) <= dim");
  return Integer(d - n) + binomial(r + e1, e1) * binomial(r + e2, e2);
}

/// P_ε(d) = d + (d+1)(d+2)⋯(d+ε) / (⌊ε/2⌋! · ⌈ε/2⌉!); the product is empty
/// (= 1) for ε = 0.
inline Integer p_epsilon(unsigned long e, unsigned long d) {
  Integer rising = 1;
  for (unsigned long i = 1; i <= e; ++i) rising *= Integer(d + i);
  Integer quotient;
  mpz_divexact(quotient.get_mpz_t(), rising.get_mpz_t(),
               Integer(factorial(e / 2) * factorial(e - e / 2)).get_mpz_t());
  return Integer(d) + quotient;
}

/// Σ_{i=0}^{c} d^i = (d^{c+1} − 1)/(d − 1), in the form that survives d = 1.
inline Integer birkhoff_dim(unsigned long d, unsigned long c) {
  if (d == 0) throw Error("birkhoff_dim: d must be at least 1");
  Integer total = 0, power = 1;
  for (unsigned long i = 0; i <= c; ++i) {
    total += power;
    power *= Integer(d);
  }
  return total;
}

/// ε(R, H) = dim(R/H) + c(H) for a nilpotent ideal H of L inside R.
inline std::size_t nil_defect_of_ideal(const LieAlgebra& L, const Subspace& R,
                                       const Subspace& H) {
  if (!R.contains(H)) throw Error("nil_defect: ideal not contained in the radical");
  if (!is_ideal(L, H)) throw Error("nil_defect: not an ideal");
  if (!lower_central_series(L, H).back().is_zero_space())
    throw Error("nil_defect: ideal is not nilpotent");
  return R.dim() - H.dim() + nilpotency_class(L, H);
}

struct NilDefectResult {
  std::size_t defect = 0;
  Subspace witness;
};

/// Minimum of ε(R, ·) over a documented candidate family: R itself, its lower
/// central and derived series, the upper central series of L (and intersections
/// with R), and subspaces spanned by all-but-at-most-max_subset vectors of a
/// basis adapted to both series. An upper bound for the true nil-defect.
inline NilDefectResult nil_defect_search(const LieAlgebra& L, const Subspace& R,
                                         std::size_t max_subset = 2) {
  if (!is_solvable(L, R)) throw Error("nil_defect: radical candidate is not solvable");

  std::vector<Subspace> candidates{R};
  const auto lcs = lower_central_series(L, R);
  const auto der = derived_series(L, R);
  candidates.insert(candidates.end(), lcs.begin(), lcs.end());
  candidates.insert(candidates.end(), der.begin(), der.end());
  for (const Subspace& z : upper_central_series(L)) {
    candidates.push_back(z);
    candidates.push_back(intersect(z, R));
  }

  if (R.dim() > 0) {
    // Basis adapted to both series, then drop up to max_subset vectors.
    std::vector<Subspace> flag_a(lcs.begin(), lcs.end());
    std::vector<Subspace> flag_b(der.begin(), der.end());
    const std::vector<Vec> adapted = adapt_two_flags(flag_a, flag_b);
    const std::size_t k = adapted.size();
    std::vector<std::size_t> removed;
    const auto enumerate_removals = [&](auto&& self, std::size_t start) -> void {
      if (!removed.empty()) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < k; ++i) {
          if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
          rows.push_back(adapted[i]);
        }
        candidates.push_back(Subspace::span(L.dim(), rows));
      }
      if (removed.size() == max_subset) return;
      for (std::size_t i = start; i < k; ++i) {
        removed.push_back(i);
        self(self, i + 1);
        removed.pop_back();
      }
    };
    enumerate_removals(enumerate_removals, 0);
  }

  NilDefectResult best;
  bool found = false;
  std::vector<Subspace> seen;
  for (const Subspace& c : candidates) {
    bool duplicate = false;
    for (const Subspace& s : seen) duplicate = duplicate || s == c;
    if (duplicate) continue;
    seen.push_back(c);
    if (!R.contains(c) || !is_ideal(L, c)) continue;
    if (!lower_central_series(L, c).back().is_zero_space()) continue;
    const std::size_t defect = R.dim() - c.dim() + nilpotency_class(L, c);
    if (!found || defect < best.defect) {
      best = NilDefectResult{defect, c};
      found = true;
    }
  }
  if (!found) throw Error("nil_defect: no nilpotent ideal found (impossible)");
  return best;
}

/// Everything the bound report card shows for one built representation.
struct BoundReport {
  std::size_t achieved_degree = 0;
  Integer prop_bound = 0;
  Integer theorem_bound = 0;
  Integer birkhoff = 0;
  std::size_t d = 0, n = 0, r = 0, e1 = 0, e2 = 0;
  std::size_t class_m = 0, class_h = 0;
};

}  // namespace nilrep
