#ifndef NILREP_TEST_HELPERS_HPP
#define NILREP_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/matrix.hpp"
#include "nilrep/subspace.hpp"

namespace nt {

using namespace nilrep;

inline Vec vec(const std::vector<long>& entries) {
  Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

inline Matrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) vs.push_back(vec(r));
  return Matrix::from_rows(vs);
}

inline Rational rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Matrix rnd_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rnd_rational(rng);
  return m;
}

inline std::vector<Vec> rows_of(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

// [x,y] = z.
inline LieAlgebra heisenberg3() {
  LieAlgebra L(3, "heisenberg3", {"x", "y", "z"});
  L.set_bracket(0, 1, {{2, Rational(1)}});
  return L;
}

// [e1, e_i] = e_{i+1} for 2 <= i < d.
inline LieAlgebra filiform(std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= d; ++i) labels.push_back("e" + std::to_string(i));
  LieAlgebra L(d, "filiform" + std::to_string(d), std::move(labels));
  for (std::size_t i = 1; i + 1 < d; ++i) L.set_bracket(0, i, {{i + 1, Rational(1)}});
  return L;
}

inline LieAlgebra abelian(std::size_t d) {
  return LieAlgebra(d, "abelian" + std::to_string(d));
}

// Basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline LieAlgebra sl2() {
  LieAlgebra L(3, "sl2", {"e", "f", "h"});
  L.set_bracket(0, 1, {{2, Rational(1)}});
  L.set_bracket(0, 2, {{0, Rational(-2)}});
  L.set_bracket(1, 2, {{1, Rational(2)}});
  return L;
}

// [delta, x] = x.
inline LieAlgebra solvable2() {
  LieAlgebra L(2, "solvable2", {"delta", "x"});
  L.set_bracket(0, 1, {{1, Rational(1)}});
  return L;
}

// p = span{a, t} acting on a Heisenberg m = span{x, y, z}; a is central, so
// the action kernel p0 is span{a}. [t,x]=x, [t,y]=y, [t,z]=2z, [x,y]=z.
inline LieAlgebra solvable5() {
  LieAlgebra L(5, "solvable5_p0", {"a", "t", "x", "y", "z"});
  L.set_bracket(1, 2, {{2, Rational(1)}});
  L.set_bracket(1, 3, {{3, Rational(1)}});
  L.set_bracket(1, 4, {{4, Rational(2)}});
  L.set_bracket(2, 3, {{4, Rational(1)}});
  return L;
}

inline LieAlgebra sl2_plus_center() {
  LieAlgebra L(4, "sl2_plus_center", {"e", "f", "h", "w"});
  L.set_bracket(0, 1, {{2, Rational(1)}});
  L.set_bracket(0, 2, {{0, Rational(-2)}});
  L.set_bracket(1, 2, {{1, Rational(2)}});
  return L;
}

// Central line plus a Heisenberg ideal: a1 sits in p, kills m = span{x, y, z}.
inline LieAlgebra a1_h3() {
  LieAlgebra L(4, "a1_h3", {"a", "x", "y", "z"});
  L.set_bracket(1, 2, {{3, Rational(1)}});
  return L;
}

// Five-dimensional Heisenberg: [x1,y1] = [x2,y2] = z.
inline LieAlgebra heisenberg5() {
  LieAlgebra L(5, "heisenberg5", {"x1", "x2", "y1", "y2", "z"});
  L.set_bracket(0, 2, {{4, Rational(1)}});
  L.set_bracket(1, 3, {{4, Rational(1)}});
  return L;
}

}  // namespace nt

#endif
