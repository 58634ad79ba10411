#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "nilrep/matrix.hpp"
#include "nilrep/rational.hpp"
#include "nilrep/subspace.hpp"

using namespace nilrep;
using nt::mat;
using nt::vec;

TEST_CASE("scalar parsing and formatting") {
  CHECK(to_string(parse_rational("3/4")) == "3/4");
  CHECK(to_string(parse_rational("-3/7")) == "-3/7");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("3/-7")) == "-3/7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("scalar arithmetic is exact") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    const Rational a = nt::rnd_rational(rng);
    const Rational b = nt::rnd_rational(rng);
    CHECK(Rational((a + b) - b) == a);
    if (b != 0) CHECK(Rational((a / b) * b) == a);
  }
  // No rounding on denominators far beyond machine precision.
  const Rational tiny = parse_rational("1/1000000000000000000000000000000");
  CHECK(Rational(Rational(1) + tiny) != Rational(1));
}

TEST_CASE("rref canonical form") {
  SECTION("identity is fixed") {
    auto [r, pivots] = rref(Matrix::identity(3));
    CHECK(r == Matrix::identity(3));
    CHECK(pivots == std::vector<std::size_t>{0, 1, 2});
  }
  SECTION("proportional rows collapse") {
    auto [r, pivots] = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r == mat({{1, 2}, {0, 0}}));
    CHECK(pivots == std::vector<std::size_t>{0});
  }
  SECTION("zero matrix") {
    auto [r, pivots] = rref(Matrix(2, 2));
    CHECK(r == Matrix(2, 2));
    CHECK(pivots.empty());
  }
  SECTION("row swap needed") {
    auto [r, pivots] = rref(mat({{0, 2}, {1, 3}}));
    CHECK(r == Matrix::identity(2));
    CHECK(pivots == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix(3, 5)) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}, {0, 1}})) == 2);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  CHECK(kernel_basis(Matrix(1, 2)).size() == 2);
  const auto k = kernel_basis(mat({{1, 2}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({-2, 1}));
}

TEST_CASE("solve row combination") {
  const auto c = solve_row_combination(Matrix::identity(2), vec({3, 4}));
  REQUIRE(c.has_value());
  CHECK(*c == vec({3, 4}));
  CHECK_FALSE(solve_row_combination(mat({{1, 2}}), vec({1, 0})).has_value());
  const auto d = solve_row_combination(mat({{1, 1}, {0, 1}}), vec({2, 5}));
  REQUIRE(d.has_value());
  CHECK(*d == vec({2, 3}));
}

TEST_CASE("random matrices: rank-nullity, exact kernels, row equivalence") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const Matrix m = nt::rnd_matrix(rng, rows, cols);
    const auto [r, pivots] = rref(m);

    CHECK(pivots.size() + kernel_basis(m).size() == cols);
    CHECK(std::is_sorted(pivots.begin(), pivots.end()));

    for (const Vec& v : kernel_basis(m)) CHECK(is_zero(m.apply(v)));

    // rref is idempotent (canonical).
    CHECK(rref(r).first == r);

    // Row equivalence both ways: each row of one is an explicit combination
    // of the rows of the other.
    for (std::size_t i = 0; i < rows; ++i) {
      CHECK(solve_row_combination(m, r.row(i)).has_value());
      const auto back = solve_row_combination(r, m.row(i));
      REQUIRE(back.has_value());
      Vec rebuilt(cols, Rational(0));
      for (std::size_t j = 0; j < rows; ++j) add_scaled(rebuilt, (*back)[j], r.row(j));
      CHECK(rebuilt == m.row(i));
    }
  }
}

TEST_CASE("matrix product and apply") {
  const Matrix a = mat({{1, 2}, {3, 4}});
  const Matrix b = mat({{0, 1}, {1, 0}});
  CHECK(a * b == mat({{2, 1}, {4, 3}}));
  CHECK(a * Matrix::identity(2) == a);
  CHECK(a.apply(vec({1, 1})) == vec({3, 7}));
  CHECK(a.transpose() == mat({{1, 3}, {2, 4}}));
}

TEST_CASE("subspace canonical form and lattice operations") {
  const Subspace s = Subspace::span(2, {vec({2, 4}), vec({1, 2})});
  CHECK(s.dim() == 1);
  CHECK(s.contains(vec({1, 2})));
  CHECK_FALSE(s.contains(vec({1, 0})));

  // Same space from different generators compares equal.
  CHECK(Subspace::span(2, {vec({1, 1}), vec({1, -1})}) == Subspace::full(2));

  const Subspace xaxis = Subspace::span(2, {vec({1, 0})});
  const Subspace yaxis = Subspace::span(2, {vec({0, 1})});
  CHECK(sum(xaxis, yaxis) == Subspace::full(2));
  CHECK(intersect(xaxis, yaxis) == Subspace::zero(2));

  const Subspace xy = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  const Subspace yz = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(intersect(xy, yz) == Subspace::span(3, {vec({0, 1, 0})}));

  CHECK(xy.reduce(vec({1, 2, 3})) == vec({0, 0, 3}));
  CHECK(xy.contains(Subspace::span(3, {vec({1, 1, 0})})));
  CHECK_FALSE(xy.contains(yz));
  CHECK(Subspace::zero(3).is_zero_space());
  CHECK(Subspace::full(3).dim() == 3);
}

TEST_CASE("random subspace properties") {
  std::mt19937 rng(7171);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = dim(rng);
    const Subspace a = Subspace::span(n, nt::rows_of(nt::rnd_matrix(rng, dim(rng), n)));
    const Subspace b = Subspace::span(n, nt::rows_of(nt::rnd_matrix(rng, dim(rng), n)));
    const Subspace meet = intersect(a, b);
    const Subspace join = sum(a, b);
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(join.contains(a));
    CHECK(join.contains(b));
    CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(is_zero(a.reduce(a.basis_row(i))));
  }
}
