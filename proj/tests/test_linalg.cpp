#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/linalg.hpp"

#include <random>

using namespace toric;
using namespace toric::linalg;

namespace {

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c,
                        long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = dist(rng);
  return m;
}

bool unimodular(const IntMatrix &u) { return abs(determinant(u)) == 1; }

} // namespace

TEST_CASE("hermite form of the identity is trivial") {
  auto hf = hermite_normal_form(IntMatrix::identity(3));
  CHECK(hf.h == IntMatrix::identity(3));
  CHECK(hf.u == IntMatrix::identity(3));
  CHECK(hf.rank == 3);
}

TEST_CASE("hermite form of [[2,4],[0,2]]") {
  IntMatrix m{{2, 4}, {0, 2}};
  auto hf = hermite_normal_form(m);
  CHECK(m * hf.u == hf.h);
  CHECK(unimodular(hf.u));
  CHECK(abs(determinant(hf.h)) == 4);
  CHECK(hf.rank == 2);
}

TEST_CASE("hermite form of the zero matrix") {
  IntMatrix z(2, 2);
  auto hf = hermite_normal_form(z);
  CHECK(hf.h == z);
  CHECK(hf.u == IntMatrix::identity(2));
  CHECK(hf.rank == 0);
}

TEST_CASE("smith form examples") {
  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.s == IntMatrix::identity(3));

  IntMatrix a{{2, 0}, {0, 3}};
  auto sa = smith_normal_form(a);
  CHECK(sa.diagonal() == IntVector{1, 6});
  CHECK(sa.u * a * sa.v == sa.s);

  IntMatrix b{{1, 1}, {1, 1}};
  auto sb = smith_normal_form(b);
  CHECK(sb.diagonal() == IntVector{1, 0});
  CHECK(sb.rank() == 1);
}

TEST_CASE("hermite and smith transforms are unimodular on random input") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, 5);
    auto hf = hermite_normal_form(m);
    CHECK(m * hf.u == hf.h);
    CHECK(unimodular(hf.u));
    auto sf = smith_normal_form(m);
    CHECK(sf.u * m * sf.v == sf.s);
    CHECK(unimodular(sf.u));
    CHECK(unimodular(sf.v));
    auto d = sf.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0)
        CHECK(d[i + 1] % d[i] == 0);
      else
        CHECK(d[i + 1] == 0);
    }
  }
}

TEST_CASE("integer kernel of three collinear points") {
  IntMatrix m{{1, 1, 1}, {0, 1, 2}};
  IntMatrix k = integer_kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(primitive_direction(k.column(0)) == IntVector{1, -2, 1});
}

TEST_CASE("integer kernel of the identity is empty") {
  CHECK(integer_kernel(IntMatrix::identity(4)).cols() == 0);
}

TEST_CASE("integer kernel of the twisted cubic") {
  IntMatrix m{{1, 1, 1, 1}, {0, 1, 2, 3}};
  IntMatrix expected = IntMatrix::from_columns({{1, -2, 1, 0}, {0, 1, -2, 1}}, 4);
  CHECK(column_lattice_basis(integer_kernel(m)) ==
        column_lattice_basis(expected));
}

TEST_CASE("integer kernel is annihilated and saturated") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 80; ++t) {
    std::size_t r = 1 + rng() % 3, c = 2 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, 4);
    // Scale a row to make saturation matter.
    for (std::size_t j = 0; j < c; ++j)
      m(0, j) *= static_cast<long>(2 + rng() % 6);
    IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() == c - rational_rank(m));
    if (k.cols() > 0) {
      for (const auto &x : smith_normal_form(k).diagonal())
        CHECK(x == 1);
      CHECK(is_saturated(k));
    }
  }
}

TEST_CASE("saturation detects an index-2 sublattice") {
  IntMatrix k{{2}, {-4}, {2}};
  CHECK_FALSE(is_saturated(k));
  CHECK(primitive_direction(saturate_columns(k).column(0)) ==
        IntVector{1, -2, 1});
}

TEST_CASE("rational rank") {
  CHECK(rational_rank(IntMatrix::identity(3)) == 3);
  CHECK(rational_rank(IntMatrix(3, 2)) == 0);
  CHECK(rational_rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("row span membership") {
  IntMatrix m{{1, 1, 1}, {0, 1, 2}};
  CHECK(in_row_span(m, to_rational(m.row(1))));
  CHECK(in_row_span(m, RatVector(3)));
  CHECK_FALSE(in_row_span(m, RatVector{1, 0, 0}));
  CHECK_THROWS_AS(in_row_span(m, RatVector{1, 0}), DimensionMismatch);
}

TEST_CASE("determinant is exact on large entries") {
  Integer big("1000000000000000000000000000001");
  IntMatrix m(2, 2);
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = big - 1;
  m(1, 1) = big;
  // big^2 - (big^2 - 1) = 1
  CHECK(determinant(m) == 1);
}

TEST_CASE("positive dependency examples") {
  auto anti = positive_dependency({{1}, {-1}});
  REQUIRE(anti);
  CHECK((*anti)[0] > 0);
  CHECK((*anti)[0] == (*anti)[1]);

  CHECK_FALSE(positive_dependency({{1, 0}, {0, 1}}));

  auto diag = positive_dependency({{1, 1}, {-1, -1}});
  REQUIRE(diag);
  CHECK((*diag)[0] == (*diag)[1]);

  CHECK_THROWS_AS(positive_dependency({}), InvalidInput);
}

TEST_CASE("positive dependency witnesses recheck on random rows") {
  std::mt19937_64 rng(3);
  int found = 0, refuted = 0;
  for (int t = 0; t < 150; ++t) {
    std::size_t n = 1 + rng() % 6, r = 1 + rng() % 3;
    std::vector<IntVector> rows;
    std::uniform_int_distribution<long> dist(-3, 3);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector v(r);
      for (auto &x : v)
        x = dist(rng);
      rows.push_back(v);
    }
    auto res = positive_dependency_certified(rows);
    if (auto *coef = std::get_if<RatVector>(&res)) {
      ++found;
      RatVector sum(r);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK((*coef)[i] > 0);
        for (std::size_t j = 0; j < r; ++j)
          sum[j] += (*coef)[i] * rows[i][j];
      }
      for (const auto &x : sum)
        CHECK(x == 0);
    } else {
      ++refuted;
      const auto &y = std::get<NoPositiveDependency>(res).direction;
      bool strict = false;
      for (const auto &row : rows) {
        Rational s = 0;
        for (std::size_t j = 0; j < r; ++j)
          s += y[j] * row[j];
        CHECK(s >= 0);
        strict = strict || s > 0;
      }
      CHECK(strict);
    }
  }
  CHECK(found > 0);
  CHECK(refuted > 0);
}

TEST_CASE("solve returns an exact solution or nothing") {
  IntMatrix m{{1, 1}, {1, -1}};
  auto x = solve(m, RatVector{1, 0});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 2));
  CHECK_FALSE(solve(IntMatrix{{1, 1}, {2, 2}}, RatVector{1, 0}));
}

TEST_CASE("odd row subsets over GF(2)") {
  auto ones = gf2_rows_summing_to_ones(IntMatrix{{1, 1, 1}});
  REQUIRE(ones);
  CHECK(*ones == IndexSet{0});
  CHECK_FALSE(gf2_rows_summing_to_ones(IntMatrix{{2, 1}}));
  CHECK_FALSE(gf2_rows_summing_to_ones(IntMatrix(2, 3)));
  auto two = gf2_rows_summing_to_ones(IntMatrix{{1, 0}, {0, 1}});
  REQUIRE(two);
  CHECK(*two == IndexSet{0, 1});
}
