#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/generators.hpp"
#include "toric/linalg.hpp"
#include "toric/sampling.hpp"
#include "toric/selfdual.hpp"

using namespace toric;

TEST_CASE("segre matrices") {
  Configuration s2 = gen::segre(2);
  CHECK(s2.weights == IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  CHECK(primitive_direction(gale::gale_dual(s2).matrix.column(0)) ==
        IntVector{1, -1, -1, 1});
  for (std::size_t m = 2; m <= 6; ++m) {
    Configuration s = gen::segre(m);
    CHECK(s.weights.rows() == m + 1);
    CHECK(s.size() == 2 * m);
    CHECK(engine::is_segre(s) == std::optional<std::size_t>(m));
    CHECK_FALSE(gale::gale_dual(s).has_zero_row());
  }
  CHECK_THROWS_AS(gen::segre(1), InvalidInput);
}

TEST_CASE("lawrence lifts") {
  IntMatrix m{{1, 2, 0}, {0, 1, 3}};
  Configuration c = gen::lawrence(m);
  CHECK(c.weights.rows() == 5);
  CHECK(c.size() == 6);
  // Relations are exactly (-v, v) for v in ker M.
  IntMatrix ker = linalg::integer_kernel(m);
  IntMatrix expected(6, ker.cols());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < ker.cols(); ++k) {
      expected(i, k) = -ker(i, k);
      expected(3 + i, k) = ker(i, k);
    }
  CHECK(linalg::column_lattice_basis(expected) ==
        gale::gale_dual(c).matrix);

  CHECK(gale::gale_dual(gen::lawrence(IntMatrix{{1, 0}})).has_zero_row());

  // (1,1,1) lift has the same relations as the Segre configuration.
  CHECK(gale::gale_dual(gen::lawrence(IntMatrix{{1, 1, 1}})).matrix ==
        gale::gale_dual(gen::segre(3)).matrix);
}

TEST_CASE("lawrence lifts of non-pyramidal matrices are self-dual") {
  sampling::Rng rng(2);
  for (int t = 0; t < 30; ++t)
    CHECK(engine::is_self_dual(
              gen::lawrence(sampling::random_lawrence_matrix(rng)))
              .value);
}

TEST_CASE("family alpha") {
  for (long a : {1L, 2L, 3L, -2L, 5L}) {
    Configuration c = gen::family_alpha(a);
    CHECK(config::affine_dim(c) == 4);
    CHECK(gale::verify_gale_dual(c, gen::printed_gale_alpha(a)));
    CHECK(engine::is_self_dual(c).value);
  }
  CHECK_THROWS_AS(gen::family_alpha(0), InvalidInput);
}

TEST_CASE("family of any dimension") {
  Configuration segre_like = gen::family_dim({1, -1});
  CHECK(config::affine_dim(segre_like) == 3);
  CHECK(engine::is_segre(segre_like) == std::optional<std::size_t>(3));

  Configuration two = gen::family_dim({2, -2});
  CHECK(config::affine_dim(two) == 3);
  CHECK(engine::is_self_dual(two).value);

  for (auto alphas : std::vector<std::vector<long>>{
           {1, 2, -3}, {3, -1, -1, -1}, {2, 2, -1, -3}}) {
    Configuration c = gen::family_dim(alphas);
    CHECK(config::affine_dim(c) == alphas.size() + 1);
    CHECK(engine::is_self_dual(c).value);
    CHECK(gale::verify_gale_dual(c, gen::gale_family_dim(alphas)));
  }
  CHECK_THROWS_AS(gen::family_dim({1, 1}), InvalidInput);
  CHECK_THROWS_AS(gen::family_dim({1, 0, -1}), InvalidInput);
  CHECK_THROWS_AS(gen::family_dim({1}), InvalidInput);
}

TEST_CASE("family of any codimension") {
  for (std::size_t m = 2; m <= 4; ++m)
    for (auto alphas : std::vector<std::vector<long>>{{1, -1}, {2, -1, -1}}) {
      Configuration c = gen::family_codim(m, alphas);
      std::size_t r = alphas.size();
      CHECK(c.size() == 2 * m + r);
      CHECK(config::affine_dim(c) == m + r - 1);
      CHECK(gale::gale_dual(c).rank() == m);
      CHECK_FALSE(gale::gale_dual(c).has_zero_row());
      CHECK(engine::is_self_dual(c).value);
    }
  CHECK_THROWS_AS(gen::family_codim(1, {1, -1}), InvalidInput);
}

TEST_CASE("configurations from Gale duals") {
  IntMatrix b = gale::gale_dual(gen::segre(2)).matrix;
  Configuration back = gen::config_from_gale(b);
  CHECK(gale::gale_dual(back).matrix == b);
  CHECK(back.regular);

  Configuration alpha = gen::config_from_gale(gen::printed_gale_alpha(1));
  CHECK(gale::gale_dual(alpha).matrix ==
        gale::gale_dual(gen::family_alpha(1)).matrix);

  CHECK(config::affine_dim(gen::config_from_gale(gen::gale_family_dim({1, -1}))) ==
        3);

  CHECK_THROWS_AS(gen::config_from_gale(IntMatrix{{1}, {1}}), InvalidInput);
  CHECK_THROWS_AS(gen::config_from_gale(IntMatrix{{1, 2}, {-1, -2}}),
                  InvalidInput);
  CHECK_THROWS_AS(gen::config_from_gale(IntMatrix{{2}, {-2}}), InvalidInput);
}

TEST_CASE("Gale round trip on random balanced inputs") {
  sampling::Rng rng(12);
  std::uniform_int_distribution<long> dist(-3, 3);
  int tried = 0;
  for (int t = 0; t < 200 && tried < 40; ++t) {
    std::size_t n = 3 + rng() % 5, r = 1 + rng() % 2;
    IntMatrix b(n, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer sum = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        b(i, k) = dist(rng);
        sum += b(i, k);
      }
      b(n - 1, k) = -sum;
    }
    if (linalg::rational_rank(b) != r || !linalg::is_saturated(b))
      continue;
    ++tried;
    CHECK(gale::verify_gale_dual(gen::config_from_gale(b), b));
  }
  CHECK(tried > 10);
}
