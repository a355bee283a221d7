#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/configuration.hpp"
#include "toric/generators.hpp"
#include "toric/linalg.hpp"

#include <random>

using namespace toric;

namespace {

Configuration conf(std::initializer_list<std::initializer_list<long>> rows) {
  return config::parse_configuration(IntMatrix(rows));
}

} // namespace

TEST_CASE("parse computes the regular and normalized flags") {
  Configuration segre = conf({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  CHECK(segre.regular);

  // (1,1) takes the value 1 on both columns.
  Configuration id = conf({{1, 0}, {0, 1}});
  CHECK(id.regular);
  CHECK(id.lattice_normalized);

  CHECK_FALSE(conf({{0, 1, 2}}).regular);

  CHECK_FALSE(conf({{2, 4}}).lattice_normalized);
  CHECK_THROWS_AS(config::parse_configuration(IntMatrix(2, 0)), InvalidInput);
}

TEST_CASE("regularize prepends a row of ones") {
  Configuration line = conf({{0, 1, 2}});
  Configuration reg = config::regularize(line);
  CHECK(reg.weights == IntMatrix{{1, 1, 1}, {0, 1, 2}});
  CHECK(reg.regular);

  Configuration segre = gen::segre(2);
  CHECK(config::regularize(segre) == segre);
}

TEST_CASE("regularize preserves affine relations") {
  Configuration cubic = conf({{0, 1, 2, 3}});
  Configuration reg = config::regularize(cubic);
  CHECK(reg.weights.rows() == 2);
  IntMatrix affine = config::affine_relations(cubic);
  CHECK(affine.cols() == 2);
  // Relations of the regular matrix are its plain linear kernel.
  CHECK(linalg::integer_kernel(reg.weights) == affine);
  CHECK(config::affine_relations(reg) == affine);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int t = 0; t < 40; ++t) {
    IntMatrix w(2, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        w(i, j) = dist(rng);
    Configuration c = config::parse_configuration(w);
    CHECK(config::affine_relations(config::regularize(c)) ==
          config::affine_relations(c));
  }
}

TEST_CASE("normalize_lattice divides out the content") {
  auto n = config::normalize_lattice(conf({{2, 4, 6}}));
  CHECK(n.config.weights == IntMatrix{{1, 2, 3}});
  CHECK(n.config.lattice_normalized);
  CHECK(config::affine_relations(n.config) ==
        config::affine_relations(conf({{2, 4, 6}})));
}

TEST_CASE("normalize_lattice leaves a spanning configuration alone") {
  Configuration missing = conf({{1, 1, 0, 0, 0, 0},
                                {0, 0, 1, 1, 0, 0},
                                {0, 0, 0, 0, 1, 1},
                                {2, 0, 0, 2, 0, 1}});
  CHECK(missing.lattice_normalized);
  auto n = config::normalize_lattice(missing);
  CHECK(n.config == missing);
  CHECK(n.projection == IntMatrix::identity(4));
}

TEST_CASE("normalize_lattice preserves relations on random input") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int t = 0; t < 40; ++t) {
    IntMatrix w(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        w(i, j) = 2 * dist(rng);
    if (w.is_zero())
      continue;
    Configuration c = config::parse_configuration(w);
    auto n = config::normalize_lattice(c);
    CHECK(n.config.lattice_normalized);
    CHECK(config::affine_relations(n.config) == config::affine_relations(c));
  }
  CHECK_THROWS_AS(config::normalize_lattice(conf({{0, 0}})), InvalidInput);
}

TEST_CASE("dedup counts repeats") {
  auto pair = config::dedup(conf({{1, 1}}));
  CHECK(pair.distinct.size() == 1);
  CHECK(pair.repeat_codim() == 1);

  CHECK(config::dedup(gen::segre(3)).repeat_codim() == 0);

  auto five = config::dedup(conf({{1, 1, 2, 2, 2}}));
  CHECK(five.multiplicity == std::vector<std::size_t>{2, 3});
  CHECK(five.repeat_codim() == 3);
  CHECK(five.index_map == std::vector<std::size_t>{0, 0, 1, 1, 1});
}

TEST_CASE("affine dimension") {
  CHECK(config::affine_dim(conf({{5}})) == 0);
  CHECK(config::affine_dim(gen::family_alpha(1)) == 4);
  CHECK(config::affine_dim(gen::segre(3)) == 3);
  Configuration c = conf({{0, 1, 2, 3}, {1, 0, 4, 2}});
  CHECK(config::affine_dim(c) ==
        linalg::rational_rank(config::regularize(c).weights) - 1);
}

TEST_CASE("pyramid decomposition") {
  auto segre = config::pyramid_decompose(gen::segre(2));
  CHECK(segre.apex_indices.empty());
  CHECK(segre.pyramid_order() == 0);

  auto cone = config::pyramid_decompose(
      conf({{1, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 0, 1}}));
  CHECK(cone.apex_indices == IndexSet{3});
  CHECK(cone.core_indices == IndexSet{0, 1, 2});
  CHECK(cone.splitting_valid);

  auto simplex = config::pyramid_decompose(
      config::parse_configuration(IntMatrix::identity(3)));
  CHECK(simplex.apex_indices == IndexSet{0, 1, 2});
  CHECK(simplex.core_indices.empty());
  CHECK(simplex.splitting_valid);

  CHECK_THROWS_AS(config::pyramid_decompose(conf({{1, 1}})), InvalidInput);
}

TEST_CASE("splitting failure is reported") {
  // Conic core in the plane z = 0, apex at height 2: the lattice spanned by
  // all columns misses (0,0,1).
  Configuration c = conf({{1, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 0, 2}});
  auto rep = config::pyramid_decompose(c);
  CHECK(rep.apex_indices == IndexSet{3});
  CHECK_FALSE(rep.splitting_valid);
  CHECK_FALSE(rep.splitting_failure.empty());
}

TEST_CASE("apex detection matches full-support relations") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> dist(-2, 2);
  for (int t = 0; t < 60; ++t) {
    IntMatrix w(2, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        w(i, j) = dist(rng);
    Configuration c = config::parse_configuration(w);
    if (config::has_repeats(c))
      continue;
    auto rep = config::decompose(c);
    CHECK(rep.apex_indices.size() + rep.core_indices.size() == c.size());
    // A generic combination of the kernel basis has support = core.
    IntMatrix k = config::affine_relations(c);
    IntVector coef(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
      coef[j] = Integer(1) << (7 * j);
    IntVector v = k * coef;
    IndexSet support;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0)
        support.push_back(i);
    CHECK(support == rep.core_indices);
  }
}
