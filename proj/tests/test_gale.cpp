#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/gale.hpp"
#include "toric/generators.hpp"
#include "toric/linalg.hpp"
#include "toric/oracle.hpp"
#include "toric/sampling.hpp"

#include <algorithm>

using namespace toric;

namespace {

Configuration conf(std::initializer_list<std::initializer_list<long>> rows) {
  return config::parse_configuration(IntMatrix(rows));
}

Configuration strong_example() {
  return conf({{1, 0, 0, 0, 0, 0, 0, 1, 1},
               {0, 1, 0, 0, 0, 0, 0, 1, 1},
               {0, 0, 1, 0, 0, 0, 0, 2, 0},
               {0, 0, 0, 1, 0, 0, 0, 0, 2},
               {0, 0, 0, 0, 1, 0, 0, -2, -2},
               {0, 0, 0, 0, 0, 1, 0, -1, 0},
               {0, 0, 0, 0, 0, 0, 1, 0, -1}});
}

IntMatrix strong_example_gale() {
  return IntMatrix{{-2, 1}, {-2, 1}, {-2, 2}, {-2, 0}, {4, -2},
                   {1, -1}, {1, 0},  {1, -1}, {1, 0}};
}

std::vector<IndexSet> member_sets(const LinePartition &lp) {
  std::vector<IndexSet> out;
  for (const auto &c : lp.classes)
    out.push_back(c.members);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("Gale dual of A_alpha spans the printed lattice") {
  for (long a : {1L, 2L, 3L, -2L}) {
    Configuration c = gen::family_alpha(a);
    GaleDual b = gale::gale_dual(c);
    CHECK(b.rank() == 2);
    CHECK(linalg::column_lattice_basis(gen::printed_gale_alpha(a)) ==
          b.matrix);
    CHECK(gale::verify_gale_dual(c, gen::printed_gale_alpha(a)));
  }
}

TEST_CASE("Gale dual of the Segre quadric") {
  GaleDual b = gale::gale_dual(gen::segre(2));
  REQUIRE(b.rank() == 1);
  CHECK(primitive_direction(b.matrix.column(0)) == IntVector{1, -1, -1, 1});
}

TEST_CASE("Gale dual of a simplex has no columns") {
  Configuration simplex = conf({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
  GaleDual b = gale::gale_dual(simplex);
  CHECK(b.rank() == 0);
  CHECK(b.size() == 3);
}

TEST_CASE("Gale rows always sum to zero") {
  sampling::Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    Configuration c = sampling::random_repeat_free(rng, 8, 3);
    GaleDual b = gale::gale_dual(c);
    IntVector sum(b.rank());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t k = 0; k < b.rank(); ++k)
        sum[k] += b.matrix(i, k);
    CHECK(is_zero(sum));
    CHECK(gale::verify_gale_dual(c, b.matrix));
  }
}

TEST_CASE("verify_gale_dual rejects sublattices and accepts basis changes") {
  Configuration c = gen::family_alpha(1);
  IntMatrix b = gale::gale_dual(c).matrix;
  CHECK_FALSE(gale::verify_gale_dual(c, Integer(2) * b));
  IntMatrix swapped = b;
  swapped.swap_columns(0, 1);
  CHECK(gale::verify_gale_dual(c, swapped));
  CHECK(gale::verify_gale_dual(strong_example(), strong_example_gale()));
  CHECK_THROWS_AS(gale::verify_gale_dual(c, IntMatrix(3, 2)),
                  DimensionMismatch);
}

TEST_CASE("line partition of B_alpha") {
  LinePartition lp = gale::line_partition(GaleDual{gen::printed_gale_alpha(1)});
  CHECK(lp.zero_rows.empty());
  CHECK(member_sets(lp) ==
        std::vector<IndexSet>{{0, 1, 2}, {3, 4}, {5, 6}});
  for (const auto &c : lp.classes)
    CHECK(is_zero(c.sum));
}

TEST_CASE("line partition with all rows equal") {
  IntMatrix b{{1, 2}, {1, 2}, {1, 2}};
  LinePartition lp = gale::line_partition(GaleDual{b});
  REQUIRE(lp.classes.size() == 1);
  CHECK(lp.classes[0].sum == IntVector{3, 6});
}

TEST_CASE("line partition of the strongly self-dual example") {
  LinePartition lp = gale::line_partition(GaleDual{strong_example_gale()});
  CHECK(member_sets(lp) ==
        std::vector<IndexSet>{{0, 1, 4}, {2, 5, 7}, {3, 6, 8}});
  for (const auto &c : lp.classes)
    CHECK(is_zero(c.sum));
}

TEST_CASE("line sums") {
  CHECK(gale::line_sums_zero(GaleDual{gen::printed_gale_alpha(2)}).value);

  IntMatrix cubic{{1, 0}, {-2, 1}, {1, -2}, {0, 1}};
  Verdict v = gale::line_sums_zero(GaleDual{cubic});
  CHECK_FALSE(v.value);
  auto *bad = std::get_if<witness::ViolatingLine>(&v.witness);
  REQUIRE(bad);
  CHECK(bad->line.members.size() == 1);

  CHECK(gale::line_sums_zero(gale::gale_dual(conf({{0, 1, 3, 7}, {1, 0, 5, 2}})))
            .value);

  CHECK_THROWS_AS(gale::line_sums_zero(GaleDual{IntMatrix{{1}, {-1}, {0}}}),
                  InapplicableCriterion);
}

TEST_CASE("coparallel classes") {
  auto segre = gale::coparallel_classes(gale::gale_dual(gen::segre(2)));
  CHECK(segre.classes == std::vector<IndexSet>{{0, 1, 2, 3}});

  auto alpha = gale::coparallel_classes(GaleDual{gen::printed_gale_alpha(1)});
  CHECK(alpha.classes == std::vector<IndexSet>{{0, 1, 2}, {3, 4}, {5, 6}});

  auto anti = gale::coparallel_classes(GaleDual{IntMatrix{{1}, {-1}}});
  CHECK(anti.classes == std::vector<IndexSet>{{0, 1}});

  auto cone = gale::coparallel_classes(
      gale::gale_dual(conf({{1, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 0, 1}})));
  CHECK(cone.classes == std::vector<IndexSet>{{0, 1, 2}, {3}});
  CHECK(cone.pyramidal_singletons == IndexSet{3});
}

TEST_CASE("facial subsets") {
  Configuration seg = conf({{0, 1, 2}});
  CHECK(gale::is_facial(seg, {0, 1, 2}).value);
  CHECK(gale::is_facial(seg, {0}).value);
  CHECK(gale::is_facial(seg, {2}).value);
  Verdict mid = gale::is_facial(seg, {1});
  CHECK_FALSE(mid.value);
  CHECK(std::holds_alternative<witness::GaleSeparation>(mid.witness));
  CHECK_FALSE(gale::is_facial(seg, {0, 2}).value);

  Configuration tri = conf({{0, 1, 0}, {0, 0, 1}});
  Verdict edge = gale::is_facial(tri, {0, 1});
  CHECK(edge.value);
  CHECK(edge.criterion == "separating-functional");

  CHECK_THROWS_AS(gale::is_facial(seg, {}), InvalidInput);
  CHECK_THROWS_AS(gale::is_facial(seg, {5}), InvalidInput);
}

TEST_CASE("parallel face complements") {
  Configuration segre = gen::segre(2);
  // Columns 0 and 2 share the first coordinate.
  Verdict v = gale::is_parallel_face_complement(segre, {0, 2});
  CHECK(v.value);
  CHECK(gale::is_parallel_face_complement(segre, {0, 1, 2, 3}).value);
  // {0,1,2,3} on a line: {1} is not a face.
  Configuration line = config::regularize(conf({{0, 1, 2, 3}}));
  CHECK_FALSE(gale::is_parallel_face_complement(line, {1}).value);
}

TEST_CASE("coparallel criterion") {
  Verdict a = gale::coparallel_criterion(gen::family_alpha(1));
  CHECK(a.value);
  CHECK(a.criterion == "Aside");
  CHECK_FALSE(gale::coparallel_criterion(conf({{0, 1, 2, 3}})).value);
  CHECK_THROWS_AS(gale::coparallel_criterion(conf({{0, 1, 1, 2}})),
                  InapplicableCriterion);
  CHECK_THROWS_AS(
      gale::coparallel_criterion(conf({{1, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 0, 1}})),
      InapplicableCriterion);
}

TEST_CASE("self-dual configurations have facial coparallel classes of size two or more") {
  auto corpus = sampling::selfdual_corpus(77, 60);
  for (const auto &c : corpus) {
    GaleDual b = gale::gale_dual(c);
    if (!gale::line_sums_zero(b).value)
      continue;
    for (const auto &cls : gale::coparallel_classes(b).classes) {
      CHECK(cls.size() >= 2);
      CHECK(gale::is_facial(c, cls).value);
    }
  }
}

TEST_CASE("is_facial matches the separating functional oracle") {
  sampling::Rng rng(31);
  for (int t = 0; t < 15; ++t) {
    Configuration c = sampling::random_repeat_free(rng, 7, 3);
    for (unsigned long mask = 1; mask < (1ul << c.size()); ++mask) {
      IndexSet s;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1)
          s.push_back(i);
      CHECK(gale::is_facial(c, s).value ==
            oracle::facial_via_separation(c, s));
    }
  }
}
