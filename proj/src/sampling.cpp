#include "toric/sampling.hpp"

#include "toric/gale.hpp"
#include "toric/generators.hpp"
#include "toric/linalg.hpp"

#include <algorithm>

namespace toric::sampling {

namespace {

long uniform(Rng &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols,
                        long max_entry) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = uniform(rng, -max_entry, max_entry);
  return m;
}

// Gale rows grouped on a few lines through the origin, each line summing to
// zero. Returns an empty matrix when the draw is unusable.
IntMatrix balanced_gale(Rng &rng) {
  const std::size_t r = static_cast<std::size_t>(uniform(rng, 2, 3));
  const std::size_t max_rows = r + 5; // affine_dim <= 4
  const std::size_t lines = static_cast<std::size_t>(uniform(rng, r + 1, r + 2));
  std::vector<IntVector> rows;
  for (std::size_t l = 0; l < lines; ++l) {
    IntVector dir(r);
    do {
      for (auto &x : dir)
        x = uniform(rng, -1, 1);
    } while (is_zero(dir));
    const std::size_t count = uniform(rng, 0, 3) == 0 ? 3 : 2;
    std::vector<long> coef;
    long sum = 0;
    for (std::size_t k = 0; k + 1 < count; ++k) {
      long c = 0;
      while (c == 0)
        c = uniform(rng, -2, 2);
      coef.push_back(c);
      sum += c;
    }
    if (sum == 0)
      return {};
    coef.push_back(-sum);
    for (long c : coef) {
      IntVector row = dir;
      for (auto &x : row)
        x *= c;
      rows.push_back(row);
    }
  }
  if (rows.size() > max_rows)
    return {};
  std::shuffle(rows.begin(), rows.end(), rng);
  return IntMatrix::from_rows(rows, r);
}

// Pairwise size reduction of the rows; the row lattice is unchanged.
IntMatrix reduce_rows(IntMatrix w) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < w.rows(); ++i)
    rows.push_back(w.row(i));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (i == j || is_zero(rows[j]))
          continue;
        Rational ratio(dot(rows[i], rows[j]), dot(rows[j], rows[j]));
        ratio.canonicalize();
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), Rational(ratio + Rational(1, 2)).get_num_mpz_t(),
                   Rational(ratio + Rational(1, 2)).get_den_mpz_t());
        if (q == 0)
          continue;
        IntVector next = rows[i];
        for (std::size_t k = 0; k < next.size(); ++k)
          next[k] -= q * rows[j][k];
        if (dot(next, next) < dot(rows[i], rows[i])) {
          rows[i] = std::move(next);
          changed = true;
        }
      }
  }
  return IntMatrix::from_rows(rows, w.cols());
}

Configuration candidate(Rng &rng, std::size_t kind) {
  static constexpr int kMix[] = {0, 0, 1, 2, 3, 3};
  switch (kMix[kind % 6]) {
  case 0: {
    std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::size_t n = static_cast<std::size_t>(uniform(rng, d + 3, 8));
    return random_points(rng, d, n, 3);
  }
  case 1: {
    std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 4));
    return random_points(rng, d, d + 2, 3);
  }
  case 2: {
    std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::size_t cols = static_cast<std::size_t>(uniform(rng, 2, 4));
    return gen::lawrence(random_matrix(rng, rows, cols, 3));
  }
  default: {
    IntMatrix b = balanced_gale(rng);
    if (b.empty() || linalg::rational_rank(b) != b.cols())
      return {};
    // A rational change of basis: lines and their zero sums survive.
    b = linalg::saturate_columns(b);
    return config::parse_configuration(
        reduce_rows(gen::config_from_gale(b).weights));
  }
  }
}

} // namespace

bool within(const Configuration &c, const Bounds &b) {
  if (c.size() == 0 || c.size() > b.max_points)
    return false;
  for (const auto &x : c.weights.entries())
    if (abs(x) > b.max_entry)
      return false;
  return config::affine_dim(c) <= b.max_affine_dim;
}

Configuration random_points(Rng &rng, std::size_t d, std::size_t n,
                            long max_entry) {
  return config::parse_configuration(random_matrix(rng, d, n, max_entry));
}

Configuration random_repeat_free(Rng &rng, std::size_t max_points,
                                 long max_entry) {
  for (;;) {
    std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::size_t n =
        static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_points)));
    Configuration c = random_points(rng, d, n, max_entry);
    if (!config::has_repeats(c))
      return c;
  }
}

std::vector<Configuration> selfdual_corpus(std::uint64_t seed,
                                           std::size_t count,
                                           const Bounds &bounds) {
  Rng rng(seed);
  std::vector<Configuration> out;
  // Slot i always draws from the same kind, so rejections do not skew the
  // mix.
  for (std::size_t slot = 0; out.size() < count; ++slot) {
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt > 10000)
        throw Error("selfdual_corpus: sampler is not producing instances");
      Configuration c = candidate(rng, slot);
      if (c.size() < 2 || !within(c, bounds) || config::has_repeats(c))
        continue;
      if (gale::gale_dual(c).has_zero_row())
        continue;
      out.push_back(std::move(c));
      break;
    }
  }
  return out;
}

IntMatrix random_lawrence_matrix(Rng &rng) {
  for (;;) {
    std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 4));
    IntMatrix m = random_matrix(rng, rows, cols, 3);
    IntMatrix ker = linalg::integer_kernel(m);
    if (ker.cols() == 0)
      continue;
    bool pyramidal = false;
    for (std::size_t i = 0; i < ker.rows(); ++i)
      pyramidal = pyramidal || is_zero(ker.row(i));
    if (pyramidal)
      continue;
    bool saturated = true;
    for (const auto &x : linalg::smith_normal_form(m).diagonal())
      saturated = saturated && x <= 1;
    if (saturated)
      return m;
  }
}

} // namespace toric::sampling
