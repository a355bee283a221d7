#pragma once

#include "toric/configuration.hpp"

#include <cstdint>
#include <random>

namespace toric::sampling {

using Rng = std::mt19937_64;

struct Bounds {
  std::size_t max_points = 8;
  std::size_t max_affine_dim = 4;
  long max_entry = 3;
};

bool within(const Configuration &c, const Bounds &b);

/// n points with coordinates drawn uniformly from [-max_entry, max_entry]^d.
Configuration random_points(Rng &rng, std::size_t d, std::size_t n,
                            long max_entry);

/// Random points without repeats; 2 <= n <= max_points, 1 <= d <= 4.
Configuration random_repeat_free(Rng &rng, std::size_t max_points,
                                 long max_entry);

/// Non-pyramidal, repeat-free configurations within `bounds`. Mixes plain
/// random points, n = d + 2 configurations, Lawrence lifts and
/// configurations built from balanced Gale duals, so both verdicts occur.
std::vector<Configuration> selfdual_corpus(std::uint64_t seed,
                                           std::size_t count,
                                           const Bounds &bounds = {});

/// At most 4 x 4, entries in [-3, 3], saturated row lattice, and a
/// non-pyramidal Lawrence lift.
IntMatrix random_lawrence_matrix(Rng &rng);

} // namespace toric::sampling
