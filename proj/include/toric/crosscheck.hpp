#pragma once

#include "toric/configuration.hpp"

#include <cstdint>
#include <string>

namespace toric::crosscheck {

struct SweepResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t checks = 0;
  /// Instances on which the property held with a "true" verdict, where the
  /// sweep has a meaningful notion of positive (e.g. self-dual).
  std::size_t positives = 0;
  std::size_t violations = 0;
  /// First few violations, described.
  std::vector<std::string> examples;
  bool passed() const noexcept { return instances > 0 && violations == 0; }
};

/// line_sums_zero, self_dual_via_flats, self_dual_via_sigma,
/// coparallel_criterion and is_self_dual agree on every instance.
SweepResult selfdual_equivalence(const std::vector<Configuration> &corpus);

/// lawrence_strong_parity(M) == is_strongly_self_dual(lawrence(M)), and the
/// lift is always self-dual.
SweepResult lawrence_parity(std::uint64_t seed, std::size_t count);

/// Parallel Gale rows give the same partition as circuit membership.
SweepResult coparallel_equivalence(std::uint64_t seed, std::size_t count);

/// is_facial agrees with facial_via_separation on every nonempty subset.
SweepResult facial_equivalence(std::uint64_t seed, std::size_t count,
                               std::size_t max_points = 7);

/// Every non-pyramidal subset of a self-dual instance is facial and
/// self-dual. `positives` counts proper subsets checked.
SweepResult hereditary(const std::vector<Configuration> &corpus);

/// Non-pyramidal instances with n = affine_dim + 2 are self-dual.
SweepResult hypersurface_law(const std::vector<Configuration> &corpus);

/// strong_via_points agrees with is_strongly_self_dual on the corpus
/// (regularized). Instances with a large sample grid are skipped.
SweepResult strong_equivalence(const std::vector<Configuration> &corpus);

/// All sweeps, with `count` instances each, seeded from `seed`.
std::vector<SweepResult> run_all(std::uint64_t seed, std::size_t count);

std::string describe(const Configuration &c);

} // namespace toric::crosscheck
