#pragma once

#include "toric/configuration.hpp"
#include "toric/gale.hpp"
#include "toric/verdict.hpp"

#include <optional>

namespace toric::engine {

/// Decides self-duality of the toric variety of an arbitrary configuration.
///
/// The configuration is regularized, lattice-normalized and deduplicated.
/// Repeat-free non-pyramidal input goes straight to the Gale line-sum test.
/// Otherwise the distinct points must split as exactly k apexes (k the
/// number of repeats) forming a lattice summand, and the remaining core must
/// pass the line-sum test; an empty core is the linear case.
Verdict is_self_dual(const Configuration &c);

/// Strong self-duality via balanced lines plus the signed binomial products
/// of each Gale column. Uses the canonical Gale basis unless `basis` is
/// given, in which case it must be a Gale dual of `c`.
///
/// Throws InapplicableCriterion unless `c` is regular and non-pyramidal.
Verdict is_strongly_self_dual(const Configuration &c,
                              const std::optional<IntMatrix> &basis = {});

/// Returns M when the weights are literally (Id Id ; 0 M) up to column order.
std::optional<IntMatrix> is_lawrence(const Configuration &c);

/// Odd-sum row subset of M over GF(2). Requires a non-pyramidal lift and a
/// saturated row lattice of M (the lift spans its lattice).
Verdict lawrence_strong_parity(const IntMatrix &m);

/// m when the Gale rows match the Segre pattern for P^1 x P^{m-1}.
std::optional<std::size_t> is_segre(const Configuration &c);

enum class HypersurfaceClass {
  Point,
  Conic,
  SegreQuadric,
  OtherHypersurface,
  NotHypersurface
};

const char *to_string(HypersurfaceClass h);

HypersurfaceClass hypersurface_class(const Configuration &c);

/// Smoothness test: at every vertex exactly dim edges leave and the vectors
/// to the nearest configuration point on each edge form a basis of the
/// difference lattice.
/// `false` means "not certified", not "singular".
Verdict smooth_certificate(const Configuration &c);

} // namespace toric::engine
