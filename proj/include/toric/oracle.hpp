#pragma once

// Brute-force referees. Everything here enumerates subsets and is guarded at
// n <= 12; none of it shares a decision path with the engine beyond the
// exact kernel/rank primitives.

#include "toric/configuration.hpp"
#include "toric/gale.hpp"

namespace toric::oracle {

inline constexpr std::size_t kEnumerationLimit = 12;

struct Circuit {
  IndexSet support;
  /// Primitive affine relation on all n points, zero off the support, first
  /// nonzero entry positive.
  IntVector relation;
};

struct Flat {
  IndexSet generators;
  IndexSet closure;
};

std::vector<Circuit> enumerate_circuits(const Configuration &c);

/// Indices grouped by identical circuit membership. Points in no circuit
/// form singleton classes.
std::vector<IndexSet> coparallel_via_circuits(const Configuration &c);

/// Every distinct flat closure; `generators` is the first subset found.
std::vector<Flat> enumerate_flats(const GaleDual &b);

/// Every flat of the Gale configuration sums to zero.
bool self_dual_via_flats(const GaleDual &b);

/// For every circuit v, the indicator of the zero set of v lies in the
/// rational row span of the weights. Requires a regular configuration.
bool self_dual_via_sigma(const Configuration &c);

/// Evaluates, on a grid of prime coordinates, the point (<s,b_1>,...,<s,b_n>)
/// in every binomial x^{v+} = x^{v-} from the Gale basis. With `samples`
/// greater than the binomial degree (or 0, meaning "pick that bound"), the
/// grid is large enough that agreement everywhere proves the identity.
bool strong_via_points(const Configuration &c, std::size_t samples = 0);

/// An affine functional vanishes on S and is <= -1 on the other points.
/// Decided by Fourier-Motzkin elimination over the rationals.
bool facial_via_separation(const Configuration &c, const IndexSet &subset);

} // namespace toric::oracle
