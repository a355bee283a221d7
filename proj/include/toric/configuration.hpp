#pragma once

#include "toric/matrix.hpp"

#include <optional>

namespace toric {

/// A lattice point configuration: column i of `weights` is the i-th point.
/// Columns may repeat.
struct Configuration {
  IntMatrix weights;
  /// Some rational linear functional equals 1 on every column.
  bool regular = false;
  /// The columns span Z^d.
  bool lattice_normalized = false;

  std::size_t dim() const noexcept { return weights.rows(); }
  std::size_t size() const noexcept { return weights.cols(); }
  IntVector point(std::size_t i) const { return weights.column(i); }

  friend bool operator==(const Configuration &,
                         const Configuration &) = default;
};

/// Points grouped by equality. `distinct` keeps first occurrences in order.
struct DedupReport {
  Configuration distinct;
  /// Number of copies of each distinct point (k_i + 1).
  std::vector<std::size_t> multiplicity;
  /// original index -> distinct index
  std::vector<std::size_t> index_map;

  /// k = n - h, the codimension of the linear span of the variety.
  std::size_t repeat_codim() const;
};

/// Shape (k, r, m) of the join: empty part of dimension k - 1, a linear
/// space spanned by r apexes, and the non-pyramidal core of m points.
struct JoinShape {
  std::size_t k = 0;
  std::size_t apex = 0;
  std::size_t core = 0;
};

struct DecompositionReport {
  std::size_t repeat_codim = 0;
  /// Indices into the distinct configuration whose Gale row is zero.
  IndexSet apex_indices;
  IndexSet core_indices;
  /// Lattice direct-sum check between apex and core columns.
  bool splitting_valid = false;
  /// Which part of the splitting check failed, empty when valid.
  std::string splitting_failure;
  JoinShape join_shape;

  std::size_t pyramid_order() const noexcept { return apex_indices.size(); }
};

namespace config {

/// Validates the matrix and computes the regular/normalized flags.
Configuration parse_configuration(const IntMatrix &matrix);

/// Prepends an all-ones row unless the configuration is already regular.
Configuration regularize(const Configuration &c);

/// [1 ... 1 ; weights]: its integer kernel is the affine relation lattice.
IntMatrix affine_matrix(const Configuration &c);

/// Saturated basis of the affine relations (columns).
IntMatrix affine_relations(const Configuration &c);

/// c' = diag(1/divisors) * projection * c. The rows of `projection` are the
/// leading rows of a unimodular Smith transform; `divisors` are the nonzero
/// invariant factors.
struct LatticeNormalization {
  Configuration config;
  IntMatrix projection;
  IntVector divisors;
};

LatticeNormalization normalize_lattice(const Configuration &c);

DedupReport dedup(const Configuration &c);

std::size_t affine_dim(const Configuration &c);

/// Requires a repeat-free configuration. Apexes are the points outside
/// every affine relation.
DecompositionReport pyramid_decompose(const Configuration &c);

/// dedup followed by pyramid_decompose, with the repeat codimension filled in.
DecompositionReport decompose(const Configuration &c);

/// Subconfiguration on the given indices, flags recomputed.
Configuration subconfiguration(const Configuration &c, const IndexSet &idx);

bool has_repeats(const Configuration &c);

} // namespace config
} // namespace toric
