#pragma once

#include "toric/configuration.hpp"
#include "toric/verdict.hpp"

namespace toric {

/// n x r integer matrix whose columns form a saturated basis of the affine
/// relation lattice. Its rows b_1..b_n are the Gale dual configuration.
struct GaleDual {
  IntMatrix matrix;

  std::size_t size() const noexcept { return matrix.rows(); }
  std::size_t rank() const noexcept { return matrix.cols(); }
  IntVector row(std::size_t i) const { return matrix.row(i); }
  bool has_zero_row() const;
};

struct LinePartition {
  std::vector<LineClass> classes;
  IndexSet zero_rows;
};

namespace gale {

/// Canonical (Hermite form) Gale dual of the configuration.
GaleDual gale_dual(const Configuration &c);

/// The columns of b are affine relations, independent, and span the full
/// relation lattice.
bool verify_gale_dual(const Configuration &c, const IntMatrix &b);

LinePartition line_partition(const GaleDual &b);

/// Every line through the origin carries Gale rows summing to zero.
/// Throws InapplicableCriterion on zero rows.
Verdict line_sums_zero(const GaleDual &b);

/// Indices grouped by parallel Gale rows. Zero rows become singleton classes
/// and are reported in `pyramidal_singletons`.
struct CoparallelPartition {
  std::vector<IndexSet> classes;
  IndexSet pyramidal_singletons;
};

CoparallelPartition coparallel_classes(const GaleDual &b);

/// S is A intersected with a face of Conv(A).
Verdict is_facial(const Configuration &c, const IndexSet &subset);

/// A linear functional equals 0 on the points outside C and 1 on C.
Verdict is_parallel_face_complement(const Configuration &c,
                                    const IndexSet &cls);

/// Every coparallelism class is a parallel face complement.
Verdict coparallel_criterion(const Configuration &c);

} // namespace gale
} // namespace toric
