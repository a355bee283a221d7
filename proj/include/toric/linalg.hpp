#pragma once

// Exact integer and rational linear algebra. Everything here works on GMP
// integers/rationals; nothing rounds.

#include "toric/matrix.hpp"

#include <optional>
#include <variant>

namespace toric::linalg {

/// Column Hermite form: `m * u == h`, `u` unimodular. The nonzero columns of
/// `h` come first and form a column echelon basis of the lattice spanned by
/// the columns of `m`; pivots are positive and entries left of a pivot are
/// reduced into [0, pivot). Two matrices span the same column lattice iff
/// their `h` agree.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  IndexSet pivot_rows;
};

HermiteForm hermite_normal_form(const IntMatrix &m);

/// `u * m * v == s` with `s` diagonal, d1 | d2 | ..., all di >= 0.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;

  IntVector diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

/// Z-basis (as columns) of the saturated lattice {v in Z^n : m v = 0}, in
/// canonical Hermite form.
IntMatrix integer_kernel(const IntMatrix &m);

/// Canonical basis (columns) of the lattice spanned by the columns of m.
IntMatrix column_lattice_basis(const IntMatrix &m);

/// Basis of (Q-span of columns of m) intersected with Z^rows.
IntMatrix saturate_columns(const IntMatrix &m);

/// True iff the column lattice of m equals its saturation.
bool is_saturated(const IntMatrix &m);

std::size_t rational_rank(const IntMatrix &m);
std::size_t rational_rank(const std::vector<RatVector> &rows,
                          std::size_t cols);

Integer determinant(const IntMatrix &m);

/// True iff v is a rational combination of rows of m.
bool in_row_span(const IntMatrix &m, const RatVector &v);

/// Some x with m x = b, or nullopt.
std::optional<RatVector> solve(const IntMatrix &m, const RatVector &b);

/// Q-basis of {v : m v = 0}, as rational vectors.
std::vector<RatVector> rational_kernel(const IntMatrix &m);

/// Witness that no strictly positive dependency exists: a direction y with
/// <row_i, y> >= 0 for all i and not all zero.
struct NoPositiveDependency {
  RatVector direction;
};

using PositiveDependencyResult = std::variant<RatVector, NoPositiveDependency>;

/// Strictly positive rationals r with sum r_i * rows_i = 0, or a separating
/// direction proving none exist. Both outcomes are rechecked exactly.
PositiveDependencyResult
positive_dependency_certified(const std::vector<IntVector> &rows);

std::optional<RatVector>
positive_dependency(const std::vector<IntVector> &rows);

/// Subset I of rows of m whose sum is odd in every column, or nullopt.
std::optional<IndexSet> gf2_rows_summing_to_ones(const IntMatrix &m);

} // namespace toric::linalg
