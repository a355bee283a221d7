#pragma once

#include "toric/matrix.hpp"

#include <vector>

namespace toric::lp {

/// Outcome of deciding {x >= 0 : A x = b} exactly.
///
/// When feasible, `x` is a basic feasible solution. Otherwise `farkas` is a
/// vector y with A^T y >= 0 and <b, y> < 0.
struct FeasibilityResult {
  bool feasible = false;
  RatVector x;
  RatVector farkas;
};

/// Phase-one simplex over the rationals with Bland's rule, so it terminates
/// on degenerate input. `a` is given as rows.
FeasibilityResult solve_feasibility(const std::vector<RatVector> &a,
                                    const RatVector &b);

} // namespace toric::lp
