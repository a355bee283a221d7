#pragma once

// Re-checks engine verdicts with the brute-force oracles and checks that
// each witness says what it claims.

#include "toric/configuration.hpp"
#include "toric/verdict.hpp"

namespace toric::verify {

struct Outcome {
  std::string method;
  bool agrees = false;
  std::vector<std::string> details;
};

Outcome self_dual(const Configuration &c, const Verdict &v);
Outcome strong(const Configuration &c, const Verdict &v);
Outcome facial(const Configuration &c, const IndexSet &subset,
               const Verdict &v);
Outcome smoothness(const Configuration &c, const Verdict &v);
Outcome lawrence_parity(const IntMatrix &m, const Verdict &v);

} // namespace toric::verify
