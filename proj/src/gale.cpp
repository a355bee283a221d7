#include "toric/gale.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <map>

namespace toric {

bool GaleDual::has_zero_row() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (is_zero(row(i)))
      return true;
  return false;
}

namespace gale {

namespace {

IndexSet normalized_subset(const IndexSet &s, std::size_t n) {
  IndexSet out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= n)
    throw InvalidInput("subset index out of range");
  return out;
}

IndexSet complement(const IndexSet &s, std::size_t n) {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

// Affine functional equal to -1 on `neg` and 0 on every other point; exists
// whenever the points are affinely independent.
std::optional<witness::Functional>
affine_functional(const Configuration &c, const IndexSet &neg) {
  IntMatrix a = config::affine_matrix(c).transpose(); // n x (d + 1)
  RatVector rhs(c.size());
  for (auto i : neg)
    rhs[i] = -1;
  auto sol = linalg::solve(a, rhs);
  if (!sol)
    return std::nullopt;
  witness::Functional f;
  f.constant = (*sol)[0];
  f.linear.assign(sol->begin() + 1, sol->end());
  return f;
}

} // namespace

GaleDual gale_dual(const Configuration &c) {
  return GaleDual{config::affine_relations(c)};
}

bool verify_gale_dual(const Configuration &c, const IntMatrix &b) {
  if (b.rows() != c.size())
    throw DimensionMismatch("verify_gale_dual: row count differs from n");
  IntMatrix relations = config::affine_matrix(c) * b;
  if (!relations.is_zero())
    return false;
  if (linalg::rational_rank(b) != b.cols())
    return false;
  return linalg::column_lattice_basis(b) == gale_dual(c).matrix;
}

LinePartition line_partition(const GaleDual &b) {
  LinePartition lp;
  std::map<IntVector, std::size_t> by_direction;
  for (std::size_t i = 0; i < b.size(); ++i) {
    IntVector r = b.row(i);
    if (is_zero(r)) {
      lp.zero_rows.push_back(i);
      continue;
    }
    IntVector dir = primitive_direction(r);
    auto [it, fresh] = by_direction.emplace(dir, lp.classes.size());
    if (fresh)
      lp.classes.push_back({dir, {}, IntVector(b.rank())});
    LineClass &cls = lp.classes[it->second];
    cls.members.push_back(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      cls.sum[j] += r[j];
  }
  return lp;
}

Verdict line_sums_zero(const GaleDual &b) {
  if (b.has_zero_row())
    throw InapplicableCriterion(
        "Bside", "a non-pyramidal configuration (no zero Gale row)");
  LinePartition lp = line_partition(b);
  Verdict v;
  v.criterion = "Bside";
  for (const auto &cls : lp.classes)
    if (!is_zero(cls.sum)) {
      v.value = false;
      v.witness = witness::ViolatingLine{cls};
      return v;
    }
  v.value = true;
  v.witness = witness::BalancedLines{lp.classes};
  return v;
}

CoparallelPartition coparallel_classes(const GaleDual &b) {
  LinePartition lp = line_partition(b);
  CoparallelPartition out;
  for (const auto &cls : lp.classes)
    out.classes.push_back(cls.members);
  for (auto z : lp.zero_rows) {
    out.classes.push_back({z});
    out.pyramidal_singletons.push_back(z);
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

Verdict is_facial(const Configuration &c, const IndexSet &subset) {
  IndexSet s = normalized_subset(subset, c.size());
  if (s.empty())
    throw InvalidInput("is_facial: subset must be nonempty");
  IndexSet rest = complement(s, c.size());
  Verdict v;
  v.criterion = "positive-gale-dependency";
  if (rest.empty()) {
    v.value = true;
    v.witness = witness::PositiveRelation{{}, {}};
    v.notes.push_back("improper face");
    return v;
  }

  GaleDual b = gale_dual(c);
  if (b.rank() == 0) {
    // No relations: the points are affinely independent and every subset is
    // cut out by an affine functional.
    v.criterion = "separating-functional";
    auto f = affine_functional(c, rest);
    if (!f)
      throw std::logic_error("is_facial: independent points not separable");
    v.value = true;
    v.witness = *f;
    return v;
  }

  std::vector<IntVector> rows;
  for (auto i : rest)
    rows.push_back(b.row(i));
  auto res = linalg::positive_dependency_certified(rows);
  if (auto *r = std::get_if<RatVector>(&res)) {
    v.value = true;
    v.witness = witness::PositiveRelation{rest, *r};
  } else {
    v.value = false;
    v.witness = witness::GaleSeparation{
        rest, std::get<linalg::NoPositiveDependency>(res).direction};
  }
  return v;
}

Verdict is_parallel_face_complement(const Configuration &c,
                                    const IndexSet &cls) {
  IndexSet s = normalized_subset(cls, c.size());
  if (s.empty())
    throw InvalidInput("is_parallel_face_complement: class must be nonempty");
  RatVector target(c.size());
  for (auto i : s)
    target[i] = 1;
  Verdict v;
  v.criterion = "parallel-face-complement";
  auto ell = linalg::solve(c.weights.transpose(), target);
  v.value = ell.has_value();
  if (ell)
    v.witness = witness::Functional{Rational(0), *ell};
  return v;
}

Verdict coparallel_criterion(const Configuration &c) {
  if (config::has_repeats(c))
    throw InapplicableCriterion("Aside", "a configuration without repeats");
  GaleDual b = gale_dual(c);
  if (b.has_zero_row())
    throw InapplicableCriterion("Aside", "a non-pyramidal configuration");
  Configuration reg = config::regularize(c);
  LinePartition lp = line_partition(b);
  Verdict v;
  v.criterion = "Aside";
  witness::ClassFunctionals fs;
  for (const auto &cls : lp.classes) {
    Verdict pfc = is_parallel_face_complement(reg, cls.members);
    if (!pfc.value) {
      v.value = false;
      v.witness = witness::ViolatingLine{cls};
      return v;
    }
    fs.classes.push_back(cls.members);
    fs.functionals.push_back(std::get<witness::Functional>(pfc.witness).linear);
  }
  v.value = true;
  v.witness = std::move(fs);
  return v;
}

} // namespace gale
} // namespace toric
