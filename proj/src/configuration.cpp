#include "toric/configuration.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <map>

namespace toric {

std::size_t DedupReport::repeat_codim() const {
  std::size_t k = 0;
  for (auto m : multiplicity)
    k += m - 1;
  return k;
}

namespace config {

namespace {

bool columns_span_full_lattice(const IntMatrix &w) {
  if (w.rows() == 0)
    return true;
  auto snf = linalg::smith_normal_form(w);
  if (snf.rank() != w.rows())
    return false;
  for (const auto &x : snf.diagonal())
    if (x != 1)
      return false;
  return true;
}

bool has_all_ones_in_row_span(const IntMatrix &w) {
  return linalg::in_row_span(w, RatVector(w.cols(), Rational(1)));
}

} // namespace

Configuration parse_configuration(const IntMatrix &matrix) {
  if (matrix.cols() == 0)
    throw InvalidInput("configuration needs at least one point");
  Configuration c;
  c.weights = matrix;
  c.regular = has_all_ones_in_row_span(matrix);
  c.lattice_normalized = columns_span_full_lattice(matrix);
  return c;
}

Configuration regularize(const Configuration &c) {
  if (c.regular)
    return c;
  IntMatrix ones(1, c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    ones(0, j) = 1;
  return parse_configuration(vstack(ones, c.weights));
}

IntMatrix affine_matrix(const Configuration &c) {
  IntMatrix ones(1, c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    ones(0, j) = 1;
  return vstack(ones, c.weights);
}

IntMatrix affine_relations(const Configuration &c) {
  return linalg::integer_kernel(affine_matrix(c));
}

LatticeNormalization normalize_lattice(const Configuration &c) {
  LatticeNormalization out;
  if (c.lattice_normalized) {
    out.config = c;
    out.projection = IntMatrix::identity(c.dim());
    out.divisors = IntVector(c.dim(), Integer(1));
    return out;
  }
  auto snf = linalg::smith_normal_form(c.weights);
  const std::size_t rank = snf.rank();
  if (rank == 0)
    throw InvalidInput("normalize_lattice: configuration spans the zero lattice");
  IndexSet lead(rank);
  for (std::size_t i = 0; i < rank; ++i)
    lead[i] = i;
  out.projection = snf.u.select_rows(lead);
  IntMatrix projected = out.projection * c.weights;
  // Row i of u*w equals d_i times row i of v^{-1}, so the division is exact.
  out.divisors.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    out.divisors[i] = snf.s(i, i);
    for (std::size_t j = 0; j < projected.cols(); ++j)
      projected(i, j) /= out.divisors[i];
  }
  out.config = parse_configuration(projected);
  return out;
}

DedupReport dedup(const Configuration &c) {
  DedupReport r;
  std::map<IntVector, std::size_t> seen;
  IndexSet firsts;
  r.index_map.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    auto [it, fresh] = seen.emplace(c.point(j), firsts.size());
    if (fresh) {
      firsts.push_back(j);
      r.multiplicity.push_back(1);
    } else {
      ++r.multiplicity[it->second];
    }
    r.index_map[j] = it->second;
  }
  r.distinct = parse_configuration(c.weights.select_columns(firsts));
  return r;
}

std::size_t affine_dim(const Configuration &c) {
  return linalg::rational_rank(affine_matrix(c)) - 1;
}

DecompositionReport pyramid_decompose(const Configuration &c) {
  if (has_repeats(c))
    throw InvalidInput("pyramid_decompose: configuration has repeated points");
  DecompositionReport rep;
  IntMatrix gale = affine_relations(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(gale.row(i)))
      rep.apex_indices.push_back(i);
    else
      rep.core_indices.push_back(i);
  }
  rep.join_shape = {0, rep.apex_indices.size(), rep.core_indices.size()};

  // Splitting, checked in the ambient lattice of the regularized matrix:
  // apex columns must be a basis of a saturated summand, and apex + core
  // must be a direct sum of lattices.
  IntMatrix w = regularize(c).weights;
  IntMatrix apex = w.select_columns(rep.apex_indices);
  IntMatrix core = w.select_columns(rep.core_indices);
  const std::size_t ra = linalg::rational_rank(apex);
  const std::size_t rc = linalg::rational_rank(core);
  const std::size_t rall = linalg::rational_rank(w);
  if (ra != apex.cols()) {
    rep.splitting_failure = "apex columns are linearly dependent";
  } else if (ra + rc != rall) {
    rep.splitting_failure = "apex and core spans intersect";
  } else if (apex.cols() > 0 && !linalg::is_saturated(apex)) {
    rep.splitting_failure = "apex columns do not span a saturated sublattice";
  } else {
    auto snf = linalg::smith_normal_form(hstack(apex, core));
    bool unit = true;
    for (const auto &x : snf.diagonal())
      if (x > 1)
        unit = false;
    if (!unit)
      rep.splitting_failure =
          "apex and core columns do not span a saturated direct sum";
  }
  rep.splitting_valid = rep.splitting_failure.empty();
  return rep;
}

DecompositionReport decompose(const Configuration &c) {
  DedupReport d = dedup(c);
  DecompositionReport rep = pyramid_decompose(d.distinct);
  rep.repeat_codim = d.repeat_codim();
  rep.join_shape.k = rep.repeat_codim;
  return rep;
}

Configuration subconfiguration(const Configuration &c, const IndexSet &idx) {
  return parse_configuration(c.weights.select_columns(idx));
}

bool has_repeats(const Configuration &c) {
  std::map<IntVector, int> seen;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!seen.emplace(c.point(j), 0).second)
      return true;
  return false;
}

} // namespace config
} // namespace toric
