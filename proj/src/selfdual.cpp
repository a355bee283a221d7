#include "toric/selfdual.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric::engine {

namespace {

Integer signed_power(const Integer &base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

} // namespace

Verdict is_self_dual(const Configuration &c) {
  Configuration norm =
      config::normalize_lattice(config::regularize(c)).config;
  DedupReport d = config::dedup(norm);
  const Configuration &distinct = d.distinct;
  const std::size_t k = d.repeat_codim();

  DecompositionReport rep = config::pyramid_decompose(distinct);
  rep.repeat_codim = k;
  rep.join_shape.k = k;

  if (k == 0 && rep.apex_indices.empty())
    return gale::line_sums_zero(gale::gale_dual(distinct));

  Verdict v;
  v.criterion = "join-decomposition";
  if (rep.apex_indices.size() != k) {
    std::ostringstream os;
    os << "distinct points are " << rep.apex_indices.size()
       << "-pyramidal but there are " << k << " repeats";
    v.notes.push_back(os.str());
    v.value = false;
    v.witness = rep;
    return v;
  }
  if (!rep.splitting_valid) {
    v.notes.push_back("splitting failure: " + rep.splitting_failure);
    v.notes.push_back("apex count matches; rejected because the lattice does "
                      "not split (a rational splitting is not accepted)");
    v.value = false;
    v.witness = rep;
    return v;
  }
  if (rep.core_indices.empty()) {
    v.notes.push_back("linear variety: apexes only, no core");
    v.value = true;
    v.witness = rep;
    return v;
  }
  Configuration core = config::subconfiguration(distinct, rep.core_indices);
  Verdict inner = gale::line_sums_zero(gale::gale_dual(core));
  v.value = inner.value;
  v.notes.push_back(std::string("core line sums ") +
                    (inner.value ? "balanced" : "unbalanced"));
  if (auto *bad = std::get_if<witness::ViolatingLine>(&inner.witness)) {
    std::ostringstream os;
    os << "core line " << toric::to_string(bad->line.direction) << " sums to "
       << toric::to_string(bad->line.sum);
    v.notes.push_back(os.str());
  }
  v.witness = rep;
  return v;
}

Verdict is_strongly_self_dual(const Configuration &c,
                              const std::optional<IntMatrix> &basis) {
  if (!c.regular)
    throw InapplicableCriterion("strong-binomial",
                                "a regular configuration");
  GaleDual canonical = gale::gale_dual(c);
  if (canonical.has_zero_row())
    throw InapplicableCriterion("strong-binomial",
                                "a non-pyramidal configuration");
  GaleDual b = canonical;
  if (basis) {
    if (!gale::verify_gale_dual(c, *basis))
      throw InvalidInput("supplied basis is not a Gale dual of the "
                         "configuration");
    b = GaleDual{*basis};
  }

  Verdict lines = gale::line_sums_zero(b);
  Verdict v;
  v.criterion = "strong-binomial";
  if (!lines.value) {
    v.value = false;
    v.witness = lines.witness;
    v.notes.push_back("lines through the origin are not balanced");
    return v;
  }

  witness::BinomialProducts prod;
  prod.basis = b.matrix;
  for (std::size_t col = 0; col < b.rank(); ++col) {
    Integer pos = 1, neg = 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Integer &x = b.matrix(j, col);
      if (x > 0)
        pos *= signed_power(x, x.get_ui());
      else if (x < 0)
        neg *= signed_power(x, Integer(-x).get_ui());
    }
    prod.positive_side.push_back(pos);
    prod.negative_side.push_back(neg);
    if (pos != neg && prod.failing_column < 0)
      prod.failing_column = static_cast<long>(col);
  }
  v.value = prod.failing_column < 0;
  v.witness = std::move(prod);
  return v;
}

std::optional<IntMatrix> is_lawrence(const Configuration &c) {
  const IntMatrix &w = c.weights;
  if (w.cols() % 2 != 0)
    return std::nullopt;
  const std::size_t n = w.cols() / 2;
  if (w.rows() < n || n == 0)
    return std::nullopt;
  const std::size_t d = w.rows() - n;

  // Each column's top block must be a unit vector e_i; each e_i occurs twice.
  std::vector<IndexSet> by_unit(n);
  for (std::size_t j = 0; j < w.cols(); ++j) {
    std::size_t hot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (w(i, j) == 0)
        continue;
      if (w(i, j) != 1 || hot != n)
        return std::nullopt;
      hot = i;
    }
    if (hot == n)
      return std::nullopt;
    by_unit[hot].push_back(j);
  }

  IntMatrix m(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (by_unit[i].size() != 2)
      return std::nullopt;
    auto bottom_zero = [&](std::size_t j) {
      for (std::size_t r = n; r < w.rows(); ++r)
        if (w(r, j) != 0)
          return false;
      return true;
    };
    std::size_t a = by_unit[i][0], b = by_unit[i][1];
    if (!bottom_zero(a))
      std::swap(a, b);
    if (!bottom_zero(a))
      return std::nullopt;
    for (std::size_t r = 0; r < d; ++r)
      m(r, i) = w(n + r, b);
  }
  return m;
}

Verdict lawrence_strong_parity(const IntMatrix &m) {
  IntMatrix ker = linalg::integer_kernel(m);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    if (is_zero(ker.row(i)))
      throw InapplicableCriterion("lawrence-parity",
                                  "a non-pyramidal Lawrence lift");
  if (m.rows() > 0) {
    for (const auto &x : linalg::smith_normal_form(m).diagonal())
      if (x > 1)
        throw InapplicableCriterion(
            "lawrence-parity",
            "a Lawrence lift spanning its lattice (saturated rows of M)");
  }
  Verdict v;
  v.criterion = "lawrence-parity";
  auto subset = linalg::gf2_rows_summing_to_ones(m);
  v.value = subset.has_value();
  if (subset)
    v.witness = witness::ParitySubset{*subset};
  return v;
}

std::optional<std::size_t> is_segre(const Configuration &c) {
  GaleDual b = gale::gale_dual(c);
  const std::size_t n = b.size();
  if (n < 4 || n % 2 != 0)
    return std::nullopt;
  const std::size_t m = n / 2;
  if (b.rank() != m - 1 || b.has_zero_row())
    return std::nullopt;

  // Antipodal pairing of the rows.
  std::vector<bool> used(n, false);
  std::vector<IntVector> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i])
      continue;
    used[i] = true;
    IntVector neg = b.row(i);
    for (auto &x : neg)
      x = -x;
    bool found = false;
    for (std::size_t j = i + 1; j < n && !found; ++j)
      if (!used[j] && b.row(j) == neg) {
        used[j] = true;
        found = true;
      }
    if (!found)
      return std::nullopt;
    reps.push_back(b.row(i));
  }

  // Pick one row per pair so that the m picks sum to zero and the first m-1
  // are a lattice basis.
  const std::size_t r = m - 1;
  for (unsigned long mask = 0; mask < (1ul << (m - 1)); ++mask) {
    std::vector<IntVector> pick = reps;
    for (std::size_t k = 1; k < m; ++k)
      if (mask & (1ul << (k - 1)))
        for (auto &x : pick[k])
          x = -x;
    IntVector sum(r);
    for (const auto &p : pick)
      for (std::size_t j = 0; j < r; ++j)
        sum[j] += p[j];
    if (!is_zero(sum))
      continue;
    IntMatrix basis(r, r);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j)
        basis(k, j) = pick[k][j];
    if (abs(linalg::determinant(basis)) == 1)
      return m;
  }
  return std::nullopt;
}

const char *to_string(HypersurfaceClass h) {
  switch (h) {
  case HypersurfaceClass::Point:
    return "Point";
  case HypersurfaceClass::Conic:
    return "Conic";
  case HypersurfaceClass::SegreQuadric:
    return "SegreQuadric";
  case HypersurfaceClass::OtherHypersurface:
    return "OtherHypersurface";
  case HypersurfaceClass::NotHypersurface:
    return "NotHypersurface";
  }
  return "?";
}

HypersurfaceClass hypersurface_class(const Configuration &c) {
  if (c.size() != config::affine_dim(c) + 2)
    return HypersurfaceClass::NotHypersurface;
  IntVector v = gale::gale_dual(c).matrix.column(0);
  std::sort(v.begin(), v.end());
  IntVector neg(v.rbegin(), v.rend());
  for (auto &x : neg)
    x = -x;
  auto matches = [&](const IntVector &pattern) {
    IntVector p = pattern;
    std::sort(p.begin(), p.end());
    return p == v || p == neg;
  };
  if (matches({1, -1}))
    return HypersurfaceClass::Point;
  if (matches({1, -2, 1}))
    return HypersurfaceClass::Conic;
  if (matches({1, -1, -1, 1}))
    return HypersurfaceClass::SegreQuadric;
  return HypersurfaceClass::OtherHypersurface;
}

Verdict smooth_certificate(const Configuration &c) {
  if (config::has_repeats(c))
    throw InvalidInput("smooth_certificate: configuration has repeated points");
  const std::size_t n = c.size();
  const std::size_t dim = config::affine_dim(c);

  // Difference lattice and its basis.
  IntMatrix diffs(c.dim(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < c.dim(); ++i)
      diffs(i, j) = c.weights(i, j) - c.weights(i, 0);
  IntMatrix lattice = linalg::column_lattice_basis(diffs);

  auto coordinates = [&](const IntVector &v) {
    auto x = linalg::solve(lattice, to_rational(v));
    IntVector out(x->size());
    for (std::size_t k = 0; k < x->size(); ++k)
      out[k] = x->at(k).get_num();
    return out;
  };

  Verdict v;
  v.criterion = "vertex-bases";
  witness::SmoothnessCertificate cert;
  for (std::size_t i = 0; i < n; ++i) {
    if (!gale::is_facial(c, {i}).value)
      continue;
    witness::VertexCertificate vc;
    vc.vertex = i;

    // Group the other points by the ray they span from vertex i.
    std::map<IntVector, IndexSet> rays;
    std::map<IntVector, std::pair<Integer, std::size_t>> nearest;
    IntVector base = c.point(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i)
        continue;
      IntVector d = c.point(j);
      for (std::size_t k = 0; k < d.size(); ++k)
        d[k] -= base[k];
      Integer g = content(d);
      IntVector ray = d;
      for (auto &x : ray)
        x /= g;
      rays[ray].push_back(j);
      auto it = nearest.find(ray);
      if (it == nearest.end() || g < it->second.first)
        nearest[ray] = {g, j};
    }
    std::vector<IntVector> coords;
    for (const auto &[ray, members] : rays) {
      IndexSet face = members;
      face.push_back(i);
      if (!gale::is_facial(c, face).value)
        continue;
      // Edge generator: the nearest configuration point along the ray.
      IntVector step = ray;
      for (auto &e : step)
        e *= nearest[ray].first;
      vc.edge_targets.push_back(nearest[ray].second);
      vc.edge_vectors.push_back(step);
      coords.push_back(coordinates(step));
    }

    std::string failure;
    if (coords.size() != dim) {
      std::ostringstream os;
      os << coords.size() << " edges at a vertex of a " << dim
         << "-dimensional polytope";
      failure = os.str();
      vc.lattice_index = 0;
    } else {
      IntMatrix m(dim, dim);
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
          m(a, b) = coords[a][b];
      vc.lattice_index = abs(linalg::determinant(m));
      if (vc.lattice_index != 1)
        failure = "edge vectors span a sublattice of index " +
                  vc.lattice_index.get_str();
    }
    cert.vertices.push_back(std::move(vc));
    if (!failure.empty() && cert.failing_vertex < 0) {
      cert.failing_vertex = static_cast<long>(i);
      cert.reason = failure;
    }
  }
  v.value = cert.failing_vertex < 0;
  v.witness = std::move(cert);
  return v;
}

} // namespace toric::engine
