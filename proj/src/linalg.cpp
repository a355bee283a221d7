#include "toric/linalg.hpp"

#include "toric/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace toric::linalg {

namespace {

// Extended gcd: g = s*a + t*b, g >= 0.
void gcdext(Integer &g, Integer &s, Integer &t, const Integer &a,
            const Integer &b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

// col_a <- x*col_a + y*col_b ; col_b <- z*col_a + w*col_b (simultaneously)
void mix_columns(IntMatrix &m, std::size_t a, std::size_t b, const Integer &x,
                 const Integer &y, const Integer &z, const Integer &w) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer ca = m(i, a), cb = m(i, b);
    m(i, a) = x * ca + y * cb;
    m(i, b) = z * ca + w * cb;
  }
}

// col_dst -= q * col_src
void sub_column(IntMatrix &m, std::size_t dst, std::size_t src,
                const Integer &q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) -= q * m(i, src);
}

void sub_row(IntMatrix &m, std::size_t dst, std::size_t src,
             const Integer &q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(dst, j) -= q * m(src, j);
}

void negate_column(IntMatrix &m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, j) = -m(i, j);
}

void negate_row(IntMatrix &m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(i, j) = -m(i, j);
}

// Reduced row echelon form over Q; returns pivot columns.
struct Echelon {
  std::vector<RatVector> rows;
  IndexSet pivots;
};

Echelon rref(std::vector<RatVector> rows, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto &x : rows[r])
      x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::vector<RatVector> rational_rows(const IntMatrix &m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m(i, j);
  return rows;
}

} // namespace

HermiteForm hermite_normal_form(const IntMatrix &m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0, {}};
  IntMatrix &h = out.h;
  IntMatrix &u = out.u;
  const std::size_t cols = m.cols();
  std::size_t p = 0;
  Integer g, s, t;
  for (std::size_t i = 0; i < m.rows() && p < cols; ++i) {
    for (std::size_t j = p + 1; j < cols; ++j) {
      if (h(i, j) == 0)
        continue;
      if (h(i, p) == 0) {
        h.swap_columns(p, j);
        u.swap_columns(p, j);
        continue;
      }
      Integer a = h(i, p), b = h(i, j);
      gcdext(g, s, t, a, b);
      Integer z = -b / g, w = a / g;
      mix_columns(h, p, j, s, t, z, w);
      mix_columns(u, p, j, s, t, z, w);
    }
    if (h(i, p) == 0)
      continue;
    if (h(i, p) < 0) {
      negate_column(h, p);
      negate_column(u, p);
    }
    for (std::size_t j = 0; j < p; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, p).get_mpz_t());
      if (q != 0) {
        sub_column(h, j, p, q);
        sub_column(u, j, p, q);
      }
    }
    out.pivot_rows.push_back(i);
    ++p;
  }
  out.rank = p;
  return out;
}

IntVector SmithForm::diagonal() const {
  IntVector d(std::min(s.rows(), s.cols()));
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = s(i, i);
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto &x : diagonal())
    r += x != 0;
  return r;
}

SmithForm smith_normal_form(const IntMatrix &m) {
  SmithForm out{m, IntMatrix::identity(m.rows()),
                IntMatrix::identity(m.cols())};
  IntMatrix &s = out.s;
  const std::size_t R = m.rows(), C = m.cols();
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (s(i, j) != 0 &&
              (pi == R || abs(s(i, j)) < abs(s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R)
        return out;
      s.swap_rows(t, pi);
      out.u.swap_rows(t, pi);
      s.swap_columns(t, pj);
      out.v.swap_columns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (s(i, t) == 0)
          continue;
        Integer q = s(i, t) / s(t, t);
        sub_row(s, i, t, q);
        sub_row(out.u, i, t, q);
        clean = clean && s(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (s(t, j) == 0)
          continue;
        Integer q = s(t, j) / s(t, t);
        sub_column(s, j, t, q);
        sub_column(out.v, j, t, q);
        clean = clean && s(t, j) == 0;
      }
      if (!clean)
        continue;

      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R)
        break;
      // Pull the offending row into row t; the next round shrinks the pivot.
      sub_row(s, t, bad, Integer(-1));
      sub_row(out.u, t, bad, Integer(-1));
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(out.u, t);
    }
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix &m) {
  HermiteForm hf = hermite_normal_form(m);
  IndexSet free_cols;
  for (std::size_t j = hf.rank; j < m.cols(); ++j)
    free_cols.push_back(j);
  IntMatrix k = hf.u.select_columns(free_cols);
  if (k.cols() == 0)
    return k;
  return column_lattice_basis(k);
}

IntMatrix column_lattice_basis(const IntMatrix &m) {
  HermiteForm hf = hermite_normal_form(m);
  return hf.h.first_columns(hf.rank);
}

IntMatrix saturate_columns(const IntMatrix &m) {
  IntMatrix orth = integer_kernel(m.transpose());
  IntMatrix sat = integer_kernel(orth.transpose());
  if (orth.cols() == 0)
    return IntMatrix::identity(m.rows());
  return sat;
}

bool is_saturated(const IntMatrix &m) {
  return column_lattice_basis(m) == saturate_columns(m);
}

std::size_t rational_rank(const std::vector<RatVector> &rows,
                          std::size_t cols) {
  return rref(rows, cols).pivots.size();
}

std::size_t rational_rank(const IntMatrix &m) {
  return rational_rank(rational_rows(m), m.cols());
}

Integer determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool in_row_span(const IntMatrix &m, const RatVector &v) {
  if (v.size() != m.cols())
    throw DimensionMismatch("in_row_span: vector length differs from cols");
  auto rows = rational_rows(m);
  std::size_t base = rational_rank(rows, m.cols());
  rows.push_back(v);
  return rational_rank(rows, m.cols()) == base;
}

std::optional<RatVector> solve(const IntMatrix &m, const RatVector &b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("solve: rhs length differs from rows");
  auto rows = rational_rows(m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].push_back(b[i]);
  Echelon e = rref(std::move(rows), m.cols() + 1);
  if (!e.pivots.empty() && e.pivots.back() == m.cols())
    return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[e.pivots[r]] = e.rows[r][m.cols()];
  return x;
}

std::vector<RatVector> rational_kernel(const IntMatrix &m) {
  Echelon e = rref(rational_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

PositiveDependencyResult
positive_dependency_certified(const std::vector<IntVector> &rows) {
  if (rows.empty())
    throw InvalidInput("positive_dependency: empty input");
  const std::size_t dim = rows.front().size();
  for (const auto &r : rows)
    if (r.size() != dim)
      throw DimensionMismatch("positive_dependency: vectors differ in length");

  // Substitute r_i = 1 + x_i, x >= 0:  sum x_i row_i = -sum row_i.
  std::vector<RatVector> a(dim, RatVector(rows.size()));
  RatVector b(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      a[k][i] = rows[i][k];
      b[k] -= rows[i][k];
    }
  lp::FeasibilityResult res = lp::solve_feasibility(a, b);

  if (res.feasible) {
    RatVector r(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      r[i] = 1 + res.x[i];
    for (std::size_t k = 0; k < dim; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < rows.size(); ++i)
        s += r[i] * rows[i][k];
      if (s != 0)
        throw std::logic_error("positive_dependency: relation recheck failed");
    }
    return r;
  }

  NoPositiveDependency cert{res.farkas};
  bool some_positive = false;
  for (const auto &row : rows) {
    Rational s = 0;
    for (std::size_t k = 0; k < dim; ++k)
      s += row[k] * cert.direction[k];
    if (s < 0)
      throw std::logic_error("positive_dependency: certificate recheck failed");
    some_positive = some_positive || s > 0;
  }
  if (!some_positive)
    throw std::logic_error("positive_dependency: certificate recheck failed");
  return cert;
}

std::optional<RatVector>
positive_dependency(const std::vector<IntVector> &rows) {
  auto res = positive_dependency_certified(rows);
  if (auto *r = std::get_if<RatVector>(&res))
    return *r;
  return std::nullopt;
}

std::optional<IndexSet> gf2_rows_summing_to_ones(const IntMatrix &m) {
  // Solve M^T x = 1 over GF(2): one equation per column of m.
  const std::size_t d = m.rows(), n = m.cols();
  std::vector<std::vector<std::uint8_t>> eq(n,
                                            std::vector<std::uint8_t>(d + 1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < d; ++j)
      eq[k][j] = mpz_odd_p(m(j, k).get_mpz_t()) ? 1 : 0;
    eq[k][d] = 1;
  }
  IndexSet pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < n; ++c) {
    std::size_t p = r;
    while (p < n && !eq[p][c])
      ++p;
    if (p == n)
      continue;
    std::swap(eq[r], eq[p]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && eq[i][c])
        for (std::size_t j = 0; j <= d; ++j)
          eq[i][j] ^= eq[r][j];
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (eq[i][d])
      return std::nullopt;
  IndexSet subset;
  for (std::size_t i = 0; i < r; ++i)
    if (eq[i][d])
      subset.push_back(pivots[i]);
  std::sort(subset.begin(), subset.end());
  return subset;
}

} // namespace toric::linalg
