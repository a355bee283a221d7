#include "toric/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace toric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionMismatch("IntMatrix: ragged initializer");
    for (long x : r)
      entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector> &rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("from_rows: row length differs from cols");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector> &cols,
                                  std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    m.set_column(j, cols[j]);
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() +
                       static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_column(std::size_t j, const IntVector &v) {
  if (v.size() != rows_)
    throw DimensionMismatch("set_column: length differs from rows");
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(const IndexSet &cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i)
      m(i, k) = (*this)(i, cols[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const IndexSet &rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j)
      m(k, j) = (*this)(rows[k], j);
  return m;
}

IntMatrix IntMatrix::first_columns(std::size_t k) const {
  IndexSet idx(std::min(k, cols_));
  for (std::size_t j = 0; j < idx.size(); ++j)
    idx[j] = j;
  return select_columns(idx);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer &x) { return x == 0; });
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix &a, const IntVector &v) {
  if (a.cols() != v.size())
    throw DimensionMismatch("matrix-vector product: dimensions differ");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i] += a(i, j) * v[j];
  return out;
}

IntMatrix operator*(const Integer &s, const IntMatrix &m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) *= s;
  return out;
}

IntMatrix hstack(const IntMatrix &a, const IntMatrix &b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("hstack: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix vstack(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.cols())
    throw DimensionMismatch("vstack: column counts differ");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

bool is_zero(const IntVector &v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Integer &x) { return x == 0; });
}

Integer dot(const IntVector &a, const IntVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: lengths differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Integer content(const IntVector &v) {
  Integer g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  return g;
}

IntVector primitive_direction(const IntVector &v) {
  Integer g = content(v);
  if (g == 0)
    return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] / g;
  auto lead = std::find_if(out.begin(), out.end(),
                           [](const Integer &x) { return x != 0; });
  if (*lead < 0)
    for (auto &x : out)
      x = -x;
  return out;
}

RatVector to_rational(const IntVector &v) {
  return RatVector(v.begin(), v.end());
}

IntVector clear_denominators(const RatVector &v) {
  Integer l = 1;
  for (const auto &x : v)
    l = lcm(l, Integer(x.get_den()));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

std::string to_string(const IntVector &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVector &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

} // namespace toric
