#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IndexSet = std::vector<std::size_t>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Raised by the brute-force routines when the input exceeds their size bound.
class GuardExceeded : public Error {
public:
  using Error::Error;
};

/// A criterion was asked to run on input outside its hypothesis. The message
/// names the hypothesis that failed.
class InapplicableCriterion : public Error {
public:
  InapplicableCriterion(std::string criterion, std::string hypothesis)
      : Error(criterion + ": inapplicable, requires " + hypothesis),
        criterion_(std::move(criterion)), hypothesis_(std::move(hypothesis)) {}

  const std::string &criterion() const noexcept { return criterion_; }
  const std::string &hypothesis() const noexcept { return hypothesis_; }

private:
  std::string criterion_;
  std::string hypothesis_;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector> &rows,
                             std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector> &cols,
                                std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Integer> &entries() const noexcept { return entries_; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  void set_column(std::size_t j, const IntVector &v);

  IntMatrix transpose() const;
  IntMatrix select_columns(const IndexSet &cols) const;
  IntMatrix select_rows(const IndexSet &rows) const;
  IntMatrix first_columns(std::size_t k) const;

  bool is_zero() const;

  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntVector operator*(const IntMatrix &a, const IntVector &v);
IntMatrix operator*(const Integer &s, const IntMatrix &m);

/// [a | b]
IntMatrix hstack(const IntMatrix &a, const IntMatrix &b);
/// [a ; b]
IntMatrix vstack(const IntMatrix &a, const IntMatrix &b);

std::ostream &operator<<(std::ostream &os, const IntMatrix &m);

bool is_zero(const IntVector &v);
Integer dot(const IntVector &a, const IntVector &b);
/// gcd of the entries; 0 for the zero vector.
Integer content(const IntVector &v);
/// Divides by the content and flips the sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
IntVector primitive_direction(const IntVector &v);

RatVector to_rational(const IntVector &v);
/// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RatVector &v);

std::string to_string(const IntVector &v);
std::string to_string(const RatVector &v);

} // namespace toric
