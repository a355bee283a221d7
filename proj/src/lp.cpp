#include "toric/lp.hpp"

#include <stdexcept>

namespace toric::lp {

namespace {

// Dense tableau [A | I | b] with the phase-one reduced-cost row kept
// alongside. Columns [0, n) are structural, [n, n + m) artificial.
class Tableau {
public:
  Tableau(const std::vector<RatVector> &a, const RatVector &b, std::size_t n)
      : m_(a.size()), n_(n), width_(n + a.size() + 1),
        cells_(a.size() * width_), reduced_(width_), basis_(a.size()),
        sign_(a.size(), 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_)
        throw DimensionMismatch("solve_feasibility: ragged constraint matrix");
      sign_[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j)
        at(i, j) = sign_[i] * a[i][j];
      at(i, n_ + i) = 1;
      at(i, width_ - 1) = sign_[i] * b[i];
      basis_[i] = n_ + i;
    }
    // Cost is 1 on every artificial; reduced cost of column j is
    // c_j - sum_i T(i, j) over the (all-artificial) starting basis.
    for (std::size_t j = 0; j < width_; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < m_; ++i)
        s += at(i, j);
      reduced_[j] = (j >= n_ && j < n_ + m_ ? Rational(1) : Rational(0)) - s;
    }
  }

  void run() {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j + 1 < width_; ++j)
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == width_)
        return;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0)
          continue;
        Rational ratio = at(i, width_ - 1) / at(i, enter);
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by 0, so an entering column always has a
      // positive entry.
      if (leave == m_)
        throw std::logic_error("solve_feasibility: unbounded phase one");
      pivot(leave, enter);
    }
  }

  // Phase-one objective is -reduced_[rhs].
  Rational objective() const { return -reduced_[width_ - 1]; }

  RatVector primal() const {
    RatVector x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_)
        x[basis_[i]] = at(i, width_ - 1);
    return x;
  }

  // Simplex multipliers y satisfy reduced_(artificial k) = 1 - y_k. Undo the
  // row sign flips and negate to obtain A^T u >= 0, <b, u> < 0.
  RatVector farkas() const {
    RatVector u(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rational y = 1 - reduced_[n_ + k];
      u[k] = -y * sign_[k];
    }
    return u;
  }

private:
  Rational &at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const Rational &at(std::size_t i, std::size_t j) const {
    return cells_[i * width_ + j];
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = at(r, c);
    for (std::size_t j = 0; j < width_; ++j)
      at(r, j) /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || at(i, c) == 0)
        continue;
      Rational f = at(i, c);
      for (std::size_t j = 0; j < width_; ++j)
        at(i, j) -= f * at(r, j);
    }
    if (reduced_[c] != 0) {
      Rational f = reduced_[c];
      for (std::size_t j = 0; j < width_; ++j)
        reduced_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_;
  std::vector<Rational> cells_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
};

} // namespace

FeasibilityResult solve_feasibility(const std::vector<RatVector> &a,
                                    const RatVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("solve_feasibility: rhs length differs from rows");
  std::size_t n = 0;
  if (!a.empty())
    n = a.front().size();

  Tableau t(a, b, n);
  t.run();

  FeasibilityResult out;
  if (t.objective() == 0) {
    out.feasible = true;
    out.x = t.primal();
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += a[i][j] * out.x[j];
      if (s != b[i])
        throw std::logic_error("solve_feasibility: primal recheck failed");
    }
    return out;
  }

  out.farkas = t.farkas();
  Rational by = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    by += b[i] * out.farkas[i];
  if (by >= 0)
    throw std::logic_error("solve_feasibility: certificate recheck failed");
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += a[i][j] * out.farkas[i];
    if (s < 0)
      throw std::logic_error("solve_feasibility: certificate recheck failed");
  }
  return out;
}

} // namespace toric::lp
