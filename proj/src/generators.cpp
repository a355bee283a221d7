#include "toric/generators.hpp"

#include "toric/linalg.hpp"

namespace toric::gen {

namespace {

void check_alphas(const std::vector<long> &alphas) {
  if (alphas.size() < 2)
    throw InvalidInput("family needs at least two alphas");
  long sum = 0;
  for (long a : alphas) {
    if (a == 0)
      throw InvalidInput("family alphas must be nonzero");
    sum += a;
  }
  if (sum != 0)
    throw InvalidInput("family alphas must sum to zero");
}

} // namespace

Configuration segre(std::size_t m) {
  if (m < 2)
    throw InvalidInput("segre: m must be at least 2");
  IntMatrix w(m + 1, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, i) = 1;
    w(i, m + i) = 1;
    w(m, m + i) = 1;
  }
  return config::parse_configuration(w);
}

Configuration lawrence(const IntMatrix &m) {
  const std::size_t n = m.cols(), d = m.rows();
  if (n == 0)
    throw InvalidInput("lawrence: M has no columns");
  IntMatrix w(n + d, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = 1;
    w(i, n + i) = 1;
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < n; ++j)
      w(n + r, n + j) = m(r, j);
  return config::parse_configuration(w);
}

Configuration family_alpha(long alpha) {
  if (alpha == 0)
    throw InvalidInput("family_alpha: alpha must be nonzero");
  const long a = alpha;
  IntMatrix w{{1, 1, 1, 1, 1, 1, 1},
              {1, 1, 1, 1, 1, 0, 0},
              {0, 0, 0, 1, 1, 0, 0},
              {0, 1, 0, a, 0, -a, 0},
              {0, 0, 1, 0, -a, 0, a}};
  return config::parse_configuration(w);
}

IntMatrix printed_gale_alpha(long alpha) {
  const long a = alpha;
  return IntMatrix{{2 * a, 0}, {-a, 0}, {-a, 0}, {1, 1},
                   {-1, -1},   {0, 1},  {0, -1}};
}

IntMatrix gale_family_dim(const std::vector<long> &alphas) {
  check_alphas(alphas);
  const std::size_t r = alphas.size();
  IntMatrix b(r + 4, 2);
  for (std::size_t i = 0; i < r; ++i)
    b(i, 0) = alphas[i];
  b(r, 1) = 1;
  b(r + 1, 1) = -1;
  b(r + 2, 0) = 1;
  b(r + 2, 1) = 1;
  b(r + 3, 0) = -1;
  b(r + 3, 1) = -1;
  return b;
}

Configuration family_dim(const std::vector<long> &alphas) {
  return config_from_gale(gale_family_dim(alphas));
}

IntMatrix gale_family_codim(std::size_t m, const std::vector<long> &alphas) {
  check_alphas(alphas);
  if (m < 2)
    throw InvalidInput("family_codim: m must be at least 2");
  const std::size_t r = alphas.size();
  IntMatrix b(r + 2 * m, m);
  for (std::size_t i = 0; i < r; ++i)
    b(i, 0) = alphas[i];
  std::size_t row = r;
  for (std::size_t k = 1; k < m; ++k) {
    b(row++, k) = 1;
    b(row++, k) = -1;
  }
  for (std::size_t k = 0; k < m; ++k) {
    b(row, k) = 1;
    b(row + 1, k) = -1;
  }
  return b;
}

Configuration family_codim(std::size_t m, const std::vector<long> &alphas) {
  return config_from_gale(gale_family_codim(m, alphas));
}

Configuration config_from_gale(const IntMatrix &b) {
  if (b.rows() == 0)
    throw InvalidInput("config_from_gale: empty matrix");
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
      sum += b(i, j);
    if (sum != 0)
      throw InvalidInput("config_from_gale: Gale rows do not sum to zero");
  }
  if (linalg::rational_rank(b) != b.cols())
    throw InvalidInput("config_from_gale: columns are dependent");
  if (!linalg::is_saturated(b))
    throw InvalidInput("config_from_gale: columns do not span a saturated "
                       "lattice");
  IntMatrix w = linalg::integer_kernel(b.transpose()).transpose();
  return config::parse_configuration(w);
}

} // namespace toric::gen
