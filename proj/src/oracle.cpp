#include "toric/oracle.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric::oracle {

namespace {

void guard(std::size_t n, const char *what) {
  if (n > kEnumerationLimit)
    throw GuardExceeded(std::string(what) + ": n exceeds enumeration limit " +
                        std::to_string(kEnumerationLimit));
}

IndexSet bits(unsigned long mask, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1ul << i))
      out.push_back(i);
  return out;
}

// Inequality <g, t> <= h.
struct Inequality {
  RatVector g;
  Rational h;
};

// Positive rescaling so that the first nonzero coefficient is +-1.
void normalize(Inequality &q) {
  auto lead = std::find_if(q.g.begin(), q.g.end(),
                           [](const Rational &x) { return x != 0; });
  if (lead == q.g.end())
    return;
  Rational s = abs(*lead);
  for (auto &x : q.g)
    x /= s;
  q.h /= s;
}

bool fourier_motzkin_feasible(std::vector<Inequality> sys, std::size_t vars) {
  for (std::size_t v = vars; v-- > 0;) {
    std::vector<Inequality> pos, neg;
    std::map<RatVector, Rational> next;
    auto keep = [&next](Inequality q) {
      normalize(q);
      auto it = next.find(q.g);
      if (it == next.end() || q.h < it->second)
        next[q.g] = q.h;
    };
    for (auto &q : sys) {
      if (q.g[v] > 0)
        pos.push_back(q);
      else if (q.g[v] < 0)
        neg.push_back(q);
      else
        keep(q);
    }
    for (const auto &p : pos)
      for (const auto &q : neg) {
        Inequality r;
        r.g.resize(p.g.size());
        Rational a = 1 / p.g[v], b = -1 / q.g[v];
        for (std::size_t k = 0; k < p.g.size(); ++k)
          r.g[k] = a * p.g[k] + b * q.g[k];
        r.g[v] = 0;
        r.h = a * p.h + b * q.h;
        keep(std::move(r));
      }
    sys.clear();
    for (auto &[g, h] : next) {
      bool trivial = std::all_of(g.begin(), g.end(),
                                 [](const Rational &x) { return x == 0; });
      if (trivial) {
        if (h < 0)
          return false;
        continue;
      }
      sys.push_back({g, h});
    }
  }
  for (const auto &q : sys)
    if (q.h < 0)
      return false;
  return true;
}

} // namespace

std::vector<Circuit> enumerate_circuits(const Configuration &c) {
  const std::size_t n = c.size();
  guard(n, "enumerate_circuits");
  std::vector<Circuit> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    IndexSet s = bits(mask, n);
    if (s.size() < 2)
      continue;
    IntMatrix ker =
        config::affine_relations(config::subconfiguration(c, s));
    if (ker.cols() != 1)
      continue;
    IntVector rel = ker.column(0);
    if (std::any_of(rel.begin(), rel.end(),
                    [](const Integer &x) { return x == 0; }))
      continue;
    Circuit circ;
    circ.support = s;
    circ.relation.assign(n, Integer(0));
    for (std::size_t k = 0; k < s.size(); ++k)
      circ.relation[s[k]] = rel[k];
    circ.relation = primitive_direction(circ.relation);
    out.push_back(std::move(circ));
  }
  return out;
}

std::vector<IndexSet> coparallel_via_circuits(const Configuration &c) {
  const std::size_t n = c.size();
  auto circuits = enumerate_circuits(c);
  std::vector<std::vector<std::size_t>> membership(n);
  for (std::size_t k = 0; k < circuits.size(); ++k)
    for (auto i : circuits[k].support)
      membership[i].push_back(k);
  std::map<std::vector<std::size_t>, IndexSet> groups;
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (membership[i].empty())
      out.push_back({i});
    else
      groups[membership[i]].push_back(i);
  }
  for (auto &[key, cls] : groups)
    out.push_back(cls);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Flat> enumerate_flats(const GaleDual &b) {
  const std::size_t n = b.size();
  guard(n, "enumerate_flats");
  std::vector<Flat> out;
  std::set<IndexSet> seen;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    IndexSet j = bits(mask, n);
    IntMatrix gens = b.matrix.select_rows(j);
    std::size_t base = linalg::rational_rank(gens);
    IndexSet closure;
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix with = vstack(gens, b.matrix.select_rows({i}));
      if (linalg::rational_rank(with) == base)
        closure.push_back(i);
    }
    if (seen.insert(closure).second)
      out.push_back({j, closure});
  }
  return out;
}

bool self_dual_via_flats(const GaleDual &b) {
  if (b.has_zero_row())
    throw InapplicableCriterion("flats", "a non-pyramidal configuration");
  for (const auto &f : enumerate_flats(b)) {
    IntVector sum(b.rank());
    for (auto i : f.closure)
      for (std::size_t k = 0; k < b.rank(); ++k)
        sum[k] += b.matrix(i, k);
    if (!is_zero(sum))
      return false;
  }
  return true;
}

bool self_dual_via_sigma(const Configuration &c) {
  if (!c.regular)
    throw InapplicableCriterion("sigma", "a regular configuration");
  for (const auto &circ : enumerate_circuits(c)) {
    RatVector sigma(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      sigma[i] = circ.relation[i] == 0 ? 1 : 0;
    if (!linalg::in_row_span(c.weights, sigma))
      return false;
  }
  return true;
}

bool strong_via_points(const Configuration &c, std::size_t samples) {
  if (!c.regular)
    throw InapplicableCriterion("strong-points", "a regular configuration");
  GaleDual b = gale::gale_dual(c);
  if (b.has_zero_row())
    throw InapplicableCriterion("strong-points",
                                "a non-pyramidal configuration");
  const std::size_t n = b.size(), r = b.rank();

  unsigned long degree = 0;
  for (std::size_t col = 0; col < r; ++col) {
    unsigned long d = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (b.matrix(j, col) > 0)
        d += b.matrix(j, col).get_ui();
    degree = std::max(degree, d);
  }
  if (samples == 0)
    samples = degree + 1;

  std::vector<Integer> primes;
  Integer p = 1;
  while (primes.size() < samples) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primes.push_back(p);
  }

  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    IntVector s(r);
    for (std::size_t k = 0; k < r; ++k)
      s[k] = primes[idx[k]];
    IntVector x = b.matrix * s;
    for (std::size_t col = 0; col < r; ++col) {
      Integer lhs = 1, rhs = 1, t;
      for (std::size_t j = 0; j < n; ++j) {
        const Integer &e = b.matrix(j, col);
        if (e > 0) {
          mpz_pow_ui(t.get_mpz_t(), x[j].get_mpz_t(), e.get_ui());
          lhs *= t;
        } else if (e < 0) {
          mpz_pow_ui(t.get_mpz_t(), x[j].get_mpz_t(), Integer(-e).get_ui());
          rhs *= t;
        }
      }
      if (lhs != rhs)
        return false;
    }
    std::size_t k = 0;
    while (k < r && ++idx[k] == samples)
      idx[k++] = 0;
    if (k == r)
      break;
  }
  return true;
}

bool facial_via_separation(const Configuration &c, const IndexSet &subset) {
  IndexSet s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  IntMatrix a = config::affine_matrix(c); // (d+1) x n; column i is (1, p_i)

  IndexSet rest;
  for (std::size_t i = 0, k = 0; i < c.size(); ++i) {
    if (k < s.size() && s[k] == i)
      ++k;
    else
      rest.push_back(i);
  }
  if (rest.empty())
    return true;

  // Functionals vanishing on S: l = sum_k t_k nu_k.
  std::vector<RatVector> nu;
  if (!s.empty()) {
    nu = linalg::rational_kernel(a.select_columns(s).transpose());
  } else {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      RatVector e(a.rows());
      e[k] = 1;
      nu.push_back(e);
    }
  }
  std::vector<Inequality> sys;
  for (auto j : rest) {
    Inequality q;
    q.g.resize(nu.size());
    for (std::size_t k = 0; k < nu.size(); ++k)
      for (std::size_t i = 0; i < a.rows(); ++i)
        q.g[k] += nu[k][i] * a(i, j);
    q.h = -1;
    sys.push_back(std::move(q));
  }
  return fourier_motzkin_feasible(std::move(sys), nu.size());
}

} // namespace toric::oracle
