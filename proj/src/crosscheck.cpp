#include "toric/crosscheck.hpp"

#include "toric/gale.hpp"
#include "toric/generators.hpp"
#include "toric/oracle.hpp"
#include "toric/sampling.hpp"
#include "toric/selfdual.hpp"

#include <algorithm>
#include <sstream>

namespace toric::crosscheck {

namespace {

constexpr std::size_t kMaxExamples = 5;

void violation(SweepResult &r, const std::string &what) {
  ++r.violations;
  if (r.examples.size() < kMaxExamples)
    r.examples.push_back(what);
}

IndexSet bits(unsigned long mask, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1ul << i))
      out.push_back(i);
  return out;
}

std::string show(const IndexSet &s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

bool non_pyramidal(const Configuration &c) {
  GaleDual b = gale::gale_dual(c);
  return b.rank() > 0 && !b.has_zero_row();
}

// Number of points in the strong_via_points grid, capped.
std::size_t grid_size(const GaleDual &b) {
  unsigned long degree = 0;
  for (std::size_t col = 0; col < b.rank(); ++col) {
    unsigned long d = 0;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.matrix(j, col) > 0)
        d += b.matrix(j, col).get_ui();
    degree = std::max(degree, d);
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < b.rank() && total <= 1u << 20; ++k)
    total *= degree + 1;
  return total;
}

} // namespace

std::string describe(const Configuration &c) {
  std::ostringstream os;
  os << c.weights;
  return os.str();
}

SweepResult selfdual_equivalence(const std::vector<Configuration> &corpus) {
  SweepResult r;
  r.name = "self-dual criteria agree (lines, flats, sigma, coparallel)";
  for (const auto &c : corpus) {
    ++r.instances;
    GaleDual b = gale::gale_dual(c);
    bool lines = gale::line_sums_zero(b).value;
    bool flats = oracle::self_dual_via_flats(b);
    bool sigma = oracle::self_dual_via_sigma(config::regularize(c));
    bool aside = gale::coparallel_criterion(c).value;
    bool engine = engine::is_self_dual(c).value;
    r.checks += 5;
    if (lines)
      ++r.positives;
    if (lines != flats || lines != sigma || lines != aside || lines != engine) {
      std::ostringstream os;
      os << describe(c) << " lines=" << lines << " flats=" << flats
         << " sigma=" << sigma << " coparallel=" << aside
         << " engine=" << engine;
      violation(r, os.str());
    }
  }
  return r;
}

SweepResult lawrence_parity(std::uint64_t seed, std::size_t count) {
  SweepResult r;
  r.name = "Lawrence parity matches strong self-duality";
  sampling::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    IntMatrix m = sampling::random_lawrence_matrix(rng);
    Configuration lift = gen::lawrence(m);
    ++r.instances;
    bool parity = engine::lawrence_strong_parity(m).value;
    bool strong = engine::is_strongly_self_dual(lift).value;
    bool self_dual = engine::is_self_dual(lift).value;
    r.checks += 2;
    if (parity)
      ++r.positives;
    if (parity != strong || !self_dual) {
      std::ostringstream os;
      os << "M=" << m << " parity=" << parity << " strong=" << strong
         << " self_dual=" << self_dual;
      violation(r, os.str());
    }
  }
  return r;
}

SweepResult coparallel_equivalence(std::uint64_t seed, std::size_t count) {
  SweepResult r;
  r.name = "parallel Gale rows match circuit membership";
  sampling::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Configuration c = sampling::random_repeat_free(rng, 8, 3);
    ++r.instances;
    ++r.checks;
    auto lines = gale::coparallel_classes(gale::gale_dual(c)).classes;
    auto circuits = oracle::coparallel_via_circuits(c);
    if (non_pyramidal(c))
      ++r.positives;
    if (lines != circuits)
      violation(r, describe(c));
  }
  return r;
}

SweepResult facial_equivalence(std::uint64_t seed, std::size_t count,
                               std::size_t max_points) {
  SweepResult r;
  r.name = "Gale facial test matches separating functional";
  sampling::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Configuration c = sampling::random_repeat_free(rng, max_points, 3);
    ++r.instances;
    for (unsigned long mask = 1; mask < (1ul << c.size()); ++mask) {
      IndexSet s = bits(mask, c.size());
      bool gale = gale::is_facial(c, s).value;
      bool direct = oracle::facial_via_separation(c, s);
      ++r.checks;
      if (gale)
        ++r.positives;
      if (gale != direct)
        violation(r, describe(c) + " subset " + show(s));
    }
  }
  return r;
}

SweepResult hereditary(const std::vector<Configuration> &corpus) {
  SweepResult r;
  r.name = "non-pyramidal subsets of self-dual instances are facial and "
           "self-dual";
  for (const auto &c : corpus) {
    if (!engine::is_self_dual(c).value)
      continue;
    ++r.instances;
    for (unsigned long mask = 1; mask < (1ul << c.size()); ++mask) {
      IndexSet s = bits(mask, c.size());
      Configuration d = config::subconfiguration(c, s);
      if (!non_pyramidal(d))
        continue;
      ++r.checks;
      if (s.size() < c.size())
        ++r.positives;
      bool facial = gale::is_facial(c, s).value &&
                    oracle::facial_via_separation(c, s);
      bool self_dual = engine::is_self_dual(d).value;
      if (!facial || !self_dual) {
        std::ostringstream os;
        os << describe(c) << " subset " << show(s) << " facial=" << facial
           << " self_dual=" << self_dual;
        violation(r, os.str());
      }
    }
  }
  return r;
}

SweepResult hypersurface_law(const std::vector<Configuration> &corpus) {
  SweepResult r;
  r.name = "non-pyramidal hypersurfaces are self-dual";
  for (const auto &c : corpus) {
    if (c.size() != config::affine_dim(c) + 2 || !non_pyramidal(c))
      continue;
    ++r.instances;
    ++r.checks;
    bool self_dual = engine::is_self_dual(c).value;
    bool classified = engine::hypersurface_class(c) !=
                      engine::HypersurfaceClass::NotHypersurface;
    if (self_dual)
      ++r.positives;
    if (!self_dual || !classified)
      violation(r, describe(c));
  }
  return r;
}

SweepResult strong_equivalence(const std::vector<Configuration> &corpus) {
  SweepResult r;
  r.name = "strong self-duality: binomial products match point evaluation";
  for (const auto &c : corpus) {
    Configuration reg = config::regularize(c);
    GaleDual b = gale::gale_dual(reg);
    if (b.has_zero_row() || grid_size(b) > 4096)
      continue;
    ++r.instances;
    ++r.checks;
    bool strong = engine::is_strongly_self_dual(reg).value;
    bool points = oracle::strong_via_points(reg);
    if (strong)
      ++r.positives;
    if (strong != points) {
      std::ostringstream os;
      os << describe(c) << " binomial=" << strong << " points=" << points;
      violation(r, os.str());
    }
  }
  return r;
}

std::vector<SweepResult> run_all(std::uint64_t seed, std::size_t count) {
  auto corpus = sampling::selfdual_corpus(seed, count);
  std::vector<SweepResult> out;
  out.push_back(selfdual_equivalence(corpus));
  out.push_back(lawrence_parity(seed + 1, count));
  out.push_back(coparallel_equivalence(seed + 2, count));
  out.push_back(facial_equivalence(seed + 3, count));
  out.push_back(hereditary(corpus));
  out.push_back(hypersurface_law(corpus));
  out.push_back(strong_equivalence(corpus));
  return out;
}

} // namespace toric::crosscheck
