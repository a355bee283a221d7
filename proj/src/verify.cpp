#include "toric/verify.hpp"

#include "toric/gale.hpp"
#include "toric/generators.hpp"
#include "toric/oracle.hpp"
#include "toric/selfdual.hpp"

#include <algorithm>

namespace toric::verify {

namespace {

void fail(Outcome &o, const std::string &why) {
  o.agrees = false;
  o.details.push_back(why);
}

void check_lines(Outcome &o, const GaleDual &b,
                 const std::vector<LineClass> &lines, bool require_zero) {
  IndexSet seen;
  for (const auto &l : lines) {
    IntVector sum(b.rank());
    for (auto i : l.members) {
      IntVector r = b.row(i);
      if (primitive_direction(r) != l.direction)
        fail(o, "row " + std::to_string(i) + " is not on the stated line");
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] += r[k];
      seen.push_back(i);
    }
    if (sum != l.sum)
      fail(o, "stated line sum is wrong");
    if (require_zero && !is_zero(sum))
      fail(o, "line does not sum to zero");
    if (!require_zero && is_zero(sum))
      fail(o, "violating line actually sums to zero");
  }
  if (require_zero) {
    std::sort(seen.begin(), seen.end());
    if (seen.size() != b.size() ||
        std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      fail(o, "line classes do not partition the Gale rows");
  }
}

} // namespace

Outcome self_dual(const Configuration &c, const Verdict &v) {
  Outcome o;
  o.agrees = true;
  if (!config::has_repeats(c) && !gale::gale_dual(c).has_zero_row()) {
    o.method = "flats + sigma";
    GaleDual b = gale::gale_dual(c);
    bool flats = oracle::self_dual_via_flats(b);
    bool sigma = oracle::self_dual_via_sigma(config::regularize(c));
    if (flats != v.value || sigma != v.value)
      fail(o, "oracle verdict differs");
    if (auto *w = std::get_if<witness::BalancedLines>(&v.witness))
      check_lines(o, b, w->lines, true);
    else if (auto *w = std::get_if<witness::ViolatingLine>(&v.witness))
      check_lines(o, b, {w->line}, false);
    return o;
  }

  // Apexes recomputed as the points lying on no circuit.
  o.method = "circuit apexes + flats on core";
  Configuration norm =
      config::normalize_lattice(config::regularize(c)).config;
  DedupReport d = config::dedup(norm);
  auto circuits = oracle::enumerate_circuits(d.distinct);
  IndexSet apex, core;
  for (std::size_t i = 0; i < d.distinct.size(); ++i) {
    bool on_circuit = std::any_of(
        circuits.begin(), circuits.end(),
        [i](const oracle::Circuit &ci) { return ci.relation[i] != 0; });
    (on_circuit ? core : apex).push_back(i);
  }
  bool expected = apex.size() == d.repeat_codim();
  if (expected && !core.empty())
    expected = oracle::self_dual_via_flats(
        gale::gale_dual(config::subconfiguration(d.distinct, core)));
  if (auto *rep = std::get_if<DecompositionReport>(&v.witness)) {
    if (rep->apex_indices != apex || rep->core_indices != core)
      fail(o, "apex/core split differs from circuit membership");
    if (rep->repeat_codim != d.repeat_codim())
      fail(o, "repeat count differs");
    // A failed lattice splitting is a rejection the oracle cannot see.
    if (!rep->splitting_valid)
      expected = false;
  }
  if (expected != v.value)
    fail(o, "oracle verdict differs");
  return o;
}

Outcome strong(const Configuration &c, const Verdict &v) {
  Outcome o;
  o.method = "point evaluation";
  o.agrees = oracle::strong_via_points(c) == v.value;
  if (!o.agrees)
    o.details.push_back("oracle verdict differs");
  if (auto *w = std::get_if<witness::BinomialProducts>(&v.witness)) {
    if (!gale::verify_gale_dual(c, w->basis))
      fail(o, "witness basis is not a Gale dual");
  }
  return o;
}

Outcome facial(const Configuration &c, const IndexSet &subset,
               const Verdict &v) {
  Outcome o;
  o.method = "separating functional";
  o.agrees = oracle::facial_via_separation(c, subset) == v.value;
  if (!o.agrees)
    o.details.push_back("oracle verdict differs");
  GaleDual b = gale::gale_dual(c);
  if (auto *w = std::get_if<witness::PositiveRelation>(&v.witness)) {
    RatVector sum(b.rank());
    for (std::size_t k = 0; k < w->indices.size(); ++k) {
      if (w->coefficients[k] <= 0)
        fail(o, "coefficient is not positive");
      for (std::size_t j = 0; j < b.rank(); ++j)
        sum[j] += w->coefficients[k] * b.matrix(w->indices[k], j);
    }
    for (const auto &x : sum)
      if (x != 0)
        fail(o, "positive relation does not vanish");
  } else if (auto *w = std::get_if<witness::GaleSeparation>(&v.witness)) {
    bool strict = false;
    for (auto i : w->indices) {
      Rational s = 0;
      for (std::size_t j = 0; j < b.rank(); ++j)
        s += w->direction[j] * b.matrix(i, j);
      if (s < 0)
        fail(o, "separating direction is negative on a row");
      strict = strict || s > 0;
    }
    if (!strict)
      fail(o, "separating direction vanishes on every row");
  }
  return o;
}

Outcome smoothness(const Configuration &c, const Verdict &v) {
  Outcome o;
  o.method = "vertices by separating functional";
  o.agrees = true;
  auto *w = std::get_if<witness::SmoothnessCertificate>(&v.witness);
  if (!w) {
    fail(o, "missing smoothness certificate");
    return o;
  }
  IndexSet vertices;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (oracle::facial_via_separation(c, {i}))
      vertices.push_back(i);
  IndexSet listed;
  for (const auto &vc : w->vertices) {
    listed.push_back(vc.vertex);
    for (auto t : vc.edge_targets)
      if (!oracle::facial_via_separation(c, {vc.vertex, t}))
        fail(o, "edge " + std::to_string(vc.vertex) + "-" +
                    std::to_string(t) + " is not a face");
  }
  if (listed != vertices)
    fail(o, "vertex set differs");
  return o;
}

Outcome lawrence_parity(const IntMatrix &m, const Verdict &v) {
  Outcome o;
  o.method = "strong self-duality of the lift";
  Configuration lift = gen::lawrence(m);
  o.agrees = engine::is_strongly_self_dual(lift).value == v.value;
  if (!o.agrees)
    o.details.push_back("lift verdict differs");
  if (auto *w = std::get_if<witness::ParitySubset>(&v.witness)) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      Integer s = 0;
      for (auto r : w->rows)
        s += m(r, k);
      if (s % 2 == 0)
        fail(o, "column " + std::to_string(k) + " has an even sum");
    }
  }
  return o;
}

} // namespace toric::verify
