#pragma once

#include "toric/configuration.hpp"

#include <string>
#include <variant>
#include <vector>

namespace toric {

/// A class of parallel Gale rows.
struct LineClass {
  IntVector direction; // primitive, first nonzero entry positive
  IndexSet members;
  IntVector sum;
};

namespace witness {

struct None {};

/// A line class whose Gale rows do not sum to zero.
struct ViolatingLine {
  LineClass line;
};

/// Every line class, all summing to zero.
struct BalancedLines {
  std::vector<LineClass> lines;
};

/// Strictly positive coefficients on the listed Gale rows summing to zero.
struct PositiveRelation {
  IndexSet indices;
  RatVector coefficients;
};

/// A direction y in Gale space with <b_i, y> >= 0 on the listed rows, not
/// all zero: no positive relation exists among them.
struct GaleSeparation {
  IndexSet indices;
  RatVector direction;
};

/// Rational coefficients of an affine functional l(x) = constant + <linear, x>.
struct Functional {
  Rational constant;
  RatVector linear;
};

/// One functional per class, equal to 1 on the class and 0 elsewhere.
struct ClassFunctionals {
  std::vector<IndexSet> classes;
  std::vector<RatVector> functionals;
};

/// A subset of rows whose sum is odd in every column.
struct ParitySubset {
  IndexSet rows;
};

/// Per Gale column: the two signed products compared by the binomial test.
struct BinomialProducts {
  IntMatrix basis;
  std::vector<Integer> positive_side;
  std::vector<Integer> negative_side;
  /// First failing column, or -1.
  long failing_column = -1;
};

struct VertexCertificate {
  std::size_t vertex = 0;
  std::vector<std::size_t> edge_targets;
  std::vector<IntVector> edge_vectors;
  Integer lattice_index; // |det| of the edge vectors in lattice coordinates
};

struct SmoothnessCertificate {
  std::vector<VertexCertificate> vertices;
  /// Vertex whose edge data failed, or -1.
  long failing_vertex = -1;
  std::string reason;
};

using Payload =
    std::variant<None, ViolatingLine, BalancedLines, PositiveRelation,
                 GaleSeparation, Functional, ClassFunctionals, ParitySubset, BinomialProducts,
                 SmoothnessCertificate, DecompositionReport>;

} // namespace witness

/// Boolean result with the evidence that produced it and the criterion used.
struct Verdict {
  bool value = false;
  std::string criterion;
  witness::Payload witness;
  /// Free-form remarks (e.g. an ambiguity in the decision path).
  std::vector<std::string> notes;

  explicit operator bool() const noexcept { return value; }
};

} // namespace toric
