#pragma once

// Irreducibility by algebra dimension: a pair is irreducible exactly when the
// unital algebra generated by x and y is the full matrix algebra. Also the
// constructive converse for the shift family: explicit monomial combinations
// that evaluate to each elementary matrix.

#include <cstddef>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/solutions.hpp"

namespace qweyl {

struct SubalgebraBasis {
  std::size_t n = 0;          // ambient matrix size
  std::vector<Mat> basis;     // linearly independent, spans the algebra

  std::size_t dim() const { return basis.size(); }
};

// Closure from {1}: breadth-first over products with x and y (left before
// right, x before y), keeping only span-enlarging elements. Deterministic.
// Refuses non-solutions unless allow_nonsolution is set.
SubalgebraBasis generated_algebra(const Solution& s, bool allow_nonsolution = false);

// dim(generated_algebra) == n^2.
bool is_irreducible(const Solution& s, bool allow_nonsolution = false);

struct ElementaryTerm {
  int i = 0;  // x exponent
  int j = 0;  // y exponent
  FieldElem coeff;
};

// Expresses the elementary matrix e_mn as sum coeff * x^i y^j with
// 0 <= i, j <= l-1. Induction on the row index m: x^(l-m) y^(l-n) equals the
// leading product times e_mn plus terms supported on rows above m.
struct ElementaryCombination {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<ElementaryTerm> terms;
};

// Requires s to be literally (shift_x, singular_y(beta)) and 1 <= m, n <= l.
ElementaryCombination elementary_in_monomials(const Solution& s, std::size_t m,
                                              std::size_t n);

}  // namespace qweyl
