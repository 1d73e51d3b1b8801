#pragma once

// Canonicalization of irreducible solutions up to simultaneous similarity,
// explicit conjugation witnesses, and the intertwiner-based equivalence test.

#include <optional>
#include <utility>
#include <vector>

#include "qweyl/matrix.hpp"
#include "qweyl/solutions.hpp"

namespace qweyl {

struct CanonicalForm {
  enum class Tag { singular_beta, nonsingular_lambda_eta };

  Tag tag = Tag::singular_beta;
  std::optional<FieldElem> beta;    // singular: corner parameter, may be zero
  std::optional<FieldElem> lambda;  // nonsingular: orbit representative, nonzero
  std::optional<FieldElem> eta;     // nonsingular: corner parameter, nonzero

  static CanonicalForm singular(FieldElem b);
  static CanonicalForm nonsingular(FieldElem lambda_rep, FieldElem e);

  bool operator==(const CanonicalForm& o) const;
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
};

// The canonical pair named by a form.
Solution realize(const FieldCtx& ctx, const CanonicalForm& form);

// Representative of the multiplicative orbit {gamma^i * v}: smallest residue
// over a prime field, lexicographically least coefficient vector over a
// cyclotomic field. Requires v != 0.
FieldElem orbit_representative(const FieldElem& v);

struct ReductionTrace {
  std::vector<std::size_t> block_sizes;   // nilpotent path: Jordan structure of x
  std::optional<Mat> intermediate;        // conjugated y before the final steps
  std::vector<FieldElem> alphas;          // nilpotent path: read-off parameters
  std::vector<FieldElem> ps;              // nilpotent path: recursion outputs
  std::vector<FieldElem> bs;              // diagonal path: read-off parameters
};

struct Reduction {
  CanonicalForm canonical;
  Mat witness;  // q with q * x * q^-1 and q * y * q^-1 the canonical pair
  ReductionTrace trace;
};

// Affine description of all y with y * shift - gamma * shift * y = 1 at size
// n. Infeasible whenever l does not divide n; at n = l the family is the
// l-parameter alphas family.
struct AffineFamily {
  bool feasible = false;
  std::optional<Mat> particular;
  std::vector<Mat> basis;
};

AffineFamily solve_D_for_shift(const FieldCtx& ctx, std::size_t n);

// The triangular substitution eliminating the alphas of a shift-partner into
// the single corner parameter: returns (p_1..p_(l-1), beta).
// Requires |alphas| = l.
std::pair<std::vector<FieldElem>, FieldElem> recursion_p(
    const FieldCtx& ctx, const std::vector<FieldElem>& alphas);

// Canonicalize a solution whose x is nilpotent. Requires the pair verified;
// the Jordan structure of x must be a single full-size block.
Reduction reduce_singular(const Solution& s);

// Canonicalize a solution whose x has a nonzero eigenvalue in the field.
Reduction reduce_nonsingular(const Solution& s);

// Full pipeline: verify, reject commutative pairs, require irreducibility,
// then dispatch on the nilpotency of x.
Reduction canonicalize(const Solution& s);

// Basis of {q : q * x1 = x2 * q and q * y1 = y2 * q}, the space of maps
// intertwining `from` into `to`. Dimension 0 or 1 when both are irreducible.
std::vector<Mat> intertwiners(const Solution& from, const Solution& to);

// Invertible intertwiner if one is found: basis members first, then pairwise
// sums, then exhaustive coefficient search over a prime field at small sizes.
// For reducible pairs the search is honest but incomplete.
std::optional<Mat> are_equivalent(const Solution& from, const Solution& to);

}  // namespace qweyl
