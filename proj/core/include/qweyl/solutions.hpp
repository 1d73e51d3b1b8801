#pragma once

// Canonical solution families of the matrix relation y*x - gamma*x*y = 1 and
// structural checks on arbitrary candidate pairs.

#include <optional>
#include <vector>

#include "qweyl/field.hpp"
#include "qweyl/matrix.hpp"

namespace qweyl {

// A candidate pair. Nothing is validated at aggregation time; verify_relation
// is the entry point for foreign pairs, and the solution_* builders below
// check the relation on construction.
struct Solution {
  FieldCtx ctx;
  Mat x;
  Mat y;

  std::size_t size() const { return x.rows(); }
};

// l x l upper shift matrix: ones on the first superdiagonal.
Mat shift_x(const FieldCtx& ctx);

// Companion of the shift: subdiagonal entry (k+1, k) is the geometric sum
// 1 + gamma + ... of length l-1-k+1, corner (1, l) is beta, zeros elsewhere.
Mat singular_y(const FieldCtx& ctx, const FieldElem& beta);

// General form of any solution partner of the shift: entry (i, j) for j >= i
// is gamma^(l-j) * alpha_(l+i-j), same subdiagonal as singular_y.
// Requires |alphas| = l.
Mat singular_y_alphas(const FieldCtx& ctx, const std::vector<FieldElem>& alphas);

// lambda * diag(gamma, gamma^2, ..., gamma^l). Requires lambda != 0.
Mat nonsingular_x(const FieldCtx& ctx, const FieldElem& lambda);

// Partner of nonsingular_x: diagonal entry (k, k) = ((1-gamma) gamma^k lambda)^-1,
// b_k at (k, k+1), b_l at (l, 1). Requires lambda and every b nonzero, |bs| = l.
Mat nonsingular_y(const FieldCtx& ctx, const FieldElem& lambda,
                  const std::vector<FieldElem>& bs);

// nonsingular_y with bs = (1, ..., 1, eta). Requires lambda, eta nonzero.
Mat nonsingular_y_eta(const FieldCtx& ctx, const FieldElem& lambda,
                      const FieldElem& eta);

// Builders returning whole pairs; each asserts the relation exactly.
Solution singular_solution(const FieldCtx& ctx, const FieldElem& beta);
Solution singular_solution_alphas(const FieldCtx& ctx,
                                  const std::vector<FieldElem>& alphas);
Solution nonsingular_solution(const FieldCtx& ctx, const FieldElem& lambda,
                              const std::vector<FieldElem>& bs);
Solution nonsingular_solution_eta(const FieldCtx& ctx, const FieldElem& lambda,
                                  const FieldElem& eta);

struct RelationReport {
  bool pass = false;
  bool commutes = false;  // y*x == x*y, the excluded degenerate case
  std::optional<Mat> residual;  // y*x - gamma*x*y - 1, present when failing
};

// Exact check of y*x - gamma*x*y = 1. Throws ShapeMismatch for non-square or
// mismatched sizes.
RelationReport verify_relation(const Solution& s);

struct StructuralReport {
  std::optional<FieldElem> x_power_scalar;  // x^l when scalar
  std::optional<FieldElem> y_power_scalar;  // y^l when scalar
  bool ux_skew = false;        // u*x == gamma * x*u, with u = y*x - x*y
  bool yu_skew = false;        // y*u == gamma * u*y
  bool u_invertible = false;
  bool spectrum_checked = false;  // x had a findable nonzero eigenvalue
  bool spectrum_orbit = false;    // spectrum is {gamma^k * mu : k = 1..l}

  bool all_pass() const {
    return x_power_scalar && y_power_scalar && ux_skew && yu_skew &&
           u_invertible && (!spectrum_checked || spectrum_orbit);
  }
};

// Structural facts every irreducible solution satisfies: x^l and y^l scalar,
// u = y*x - x*y skew-commutes with both through gamma and is invertible, and
// the x-spectrum is a full gamma-orbit when an eigenvalue is visible in the
// field. Requires verify_relation to pass.
StructuralReport structural_report(const Solution& s);

// Product of the partial geometric sums picked up while raising singular_y to
// the v-th power: the lone nonzero entry of row l of y^v, at column l-v.
// Requires 1 <= v <= l-1.
FieldElem power_row_value(const FieldCtx& ctx, int v);

}  // namespace qweyl
