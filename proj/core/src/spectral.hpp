#pragma once

// Internal. Exact eigenvalue search used by the reduction of nonsingular
// solutions. Over a prime field the search is exhaustive. Over a cyclotomic
// field it covers eigenvalues of the form c * gamma^i with c rational, which
// is exactly the reach of the rational-root extraction below; anything else
// reports undecided so callers can surface an honest "unsupported" error.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qweyl/field.hpp"
#include "qweyl/matrix.hpp"

namespace qweyl::detail {

enum class EigenStatus { found, none_in_field, undecided };

struct EigenResult {
  EigenStatus status;
  std::optional<FieldElem> value;
};

// Rational l-th roots of a rational number, if any. Exact integer root
// extraction on numerator and denominator; no approximation.
inline std::optional<mpq_class> rational_lth_root(const mpq_class& r, int l) {
  if (r == 0) return mpq_class(0);
  bool negative = r < 0;
  if (negative && l % 2 == 0) return std::nullopt;
  mpz_class num = abs(r.get_num());
  mpz_class den = r.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(l)))
    return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(l)))
    return std::nullopt;
  mpq_class root(rn, rd);
  root.canonicalize();
  if (negative) root = -root;
  return root;
}

// Smallest (by lex_less) nonzero eigenvalue of a in the field, where the
// matrix is known to satisfy a^l scalar when one exists in the searchable set.
inline EigenResult find_nonzero_eigenvalue(const Mat& a) {
  const FieldCtx& ctx = a.ctx();
  std::size_t n = a.rows();
  if (ctx.kind() == FieldKind::prime) {
    for (std::int64_t m = 1; m < ctx.p(); ++m) {
      FieldElem mu = ctx.from_int(m);
      Mat shifted = a - Mat::identity(ctx, n).scaled(mu);
      if (det(shifted).is_zero()) return {EigenStatus::found, mu};
    }
    return {EigenStatus::none_in_field, std::nullopt};
  }
  // Cyclotomic: eigenvalues of a are l-th roots of the scalar a^l. Look for a
  // rational root c and test the candidates c * gamma^i.
  Mat al = a.pow(static_cast<unsigned long>(ctx.l()));
  auto s = is_scalar(al);
  if (!s || s->is_zero()) return {EigenStatus::undecided, std::nullopt};
  auto rat = s->as_rational();
  if (!rat) return {EigenStatus::undecided, std::nullopt};
  auto root = rational_lth_root(*rat, ctx.l());
  if (!root) return {EigenStatus::undecided, std::nullopt};
  std::optional<FieldElem> best;
  FieldElem c = ctx.from_rational(*root);
  for (int i = 0; i < ctx.l(); ++i) {
    FieldElem cand = c * ctx.gamma_pow(i);
    Mat shifted = a - Mat::identity(ctx, n).scaled(cand);
    if (!det(shifted).is_zero()) continue;
    if (!best || lex_less(cand, *best)) best = cand;
  }
  if (best) return {EigenStatus::found, best};
  return {EigenStatus::undecided, std::nullopt};
}

}  // namespace qweyl::detail
