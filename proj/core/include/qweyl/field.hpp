#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

enum class FieldKind { prime, cyclotomic };

namespace detail {
struct CtxData;
}

class FieldElem;

/**
 * A coefficient field K together with a fixed primitive l-th root of unity gamma.
 *
 * Two kinds are supported:
 *  - prime:      F_p with l | p - 1. gamma is the smallest primitive l-th root
 *                of unity as an integer residue, unless a valid hint is given.
 *  - cyclotomic: Q(zeta_l) represented as Q[t] / Phi_l(t), elements stored as
 *                rational coefficient vectors of length phi(l). gamma is the
 *                class of t.
 *
 * Contexts are immutable and cheap to copy; all element operations check that
 * operands belong to structurally equal contexts.
 */
class FieldCtx {
 public:
  static FieldCtx prime(std::int64_t p, int l,
                        std::optional<std::int64_t> gamma_hint = std::nullopt);
  static FieldCtx cyclotomic(int l);

  FieldKind kind() const;
  int l() const;
  /// Characteristic p. Only meaningful for the prime kind.
  std::int64_t p() const;
  /// Degree of K over its prime field: phi(l) for cyclotomic, 1 for prime.
  int degree() const;
  /// Coefficients of Phi_l, lowest power first, monic. Cyclotomic kind only.
  const std::vector<mpz_class>& modulus() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem gamma() const;
  FieldElem gamma_pow(long k) const;
  FieldElem from_int(long v) const;
  FieldElem from_rational(const mpq_class& q) const;
  /// Prime kind: element from an integer residue (reduced mod p).
  FieldElem from_residue(std::int64_t r) const;
  /// Cyclotomic kind: element from a coefficient vector of length exactly phi(l).
  FieldElem from_coeffs(std::vector<mpq_class> c) const;

  /// sum_{i=0}^{k} gamma^i for 0 <= k <= l-1. Zero exactly at k = l-1.
  FieldElem geometric_sum(long k) const;

  bool operator==(const FieldCtx& o) const;
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

 private:
  explicit FieldCtx(std::shared_ptr<const detail::CtxData> d) : data_(std::move(d)) {}

  std::shared_ptr<const detail::CtxData> data_;
  friend class FieldElem;
};

class FieldElem {
 public:
  FieldElem() = delete;

  FieldCtx ctx() const;
  FieldKind kind() const;

  bool is_zero() const;
  bool is_one() const;

  /// Prime kind: the canonical residue in [0, p).
  std::int64_t residue() const;
  /// Cyclotomic kind: coefficients of the reduced representative, length phi(l).
  const std::vector<mpq_class>& coeffs() const;
  /// Cyclotomic kind: the constant coefficient if all higher ones vanish.
  std::optional<mpq_class> as_rational() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  FieldElem inv() const;
  /// Integer power; negative exponents require a unit.
  FieldElem pow(long e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Canonical text form: decimal residue, or comma-separated "num/den" list.
  std::string str() const;

 private:
  FieldElem(std::shared_ptr<const detail::CtxData> d, std::int64_t r)
      : data_(std::move(d)), res_(r) {}
  FieldElem(std::shared_ptr<const detail::CtxData> d, std::vector<mpq_class> c)
      : data_(std::move(d)), co_(std::move(c)) {}

  void require_same_ctx(const FieldElem& o) const;

  std::shared_ptr<const detail::CtxData> data_;
  std::int64_t res_ = 0;          // prime kind
  std::vector<mpq_class> co_;     // cyclotomic kind

  friend class FieldCtx;
};

/// Total order used for picking canonical orbit representatives:
/// residue order for prime fields, lexicographic coefficient order otherwise.
bool lex_less(const FieldElem& a, const FieldElem& b);

/// Smallest prime p with p = 1 (mod l), the default characteristic for
/// desk-scale experiments at a given l.
std::int64_t smallest_prime_with_root(int l);

bool is_prime(std::int64_t n);

}  // namespace qweyl
