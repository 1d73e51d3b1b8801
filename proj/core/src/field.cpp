#include "qweyl/field.hpp"

#include <algorithm>
#include <utility>

namespace qweyl {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::no_root_of_unity: return "NoRootOfUnity";
    case Errc::hint_not_primitive: return "HintNotPrimitive";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::ctx_mismatch: return "CtxMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::singular: return "Singular";
    case Errc::not_nilpotent: return "NotNilpotent";
    case Errc::bad_length: return "BadLength";
    case Errc::zero_parameter: return "ZeroParameter";
    case Errc::range_error: return "RangeError";
    case Errc::wrong_family: return "WrongFamily";
    case Errc::not_irreducible_shape: return "NotIrreducibleShape";
    case Errc::no_eigenvalue_in_field: return "NoEigenvalueInField";
    case Errc::zero_offdiagonal: return "ZeroOffdiagonal";
    case Errc::commutative_pair: return "CommutativePair";
    case Errc::not_a_solution: return "NotASolution";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::unsupported_over_this_field: return "UnsupportedOverThisField";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

namespace detail {

struct CtxData {
  FieldKind kind = FieldKind::prime;
  int l = 0;
  std::int64_t p = 0;
  std::int64_t gamma_res = 0;
  int degree = 1;
  std::vector<mpz_class> phi;       // Phi_l, lowest power first, monic
  std::vector<mpq_class> gamma_co;  // class of t reduced mod phi
};

static bool same_ctx(const CtxData& a, const CtxData& b) {
  if (a.kind != b.kind || a.l != b.l) return false;
  if (a.kind == FieldKind::prime) return a.p == b.p && a.gamma_res == b.gamma_res;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// modular arithmetic on int64 residues

static std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  return a;
}

static std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

static std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

static std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) fail(Errc::division_by_zero, "no inverse of " + std::to_string(a));
  return mod_norm(t, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t smallest_prime_with_root(int l) {
  if (l < 2) fail(Errc::range_error, "l must be at least 2");
  for (std::int64_t p = l + 1;; p += l)
    if (is_prime(p)) return p;
}

// ---------------------------------------------------------------------------
// rational polynomial helpers (coefficient vectors, lowest power first)

static void q_trim(std::vector<mpq_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

static std::vector<mpq_class> q_mul(const std::vector<mpq_class>& a,
                                    const std::vector<mpq_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpq_class> c(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// Remainder of division by a monic integer polynomial of degree d, in place.
static void q_reduce_mod(std::vector<mpq_class>& c, const std::vector<mpz_class>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    mpq_class coef = c[i];
    c[i] = 0;
    for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= coef * phi[j];
  }
  c.resize(d, mpq_class(0));
}

// Quotient and remainder in Q[t]; divisor need not be monic.
static std::pair<std::vector<mpq_class>, std::vector<mpq_class>> q_divmod(
    std::vector<mpq_class> a, std::vector<mpq_class> b) {
  q_trim(a);
  q_trim(b);
  std::vector<mpq_class> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / lead;
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    q_trim(a);
  }
  return {q, a};
}

// Inverse of a modulo the monic irreducible phi, by the extended Euclidean
// algorithm in Q[t].
static std::vector<mpq_class> q_inverse_mod(const std::vector<mpq_class>& a,
                                            const std::vector<mpz_class>& phi) {
  std::vector<mpq_class> r0(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = mpq_class(phi[i]);
  std::vector<mpq_class> r1 = a;
  q_trim(r1);
  if (r1.empty()) fail(Errc::division_by_zero, "inverse of zero");
  std::vector<mpq_class> s0 = {}, s1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = q_divmod(r0, r1);
    // s_next = s0 - q * s1
    std::vector<mpq_class> qs = q_mul(q, s1);
    std::vector<mpq_class> s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    q_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; since phi is irreducible and a != 0 it is a nonzero constant.
  mpq_class c = r0.empty() ? mpq_class(0) : r0[0];
  if (r0.size() != 1 || c == 0)
    fail(Errc::division_by_zero, "element shares a factor with the modulus");
  for (auto& v : s0) v /= c;
  q_reduce_mod(s0, phi);
  return s0;
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials over Z (exact division by monic divisors)

static std::vector<mpz_class> z_mul(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division of integer polynomials, divisor monic.
static std::vector<mpz_class> z_divexact(std::vector<mpz_class> a,
                                         const std::vector<mpz_class>& b) {
  std::vector<mpz_class> q(a.size() - b.size() + 1, mpz_class(0));
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpz_class f = a.back();
    if (f != 0) {
      q[shift] = f;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    a.pop_back();
  }
  return q;
}

static std::vector<mpz_class> cyclotomic_poly(int l) {
  // Phi_l = (x^l - 1) / prod_{d | l, d < l} Phi_d
  std::vector<std::vector<mpz_class>> memo(l + 1);
  for (int d = 1; d <= l; ++d) {
    if (l % d != 0) continue;
    std::vector<mpz_class> num(d + 1, mpz_class(0));
    num[0] = -1;
    num[d] = 1;
    std::vector<mpz_class> den = {mpz_class(1)};
    for (int e = 1; e < d; ++e)
      if (d % e == 0) den = z_mul(den, memo[e]);
    memo[d] = z_divexact(std::move(num), den);
  }
  return memo[l];
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx FieldCtx::prime(std::int64_t p, int l, std::optional<std::int64_t> gamma_hint) {
  if (l < 2) fail(Errc::range_error, "l must be at least 2");
  if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
  if ((p - 1) % l != 0)
    fail(Errc::no_root_of_unity,
         "F_" + std::to_string(p) + " has no primitive root of unity of order " +
             std::to_string(l));

  auto primitive = [&](std::int64_t g) {
    if (mod_pow(g, l, p) != 1) return false;
    for (int k = 1; k < l; ++k)
      if (mod_pow(g, k, p) == 1) return false;
    return true;
  };

  std::int64_t gamma = 0;
  if (gamma_hint) {
    gamma = *gamma_hint;
    if (gamma < 0 || gamma >= p || !primitive(gamma))
      fail(Errc::hint_not_primitive,
           std::to_string(*gamma_hint) + " is not a primitive root of unity of order " +
               std::to_string(l) + " in F_" + std::to_string(p));
  } else {
    for (std::int64_t g = 2; g < p; ++g)
      if (primitive(g)) {
        gamma = g;
        break;
      }
  }

  auto d = std::make_shared<detail::CtxData>();
  d->kind = FieldKind::prime;
  d->l = l;
  d->p = p;
  d->gamma_res = gamma;
  d->degree = 1;
  return FieldCtx(std::move(d));
}

FieldCtx FieldCtx::cyclotomic(int l) {
  if (l < 2) fail(Errc::range_error, "l must be at least 2");
  auto d = std::make_shared<detail::CtxData>();
  d->kind = FieldKind::cyclotomic;
  d->l = l;
  d->phi = cyclotomic_poly(l);
  d->degree = static_cast<int>(d->phi.size()) - 1;
  std::vector<mpq_class> t = {mpq_class(0), mpq_class(1)};
  q_reduce_mod(t, d->phi);
  d->gamma_co = std::move(t);
  return FieldCtx(std::move(d));
}

FieldKind FieldCtx::kind() const { return data_->kind; }
int FieldCtx::l() const { return data_->l; }

std::int64_t FieldCtx::p() const {
  if (data_->kind != FieldKind::prime)
    fail(Errc::ctx_mismatch, "characteristic requested from a cyclotomic context");
  return data_->p;
}

int FieldCtx::degree() const { return data_->degree; }

const std::vector<mpz_class>& FieldCtx::modulus() const {
  if (data_->kind != FieldKind::cyclotomic)
    fail(Errc::ctx_mismatch, "modulus requested from a prime context");
  return data_->phi;
}

FieldElem FieldCtx::zero() const { return from_int(0); }
FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::gamma() const {
  if (data_->kind == FieldKind::prime) return FieldElem(data_, data_->gamma_res);
  return FieldElem(data_, data_->gamma_co);
}

FieldElem FieldCtx::gamma_pow(long k) const { return gamma().pow(k); }

FieldElem FieldCtx::from_int(long v) const {
  if (data_->kind == FieldKind::prime) return FieldElem(data_, mod_norm(v, data_->p));
  std::vector<mpq_class> c(data_->degree, mpq_class(0));
  c[0] = v;
  return FieldElem(data_, std::move(c));
}

FieldElem FieldCtx::from_rational(const mpq_class& q) const {
  if (data_->kind == FieldKind::cyclotomic) {
    std::vector<mpq_class> c(data_->degree, mpq_class(0));
    c[0] = q;
    return FieldElem(data_, std::move(c));
  }
  mpz_class num = q.get_num() % data_->p;
  std::int64_t n = mod_norm(num.get_si(), data_->p);
  mpz_class den = q.get_den() % data_->p;
  std::int64_t dn = mod_norm(den.get_si(), data_->p);
  if (dn == 0) fail(Errc::division_by_zero, "denominator divisible by p");
  return FieldElem(data_, mod_mul(n, mod_inv(dn, data_->p), data_->p));
}

FieldElem FieldCtx::from_residue(std::int64_t r) const {
  if (data_->kind != FieldKind::prime)
    fail(Errc::ctx_mismatch, "residue element requested from a cyclotomic context");
  return FieldElem(data_, mod_norm(r, data_->p));
}

FieldElem FieldCtx::from_coeffs(std::vector<mpq_class> c) const {
  if (data_->kind != FieldKind::cyclotomic)
    fail(Errc::ctx_mismatch, "coefficient element requested from a prime context");
  if (static_cast<int>(c.size()) != data_->degree)
    fail(Errc::bad_length, "expected " + std::to_string(data_->degree) +
                               " coefficients, got " + std::to_string(c.size()));
  for (auto& v : c) v.canonicalize();
  return FieldElem(data_, std::move(c));
}

FieldElem FieldCtx::geometric_sum(long k) const {
  if (k < 0 || k > data_->l - 1)
    fail(Errc::range_error, "geometric sum index out of [0, l-1]");
  FieldElem s = zero();
  FieldElem g = one();
  for (long i = 0; i <= k; ++i) {
    s += g;
    g *= gamma();
  }
  return s;
}

bool FieldCtx::operator==(const FieldCtx& o) const {
  return data_ == o.data_ || detail::same_ctx(*data_, *o.data_);
}

// ---------------------------------------------------------------------------
// FieldElem

FieldCtx FieldElem::ctx() const { return FieldCtx(data_); }
FieldKind FieldElem::kind() const { return data_->kind; }

void FieldElem::require_same_ctx(const FieldElem& o) const {
  if (data_ == o.data_) return;
  if (!detail::same_ctx(*data_, *o.data_))
    fail(Errc::ctx_mismatch, "operands belong to different field contexts");
}

bool FieldElem::is_zero() const {
  if (data_->kind == FieldKind::prime) return res_ == 0;
  return std::all_of(co_.begin(), co_.end(), [](const mpq_class& q) { return q == 0; });
}

bool FieldElem::is_one() const {
  if (data_->kind == FieldKind::prime) return res_ == 1 % data_->p;
  if (co_[0] != 1) return false;
  for (std::size_t i = 1; i < co_.size(); ++i)
    if (co_[i] != 0) return false;
  return true;
}

std::int64_t FieldElem::residue() const {
  if (data_->kind != FieldKind::prime)
    fail(Errc::ctx_mismatch, "residue of a cyclotomic element");
  return res_;
}

const std::vector<mpq_class>& FieldElem::coeffs() const {
  if (data_->kind != FieldKind::cyclotomic)
    fail(Errc::ctx_mismatch, "coefficients of a prime-field element");
  return co_;
}

std::optional<mpq_class> FieldElem::as_rational() const {
  if (data_->kind != FieldKind::cyclotomic) return std::nullopt;
  for (std::size_t i = 1; i < co_.size(); ++i)
    if (co_[i] != 0) return std::nullopt;
  return co_[0];
}

FieldElem FieldElem::operator-() const {
  if (data_->kind == FieldKind::prime)
    return FieldElem(data_, res_ == 0 ? 0 : data_->p - res_);
  std::vector<mpq_class> c(co_.size());
  for (std::size_t i = 0; i < co_.size(); ++i) c[i] = -co_[i];
  return FieldElem(data_, std::move(c));
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  require_same_ctx(o);
  if (data_->kind == FieldKind::prime) {
    res_ = mod_norm(res_ + o.res_, data_->p);
  } else {
    for (std::size_t i = 0; i < co_.size(); ++i) co_[i] += o.co_[i];
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  require_same_ctx(o);
  if (data_->kind == FieldKind::prime) {
    res_ = mod_norm(res_ - o.res_, data_->p);
  } else {
    for (std::size_t i = 0; i < co_.size(); ++i) co_[i] -= o.co_[i];
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  require_same_ctx(o);
  if (data_->kind == FieldKind::prime) {
    res_ = mod_mul(res_, o.res_, data_->p);
  } else {
    std::vector<mpq_class> c = q_mul(co_, o.co_);
    if (c.empty()) c.assign(co_.size(), mpq_class(0));
    q_reduce_mod(c, data_->phi);
    co_ = std::move(c);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inv(); }

FieldElem FieldElem::inv() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  if (data_->kind == FieldKind::prime)
    return FieldElem(data_, mod_inv(res_, data_->p));
  return FieldElem(data_, q_inverse_mod(co_, data_->phi));
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r = ctx().one();
  FieldElem b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1) r *= b;
    b *= b;
    u >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  require_same_ctx(o);
  if (data_->kind == FieldKind::prime) return res_ == o.res_;
  return co_ == o.co_;
}

static std::string rat_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string FieldElem::str() const {
  if (data_->kind == FieldKind::prime) return std::to_string(res_);
  std::string s;
  for (std::size_t i = 0; i < co_.size(); ++i) {
    if (i) s += ",";
    s += rat_str(co_[i]);
  }
  return s;
}

bool lex_less(const FieldElem& a, const FieldElem& b) {
  if (a.kind() == FieldKind::prime) return a.residue() < b.residue();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace qweyl
