#include "qweyl/reduce.hpp"

#include <stdexcept>
#include <string>

#include "qweyl/burnside.hpp"
#include "spectral.hpp"

namespace qweyl {

CanonicalForm CanonicalForm::singular(FieldElem b) {
  CanonicalForm f;
  f.tag = Tag::singular_beta;
  f.beta = std::move(b);
  return f;
}

CanonicalForm CanonicalForm::nonsingular(FieldElem lambda_rep, FieldElem e) {
  CanonicalForm f;
  f.tag = Tag::nonsingular_lambda_eta;
  f.lambda = std::move(lambda_rep);
  f.eta = std::move(e);
  return f;
}

bool CanonicalForm::operator==(const CanonicalForm& o) const {
  if (tag != o.tag) return false;
  if (tag == Tag::singular_beta) return *beta == *o.beta;
  return *lambda == *o.lambda && *eta == *o.eta;
}

Solution realize(const FieldCtx& ctx, const CanonicalForm& form) {
  if (form.tag == CanonicalForm::Tag::singular_beta)
    return singular_solution(ctx, *form.beta);
  return nonsingular_solution_eta(ctx, *form.lambda, *form.eta);
}

FieldElem orbit_representative(const FieldElem& v) {
  if (v.is_zero()) fail(Errc::zero_parameter, "orbit of zero is not represented");
  const FieldCtx& ctx = v.ctx();
  FieldElem best = v;
  FieldElem cur = v;
  for (int i = 1; i < ctx.l(); ++i) {
    cur *= ctx.gamma();
    if (lex_less(cur, best)) best = cur;
  }
  return best;
}

AffineFamily solve_D_for_shift(const FieldCtx& ctx, std::size_t n) {
  if (n == 0) fail(Errc::range_error, "size must be positive");
  // Equation (i, j) of d*shift - gamma*shift*d = 1 in the n^2 unknowns d_uv:
  // d_(i, j-1) - gamma * d_(i+1, j) = [i == j].
  Mat a(ctx, n * n, n * n);
  std::vector<FieldElem> rhs;
  rhs.reserve(n * n);
  FieldElem g = ctx.gamma();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = i * n + j;
      if (j >= 1) a.set(row, i * n + (j - 1), a.at(row, i * n + (j - 1)) + ctx.one());
      if (i + 1 < n) a.set(row, (i + 1) * n + j, a.at(row, (i + 1) * n + j) - g);
      rhs.push_back(i == j ? ctx.one() : ctx.zero());
    }
  AffineSolveResult sol = solve_linear(a, rhs);
  AffineFamily out;
  out.feasible = sol.feasible;
  if (!sol.feasible) return out;
  out.particular = unflatten(ctx, n, sol.particular);
  for (const auto& v : sol.basis) out.basis.push_back(unflatten(ctx, n, v));
  return out;
}

std::pair<std::vector<FieldElem>, FieldElem> recursion_p(
    const FieldCtx& ctx, const std::vector<FieldElem>& alphas) {
  long l = ctx.l();
  if (alphas.size() != static_cast<std::size_t>(l))
    fail(Errc::bad_length, "expected " + std::to_string(l) + " alphas");
  std::vector<FieldElem> ps(static_cast<std::size_t>(l - 1), ctx.zero());
  ps[l - 2] = alphas[l - 1];  // p_(l-1) = alpha_l
  for (long k = l - 2; k >= 1; --k) {
    FieldElem acc = alphas[k];  // alpha_(k+1)
    for (long i = k + 1; i <= l - 1; ++i) acc += alphas[l + k - i] * ps[i - 1];
    ps[k - 1] = acc / ctx.geometric_sum(l - 1 - k);
  }
  FieldElem beta = alphas[0];
  for (long i = 1; i <= l - 1; ++i) beta += alphas[l - i] * ps[i - 1];
  return {std::move(ps), std::move(beta)};
}

namespace {

void require_verified(const Solution& s) {
  if (!verify_relation(s).pass)
    fail(Errc::not_a_solution, "the pair does not satisfy the relation");
}

void check_witness(const Mat& q, const Solution& s, const Solution& target) {
  if (!(q * s.x == target.x * q && q * s.y == target.y * q))
    throw std::logic_error("conjugation witness fails its defining identities");
}

}  // namespace

Reduction reduce_singular(const Solution& s) {
  require_verified(s);
  const FieldCtx& ctx = s.ctx;
  std::size_t l = static_cast<std::size_t>(ctx.l());
  std::size_t n = s.size();
  if (!s.x.pow(n).is_zero()) fail(Errc::not_nilpotent, "x has a nonzero power");

  NilpotentForm nf = nilpotent_normalize(s.x);
  if (nf.block_sizes != std::vector<std::size_t>{l})
    fail(Errc::not_irreducible_shape,
         "x is not similar to a single full-size shift block");
  Mat d = nf.q * s.y * inverse(nf.q);

  std::vector<FieldElem> alphas;
  alphas.reserve(l);
  for (std::size_t i = 0; i < l; ++i) alphas.push_back(d.at(i, l - 1));
  if (d != singular_y_alphas(ctx, alphas))
    fail(Errc::not_irreducible_shape, "conjugated y leaves the shift-partner family");

  auto [ps, beta] = recursion_p(ctx, alphas);
  Mat p = Mat::identity(ctx, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 1; i + k < l; ++k) p.set(i, i + k, ps[l - k - 1]);

  Reduction out{CanonicalForm::singular(beta), p * nf.q, {}};
  out.trace.block_sizes = nf.block_sizes;
  out.trace.intermediate = std::move(d);
  out.trace.alphas = std::move(alphas);
  out.trace.ps = std::move(ps);
  check_witness(out.witness, s, realize(ctx, out.canonical));
  return out;
}

Reduction reduce_nonsingular(const Solution& s) {
  require_verified(s);
  const FieldCtx& ctx = s.ctx;
  std::size_t l = static_cast<std::size_t>(ctx.l());
  if (s.size() != l)
    fail(Errc::not_irreducible_shape, "size differs from the order of gamma");

  auto eig = detail::find_nonzero_eigenvalue(s.x);
  if (eig.status == detail::EigenStatus::none_in_field)
    fail(Errc::no_eigenvalue_in_field, "x has no nonzero eigenvalue in the field");
  if (eig.status == detail::EigenStatus::undecided)
    fail(Errc::unsupported_over_this_field,
         "eigenvalues of x are out of reach of exact search over this field");
  // Normalize so the expected spectrum reads lambda * (gamma, ..., gamma^l).
  FieldElem lambda = *eig.value * ctx.gamma_pow(ctx.l() - 1);

  Mat id = Mat::identity(ctx, l);
  Mat basis(ctx, l, l);
  for (std::size_t k = 1; k <= l; ++k) {
    FieldElem ev = lambda * ctx.gamma_pow(static_cast<long>(k));
    auto kb = kernel(s.x - id.scaled(ev));
    if (kb.size() != 1)
      fail(Errc::not_irreducible_shape, "eigenvalue multiplicities are not all one");
    for (std::size_t i = 0; i < l; ++i) basis.set(i, k - 1, kb[0][i]);
  }
  Mat q1 = inverse(basis);
  Mat d = q1 * s.y * basis;

  auto read_bs = [&](const Mat& m) {
    std::vector<FieldElem> bs;
    bs.reserve(l);
    for (std::size_t k = 1; k < l; ++k) bs.push_back(m.at(k - 1, k));
    bs.push_back(m.at(l - 1, 0));
    return bs;
  };
  std::vector<FieldElem> bs = read_bs(d);
  for (const auto& b : bs)
    if (b.is_zero())
      fail(Errc::zero_offdiagonal, "a transition coefficient vanishes; the pair is reducible");
  if (d != nonsingular_y(ctx, lambda, bs))
    fail(Errc::not_irreducible_shape, "conjugated y leaves the diagonal-partner family");

  // Rotate the eigenvalue order so lambda becomes its orbit representative.
  FieldElem lambda_rep = orbit_representative(lambda);
  int i0 = 0;
  FieldElem cur = lambda;
  while (cur != lambda_rep) {
    cur *= ctx.gamma();
    ++i0;
  }
  Mat perm(ctx, l, l);
  for (std::size_t k = 1; k <= l; ++k) {
    std::size_t sigma = ((k + static_cast<std::size_t>(i0) - 1) % l) + 1;
    perm.set(k - 1, sigma - 1, ctx.one());
  }
  Mat d2 = perm * d * perm.transpose();
  std::vector<FieldElem> bs2 = read_bs(d2);

  // Scale the off-diagonal line to ones, collecting the product in the corner.
  Mat pdiag(ctx, l, l);
  FieldElem running = ctx.one();
  pdiag.set(0, 0, running);
  for (std::size_t k = 1; k < l; ++k) {
    running *= bs2[k - 1];
    pdiag.set(k, k, running);
  }
  FieldElem eta = running * bs2[l - 1];

  Reduction out{CanonicalForm::nonsingular(lambda_rep, eta), pdiag * perm * q1, {}};
  out.trace.intermediate = std::move(d);
  out.trace.bs = std::move(bs);
  check_witness(out.witness, s, realize(ctx, out.canonical));
  return out;
}

Reduction canonicalize(const Solution& s) {
  RelationReport rel = verify_relation(s);
  if (!rel.pass) fail(Errc::not_a_solution, "the pair does not satisfy the relation");
  if (rel.commutes)
    fail(Errc::commutative_pair, "x and y commute; no irreducible structure to reduce");
  if (!is_irreducible(s))
    fail(Errc::not_irreducible, "the generated algebra is a proper subalgebra");
  if (s.x.pow(s.size()).is_zero()) return reduce_singular(s);
  return reduce_nonsingular(s);
}

std::vector<Mat> intertwiners(const Solution& from, const Solution& to) {
  if (from.ctx != to.ctx) fail(Errc::ctx_mismatch, "pairs live over different fields");
  if (from.size() != to.size()) return {};
  std::size_t n = from.size();
  const FieldCtx& ctx = from.ctx;
  // Unknown q, equations q*x1 - x2*q = 0 and q*y1 - y2*q = 0, flattened.
  Mat a(ctx, 2 * n * n, n * n);
  auto add_block = [&](std::size_t offset, const Mat& m1, const Mat& m2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = offset + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t ca = i * n + k;
          a.set(row, ca, a.at(row, ca) + m1.at(k, j));
          std::size_t cb = k * n + j;
          a.set(row, cb, a.at(row, cb) - m2.at(i, k));
        }
      }
  };
  add_block(0, from.x, to.x);
  add_block(n * n, from.y, to.y);
  std::vector<Mat> out;
  for (const auto& v : kernel(a)) out.push_back(unflatten(ctx, n, v));
  return out;
}

std::optional<Mat> are_equivalent(const Solution& from, const Solution& to) {
  require_verified(from);
  require_verified(to);
  if (from.size() != to.size()) return std::nullopt;
  std::vector<Mat> space = intertwiners(from, to);
  for (const auto& q : space)
    if (inverse_opt(q)) return q;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      Mat q = space[i] + space[j];
      if (inverse_opt(q)) return q;
    }
  // Exhaustive coefficient sweep, affordable only over small prime fields.
  if (from.ctx.kind() == FieldKind::prime && !space.empty()) {
    double combos = 1;
    for (std::size_t i = 0; i < space.size(); ++i) combos *= static_cast<double>(from.ctx.p());
    if (combos <= 1e4) {
      std::vector<std::int64_t> c(space.size(), 0);
      while (true) {
        std::size_t pos = 0;
        while (pos < c.size() && c[pos] == from.ctx.p() - 1) c[pos++] = 0;
        if (pos == c.size()) break;
        ++c[pos];
        Mat q(from.ctx, from.size(), from.size());
        for (std::size_t i = 0; i < space.size(); ++i)
          if (c[i] != 0) q = q + space[i].scaled(from.ctx.from_int(c[i]));
        if (inverse_opt(q)) return q;
      }
    }
  }
  return std::nullopt;
}

}  // namespace qweyl
