#include "qweyl/solutions.hpp"

#include <stdexcept>
#include <string>

#include "spectral.hpp"

namespace qweyl {

namespace {

std::size_t ul(int l) { return static_cast<std::size_t>(l); }

void require_nonzero(const FieldElem& v, const char* what) {
  if (v.is_zero()) fail(Errc::zero_parameter, std::string(what) + " must be nonzero");
}

Solution checked(FieldCtx ctx, Mat x, Mat y) {
  Solution s{std::move(ctx), std::move(x), std::move(y)};
  if (!verify_relation(s).pass)
    throw std::logic_error("family constructor produced a non-solution");
  return s;
}

}  // namespace

Mat shift_x(const FieldCtx& ctx) {
  std::size_t l = ul(ctx.l());
  Mat m(ctx, l, l);
  for (std::size_t i = 0; i + 1 < l; ++i) m.set(i, i + 1, ctx.one());
  return m;
}

Mat singular_y(const FieldCtx& ctx, const FieldElem& beta) {
  std::size_t l = ul(ctx.l());
  Mat m(ctx, l, l);
  // (k+1, k) = 1 + gamma + ... + gamma^(l-1-k), k = 1..l-1 one-based
  for (std::size_t k = 1; k < l; ++k)
    m.set(k, k - 1, ctx.geometric_sum(ctx.l() - 1 - static_cast<long>(k)));
  m.set(0, l - 1, beta);
  return m;
}

Mat singular_y_alphas(const FieldCtx& ctx, const std::vector<FieldElem>& alphas) {
  std::size_t l = ul(ctx.l());
  if (alphas.size() != l)
    fail(Errc::bad_length, "expected " + std::to_string(l) + " alphas, got " +
                               std::to_string(alphas.size()));
  Mat m(ctx, l, l);
  for (std::size_t k = 1; k < l; ++k)
    m.set(k, k - 1, ctx.geometric_sum(ctx.l() - 1 - static_cast<long>(k)));
  // (i, j) = gamma^(l-j) * alpha_(l+i-j) for j >= i, one-based
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i; j <= l; ++j)
      m.set(i - 1, j - 1,
            ctx.gamma_pow(ctx.l() - static_cast<long>(j)) * alphas[l + i - j - 1]);
  return m;
}

Mat nonsingular_x(const FieldCtx& ctx, const FieldElem& lambda) {
  require_nonzero(lambda, "lambda");
  std::size_t l = ul(ctx.l());
  Mat m(ctx, l, l);
  for (std::size_t k = 1; k <= l; ++k)
    m.set(k - 1, k - 1, lambda * ctx.gamma_pow(static_cast<long>(k)));
  return m;
}

Mat nonsingular_y(const FieldCtx& ctx, const FieldElem& lambda,
                  const std::vector<FieldElem>& bs) {
  require_nonzero(lambda, "lambda");
  std::size_t l = ul(ctx.l());
  if (bs.size() != l)
    fail(Errc::bad_length, "expected " + std::to_string(l) + " b parameters, got " +
                               std::to_string(bs.size()));
  for (const auto& b : bs) require_nonzero(b, "every b");
  Mat m(ctx, l, l);
  FieldElem one_minus_gamma = ctx.one() - ctx.gamma();
  for (std::size_t k = 1; k <= l; ++k) {
    FieldElem d = one_minus_gamma * ctx.gamma_pow(static_cast<long>(k)) * lambda;
    m.set(k - 1, k - 1, d.inv());
  }
  for (std::size_t k = 1; k < l; ++k) m.set(k - 1, k, bs[k - 1]);
  m.set(l - 1, 0, bs[l - 1]);
  return m;
}

Mat nonsingular_y_eta(const FieldCtx& ctx, const FieldElem& lambda,
                      const FieldElem& eta) {
  require_nonzero(eta, "eta");
  std::vector<FieldElem> bs(ul(ctx.l()), ctx.one());
  bs.back() = eta;
  return nonsingular_y(ctx, lambda, bs);
}

Solution singular_solution(const FieldCtx& ctx, const FieldElem& beta) {
  return checked(ctx, shift_x(ctx), singular_y(ctx, beta));
}

Solution singular_solution_alphas(const FieldCtx& ctx,
                                  const std::vector<FieldElem>& alphas) {
  return checked(ctx, shift_x(ctx), singular_y_alphas(ctx, alphas));
}

Solution nonsingular_solution(const FieldCtx& ctx, const FieldElem& lambda,
                              const std::vector<FieldElem>& bs) {
  return checked(ctx, nonsingular_x(ctx, lambda), nonsingular_y(ctx, lambda, bs));
}

Solution nonsingular_solution_eta(const FieldCtx& ctx, const FieldElem& lambda,
                                  const FieldElem& eta) {
  return checked(ctx, nonsingular_x(ctx, lambda), nonsingular_y_eta(ctx, lambda, eta));
}

RelationReport verify_relation(const Solution& s) {
  if (!s.x.is_square() || !s.y.is_square() || s.x.rows() != s.y.rows())
    fail(Errc::shape_mismatch, "expected two square matrices of equal size");
  Mat yx = s.y * s.x;
  Mat xy = s.x * s.y;
  Mat residual = yx - xy.scaled(s.ctx.gamma()) - Mat::identity(s.ctx, s.x.rows());
  RelationReport r;
  r.commutes = yx == xy;
  r.pass = residual.is_zero();
  if (!r.pass) r.residual = std::move(residual);
  return r;
}

StructuralReport structural_report(const Solution& s) {
  if (!verify_relation(s).pass)
    fail(Errc::not_a_solution, "structural report requires a verified solution");
  const FieldCtx& ctx = s.ctx;
  auto lp = static_cast<unsigned long>(ctx.l());
  StructuralReport r;
  r.x_power_scalar = is_scalar(s.x.pow(lp));
  r.y_power_scalar = is_scalar(s.y.pow(lp));
  Mat u = s.y * s.x - s.x * s.y;
  r.ux_skew = u * s.x == (s.x * u).scaled(ctx.gamma());
  r.yu_skew = s.y * u == (u * s.y).scaled(ctx.gamma());
  r.u_invertible = !det(u).is_zero();
  auto eig = detail::find_nonzero_eigenvalue(s.x);
  if (eig.status == detail::EigenStatus::found) {
    r.spectrum_checked = true;
    r.spectrum_orbit = true;
    Mat id = Mat::identity(ctx, s.x.rows());
    for (int k = 1; k <= ctx.l(); ++k) {
      FieldElem mu = *eig.value * ctx.gamma_pow(k);
      if (!det(s.x - id.scaled(mu)).is_zero()) r.spectrum_orbit = false;
    }
  }
  return r;
}

FieldElem power_row_value(const FieldCtx& ctx, int v) {
  if (v < 1 || v > ctx.l() - 1)
    fail(Errc::range_error, "power exponent must be between 1 and l-1");
  FieldElem prod = ctx.one();
  // one factor per j = l-v+1 .. l: the geometric sum of length l-j+1
  for (long j = ctx.l() - v + 1; j <= ctx.l(); ++j) prod *= ctx.geometric_sum(ctx.l() - j);
  return prod;
}

}  // namespace qweyl
