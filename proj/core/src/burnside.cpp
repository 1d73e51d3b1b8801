#include "qweyl/burnside.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "echelon.hpp"

namespace qweyl {

SubalgebraBasis generated_algebra(const Solution& s, bool allow_nonsolution) {
  if (!allow_nonsolution && !verify_relation(s).pass)
    fail(Errc::not_a_solution, "refusing closure of an unverified pair");
  std::size_t n = s.x.rows();
  SubalgebraBasis out;
  out.n = n;

  detail::EchelonSpan span;
  std::deque<Mat> queue;
  Mat id = Mat::identity(s.ctx, n);
  span.insert(flatten(id));
  out.basis.push_back(id);
  queue.push_back(id);

  while (!queue.empty() && span.dim() < n * n) {
    Mat m = std::move(queue.front());
    queue.pop_front();
    const Mat candidates[4] = {s.x * m, s.y * m, m * s.x, m * s.y};
    for (const Mat& c : candidates) {
      if (span.dim() == n * n) break;
      if (span.insert(flatten(c))) {
        out.basis.push_back(c);
        queue.push_back(c);
      }
    }
  }
  return out;
}

bool is_irreducible(const Solution& s, bool allow_nonsolution) {
  std::size_t n = s.x.rows();
  return generated_algebra(s, allow_nonsolution).dim() == n * n;
}

ElementaryCombination elementary_in_monomials(const Solution& s, std::size_t m,
                                              std::size_t n) {
  const FieldCtx& ctx = s.ctx;
  std::size_t l = static_cast<std::size_t>(ctx.l());
  if (m < 1 || m > l || n < 1 || n > l)
    fail(Errc::range_error, "elementary indices must lie in 1..l");
  if (s.x != shift_x(ctx) || s.y != singular_y(ctx, s.y.at(0, l - 1)))
    fail(Errc::wrong_family, "extraction is defined for the shift family only");

  std::vector<Mat> xp, yp;
  xp.reserve(l);
  yp.reserve(l);
  xp.push_back(Mat::identity(ctx, l));
  yp.push_back(Mat::identity(ctx, l));
  for (std::size_t k = 1; k < l; ++k) {
    xp.push_back(xp.back() * s.x);
    yp.push_back(yp.back() * s.y);
  }

  // coeffs[s-1][t-1] is an l x l grid: coefficient of x^i y^j at (i, j).
  std::vector<std::vector<Mat>> coeffs(l, std::vector<Mat>(l, Mat(ctx, l, l)));
  for (std::size_t row = 1; row <= m; ++row)
    for (std::size_t col = 1; col <= l; ++col) {
      if (row < m || col == n) {
        Mat w = xp[l - row] * yp[l - col];
        Mat grid(ctx, l, l);
        grid.set(l - row, l - col, ctx.one());
        // subtract the known combinations for every populated row above
        for (std::size_t srow = 1; srow < row; ++srow)
          for (std::size_t scol = 1; scol <= l; ++scol) {
            FieldElem c = w.at(srow - 1, scol - 1);
            if (c.is_zero()) continue;
            grid = grid - coeffs[srow - 1][scol - 1].scaled(c);
          }
        FieldElem lead = ctx.one();
        for (std::size_t j = col + 1; j <= l; ++j)
          lead *= ctx.geometric_sum(static_cast<long>(l - j));
        coeffs[row - 1][col - 1] = grid.scaled(lead.inv());
      }
    }

  ElementaryCombination out;
  out.m = m;
  out.n = n;
  Mat check(ctx, l, l);
  const Mat& grid = coeffs[m - 1][n - 1];
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      FieldElem c = grid.at(i, j);
      if (c.is_zero()) continue;
      out.terms.push_back({static_cast<int>(i), static_cast<int>(j), c});
      check = check + (xp[i] * yp[j]).scaled(c);
    }
  Mat target(ctx, l, l);
  target.set(m - 1, n - 1, ctx.one());
  if (check != target)
    throw std::logic_error("elementary extraction failed to reproduce e_mn");
  return out;
}

}  // namespace qweyl
