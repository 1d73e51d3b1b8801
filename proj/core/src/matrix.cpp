#include "qweyl/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "echelon.hpp"

namespace qweyl {

Mat::Mat(FieldCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, ctx_.zero()) {}

Mat Mat::identity(const FieldCtx& ctx, std::size_t n) {
  Mat m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
  return m;
}

Mat Mat::zero(const FieldCtx& ctx, std::size_t rows, std::size_t cols) {
  return Mat(ctx, rows, cols);
}

const FieldElem& Mat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) fail(Errc::range_error, "matrix index out of range");
  return entries_[i * cols_ + j];
}

void Mat::set(std::size_t i, std::size_t j, FieldElem v) {
  if (i >= rows_ || j >= cols_) fail(Errc::range_error, "matrix index out of range");
  if (v.ctx() != ctx_) fail(Errc::ctx_mismatch, "entry from a different field context");
  entries_[i * cols_ + j] = std::move(v);
}

void Mat::require_same_shape(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::shape_mismatch, std::to_string(rows_) + "x" + std::to_string(cols_) +
                                   " vs " + std::to_string(o.rows_) + "x" +
                                   std::to_string(o.cols_));
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_shape(o);
  Mat r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_shape(o);
  Mat r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_)
    fail(Errc::shape_mismatch, "inner dimensions " + std::to_string(cols_) + " and " +
                                   std::to_string(o.rows_) + " differ");
  Mat r(ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& aik = entries_[i * cols_ + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const FieldElem& bkj = o.entries_[k * o.cols_ + j];
        if (bkj.is_zero()) continue;
        r.entries_[i * o.cols_ + j] += aik * bkj;
      }
    }
  return r;
}

Mat Mat::scaled(const FieldElem& c) const {
  Mat r = *this;
  for (auto& e : r.entries_) e *= c;
  return r;
}

Mat Mat::pow(unsigned long e) const {
  if (!is_square()) fail(Errc::shape_mismatch, "power of a non-square matrix");
  Mat r = identity(ctx_, rows_);
  Mat b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != o.entries_[k]) return false;
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FieldElem& e) { return e.is_zero(); });
}

std::vector<FieldElem> Mat::row(std::size_t i) const {
  std::vector<FieldElem> r;
  r.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

std::vector<FieldElem> Mat::col(std::size_t j) const {
  std::vector<FieldElem> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

// ---------------------------------------------------------------------------
// elimination

namespace {

struct Rref {
  std::vector<std::vector<FieldElem>> rows;
  std::vector<std::size_t> pivots;  // pivot column of rows[k]
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice is
// the first nonzero entry in each column, so the result is deterministic.
Rref rref(std::vector<std::vector<FieldElem>> rows, std::size_t ncols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    FieldElem lead = rows[r][c];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      FieldElem f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<std::vector<FieldElem>> to_rows(const Mat& a) {
  std::vector<std::vector<FieldElem>> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rows;
}

std::vector<FieldElem> mat_vec(const Mat& a, const std::vector<FieldElem>& v) {
  std::vector<FieldElem> r(a.rows(), a.ctx().zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += a.at(i, j) * v[j];
    }
  return r;
}

}  // namespace

FieldElem det(const Mat& a) {
  if (!a.is_square()) fail(Errc::shape_mismatch, "determinant of a non-square matrix");
  std::size_t n = a.rows();
  auto rows = to_rows(a);
  FieldElem d = a.ctx().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return a.ctx().zero();
    if (sel != c) {
      std::swap(rows[sel], rows[c]);
      d = -d;
    }
    d *= rows[c][c];
    FieldElem lead_inv = rows[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      FieldElem f = rows[i][c] * lead_inv;
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return d;
}

FieldElem trace(const Mat& a) {
  if (!a.is_square()) fail(Errc::shape_mismatch, "trace of a non-square matrix");
  FieldElem t = a.ctx().zero();
  for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

unsigned long rank(const Mat& a) { return rref(to_rows(a), a.cols()).pivots.size(); }

std::optional<Mat> inverse_opt(const Mat& a) {
  if (!a.is_square()) fail(Errc::shape_mismatch, "inverse of a non-square matrix");
  std::size_t n = a.rows();
  std::vector<std::vector<FieldElem>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = a.row(i);
    for (std::size_t j = 0; j < n; ++j)
      r.push_back(i == j ? a.ctx().one() : a.ctx().zero());
    rows.push_back(std::move(r));
  }
  Rref red = rref(std::move(rows), n);
  if (red.pivots.size() != n) return std::nullopt;
  Mat inv(a.ctx(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, red.rows[i][n + j]);
  return inv;
}

Mat inverse(const Mat& a) {
  auto r = inverse_opt(a);
  if (!r) fail(Errc::singular, "matrix is not invertible");
  return *r;
}

std::vector<std::vector<FieldElem>> kernel(const Mat& a) {
  Rref red = rref(to_rows(a), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(a.cols(), a.ctx().zero());
    v[f] = a.ctx().one();
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FieldElem> is_scalar(const Mat& a) {
  if (!a.is_square()) fail(Errc::shape_mismatch, "scalar test on a non-square matrix");
  if (a.rows() == 0) return a.ctx().zero();
  FieldElem c = a.at(0, 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j ? a.at(i, j) != c : !a.at(i, j).is_zero()) return std::nullopt;
    }
  return c;
}

AffineSolveResult solve_linear(const Mat& a, const std::vector<FieldElem>& b) {
  if (b.size() != a.rows()) fail(Errc::shape_mismatch, "right-hand side length mismatch");
  std::size_t n = a.cols();
  std::vector<std::vector<FieldElem>> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  Rref red = rref(std::move(rows), n + 1);
  AffineSolveResult out;
  for (auto c : red.pivots)
    if (c == n) return out;  // inconsistent: pivot in the constant column
  out.feasible = true;
  out.particular.assign(n, a.ctx().zero());
  for (std::size_t k = 0; k < red.pivots.size(); ++k)
    out.particular[red.pivots[k]] = red.rows[k][n];
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(n, a.ctx().zero());
    v[f] = a.ctx().one();
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.rows[k][f];
    out.basis.push_back(std::move(v));
  }
  return out;
}

Mat shift_block_sum(const FieldCtx& ctx, const std::vector<std::size_t>& sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  Mat m(ctx, n, n);
  std::size_t off = 0;
  for (auto s : sizes) {
    for (std::size_t i = 0; i + 1 < s; ++i) m.set(off + i, off + i + 1, ctx.one());
    off += s;
  }
  return m;
}

NilpotentForm nilpotent_normalize(const Mat& a) {
  if (!a.is_square()) fail(Errc::shape_mismatch, "normal form of a non-square matrix");
  std::size_t n = a.rows();
  const FieldCtx ctx = a.ctx();
  if (!a.pow(n).is_zero()) fail(Errc::not_nilpotent, "matrix is not nilpotent");

  // Nilpotency index and kernels of successive powers.
  std::size_t s = 0;
  std::vector<Mat> powers = {Mat::identity(ctx, n)};
  while (!powers.back().is_zero()) {
    powers.push_back(powers.back() * a);
    ++s;
  }
  std::vector<std::vector<std::vector<FieldElem>>> kernels(s + 1);
  for (std::size_t j = 1; j <= s; ++j) kernels[j] = kernel(powers[j]);

  // Chain tops, highest first: at height h pick kernel vectors of a^h that are
  // independent of ker a^(h-1) and of the images of taller chains.
  struct Top {
    std::vector<FieldElem> v;
    std::size_t height;
  };
  std::vector<Top> tops;
  for (std::size_t h = s; h >= 1; --h) {
    detail::EchelonSpan avoid;
    if (h >= 2)
      for (const auto& v : kernels[h - 1]) avoid.insert(v);
    for (const auto& t : tops) {
      std::vector<FieldElem> img = t.v;
      for (std::size_t k = 0; k < t.height - h; ++k) img = mat_vec(a, img);
      avoid.insert(img);
    }
    for (const auto& v : kernels[h]) {
      if (avoid.insert(v)) tops.push_back({v, h});
    }
    if (h == 1) break;
  }

  // Basis columns per chain: a^(h-1) v, ..., a v, v.
  Mat basis(ctx, n, n);
  std::vector<std::size_t> block_sizes;
  std::size_t col = 0;
  for (const auto& t : tops) {
    std::vector<std::vector<FieldElem>> chain(t.height);
    chain[t.height - 1] = t.v;
    for (std::size_t k = t.height - 1; k >= 1; --k) chain[k - 1] = mat_vec(a, chain[k]);
    for (const auto& v : chain) {
      for (std::size_t i = 0; i < n; ++i) basis.set(i, col, v[i]);
      ++col;
    }
    block_sizes.push_back(t.height);
  }

  NilpotentForm out{inverse(basis), block_sizes};
  if (out.q * a * basis != shift_block_sum(ctx, block_sizes))
    throw std::logic_error("nilpotent normal form construction failed");
  return out;
}

Mat unflatten(const FieldCtx& ctx, std::size_t n, const std::vector<FieldElem>& v) {
  if (v.size() != n * n) fail(Errc::bad_length, "flattened matrix has wrong length");
  Mat m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
  return m;
}

std::vector<FieldElem> flatten(const Mat& a) {
  std::vector<FieldElem> v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a.at(i, j));
  return v;
}

}  // namespace qweyl
