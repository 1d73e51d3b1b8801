#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qweyl/field.hpp"

namespace qweyl {

/**
 * Dense matrix over a FieldCtx. All arithmetic is exact; there is no floating
 * point anywhere in this library. Shapes and contexts are checked on every
 * binary operation.
 */
class Mat {
 public:
  Mat(FieldCtx ctx, std::size_t rows, std::size_t cols);

  static Mat identity(const FieldCtx& ctx, std::size_t n);
  static Mat zero(const FieldCtx& ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  FieldCtx ctx() const { return ctx_; }

  const FieldElem& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, FieldElem v);

  Mat operator-() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const FieldElem& c) const;
  /// A^e for square A; A^0 is the identity.
  Mat pow(unsigned long e) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Entries of row i, as a vector of length cols().
  std::vector<FieldElem> row(std::size_t i) const;
  /// Entries of column j, as a vector of length rows().
  std::vector<FieldElem> col(std::size_t j) const;

 private:
  void require_same_shape(const Mat& o) const;

  FieldCtx ctx_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> entries_;  // row-major
};

FieldElem det(const Mat& a);
FieldElem trace(const Mat& a);
unsigned long rank(const Mat& a);

std::optional<Mat> inverse_opt(const Mat& a);
/// Like inverse_opt but throws Errc::singular on a non-invertible input.
Mat inverse(const Mat& a);

/// Deterministic echelon-form basis of the right null space {v : a v = 0}.
std::vector<std::vector<FieldElem>> kernel(const Mat& a);

/// The scalar c with a == c * I, if a is square and scalar.
std::optional<FieldElem> is_scalar(const Mat& a);

/// Exact solution set of a x = b: a particular solution with all free
/// variables set to zero, plus a basis of the homogeneous kernel.
struct AffineSolveResult {
  bool feasible = false;
  std::vector<FieldElem> particular;
  std::vector<std::vector<FieldElem>> basis;
};
AffineSolveResult solve_linear(const Mat& a, const std::vector<FieldElem>& b);

/**
 * Change of basis to the nilpotent normal form: q * a * q^{-1} is a direct
 * sum of upper-shift blocks, ordered by weakly decreasing size. The basis is
 * built deterministically from kernel chains of a, a^2, ..., so equal inputs
 * give identical outputs. Throws Errc::not_nilpotent if a^n != 0.
 */
struct NilpotentForm {
  Mat q;
  std::vector<std::size_t> block_sizes;
};
NilpotentForm nilpotent_normalize(const Mat& a);

/// Direct sum of upper-shift blocks with the given sizes (the normal form
/// nilpotent_normalize conjugates to).
Mat shift_block_sum(const FieldCtx& ctx, const std::vector<std::size_t>& sizes);

/// Matrix from a row-major flattened vector of length n*n.
Mat unflatten(const FieldCtx& ctx, std::size_t n, const std::vector<FieldElem>& v);
/// Row-major flattening of a matrix.
std::vector<FieldElem> flatten(const Mat& a);

}  // namespace qweyl
