#pragma once

// Seeded random draws for property tests. Determinism across platforms is the
// point: the generator is the standardized mt19937_64 and reduction is plain
// modulo, never a distribution object with implementation-defined behavior.

#include <cstdint>
#include <random>
#include <vector>

#include "qweyl/field.hpp"
#include "qweyl/matrix.hpp"

namespace qweyl {

// Stable derivation of per-task seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }

  // Prime fields: uniform residue. Cyclotomic fields: small integer
  // coefficients in [-4, 4], exact and cheap to print.
  FieldElem element(const FieldCtx& ctx);
  FieldElem nonzero_element(const FieldCtx& ctx);
  std::vector<FieldElem> elements(const FieldCtx& ctx, std::size_t count);
  std::vector<FieldElem> nonzero_elements(const FieldCtx& ctx, std::size_t count);

  // Uniform entries retried until the determinant is nonzero.
  Mat invertible_matrix(const FieldCtx& ctx, std::size_t n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace qweyl
