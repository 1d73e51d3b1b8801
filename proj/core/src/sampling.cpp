#include "qweyl/sampling.hpp"

namespace qweyl {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  // splitmix64 step over master xor tag
  std::uint64_t z = master ^ (tag * 0x9E3779B97F4A7C15ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FieldElem Rng::element(const FieldCtx& ctx) {
  if (ctx.kind() == FieldKind::prime)
    return ctx.from_residue(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(ctx.p()))));
  std::vector<mpq_class> coeffs;
  coeffs.reserve(static_cast<std::size_t>(ctx.degree()));
  for (int i = 0; i < ctx.degree(); ++i)
    coeffs.emplace_back(static_cast<long>(below(9)) - 4);
  return ctx.from_coeffs(std::move(coeffs));
}

FieldElem Rng::nonzero_element(const FieldCtx& ctx) {
  while (true) {
    FieldElem v = element(ctx);
    if (!v.is_zero()) return v;
  }
}

std::vector<FieldElem> Rng::elements(const FieldCtx& ctx, std::size_t count) {
  std::vector<FieldElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(element(ctx));
  return out;
}

std::vector<FieldElem> Rng::nonzero_elements(const FieldCtx& ctx, std::size_t count) {
  std::vector<FieldElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(nonzero_element(ctx));
  return out;
}

Mat Rng::invertible_matrix(const FieldCtx& ctx, std::size_t n) {
  while (true) {
    Mat m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, element(ctx));
    if (!det(m).is_zero()) return m;
  }
}

}  // namespace qweyl
