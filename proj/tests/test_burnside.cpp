#include <doctest.h>

#include <cstddef>
#include <vector>

#include "qweyl/burnside.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/solutions.hpp"

using namespace qweyl;

namespace {

Mat from_rows(const FieldCtx& ctx, const std::vector<std::vector<long>>& rows) {
  Mat m(ctx, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.set(i, j, ctx.from_int(rows[i][j]));
  return m;
}

Mat evaluate(const Solution& s, const ElementaryCombination& comb) {
  Mat acc = Mat::zero(s.ctx, s.size(), s.size());
  for (const auto& term : comb.terms) {
    Mat w = s.x.pow(static_cast<unsigned long>(term.i)) *
            s.y.pow(static_cast<unsigned long>(term.j));
    acc = acc + w.scaled(term.coeff);
  }
  return acc;
}

}  // namespace

TEST_SUITE("burnside") {

TEST_CASE("canonical families generate the full matrix algebra") {
  for (int l = 2; l <= 4; ++l) {
    FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
    CAPTURE(l);
    Solution singular = singular_solution(ctx, ctx.zero());
    SubalgebraBasis alg = generated_algebra(singular);
    CHECK(alg.dim() == static_cast<std::size_t>(l) * static_cast<std::size_t>(l));
    CHECK(is_irreducible(singular));
    CHECK(is_irreducible(nonsingular_solution_eta(ctx, ctx.from_int(2), ctx.from_int(2))));
  }
}

TEST_CASE("a commuting solution generates a proper subalgebra") {
  FieldCtx ctx = FieldCtx::prime(3, 2);
  Mat x = from_rows(ctx, {{0, 2}, {1, 0}});
  Solution s{ctx, x, x};
  REQUIRE(verify_relation(s).pass);
  CHECK(generated_algebra(s).dim() == 2);  // span{1, x}
  CHECK_FALSE(is_irreducible(s));
}

TEST_CASE("an irreducible pair whose x has no eigenvalue in the field") {
  FieldCtx ctx = FieldCtx::prime(3, 2);
  Mat x = from_rows(ctx, {{0, 2}, {1, 0}});
  Mat y = from_rows(ctx, {{0, 1}, {0, 0}});
  Solution s{ctx, x, y};
  REQUIRE(verify_relation(s).pass);
  CHECK_FALSE(verify_relation(s).commutes);
  CHECK(is_irreducible(s));
}

TEST_CASE("non-solutions are refused unless explicitly allowed") {
  FieldCtx ctx = FieldCtx::prime(3, 2);
  Solution bad{ctx, shift_x(ctx), shift_x(ctx)};
  REQUIRE_FALSE(verify_relation(bad).pass);
  CHECK_THROWS_WITH_AS(generated_algebra(bad), doctest::Contains("NotASolution"), Error);
  CHECK_FALSE(is_irreducible(bad, /*allow_nonsolution=*/true));
  CHECK(generated_algebra(bad, true).dim() == 2);
}

TEST_CASE("elementary matrices as monomial combinations") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution s = singular_solution(ctx, ctx.from_int(1));
  std::size_t l = 3;
  for (std::size_t m = 1; m <= l; ++m) {
    for (std::size_t n = 1; n <= l; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      ElementaryCombination comb = elementary_in_monomials(s, m, n);
      CHECK(comb.m == m);
      CHECK(comb.n == n);
      Mat value = evaluate(s, comb);
      Mat target = Mat::zero(ctx, l, l);
      target.set(m - 1, n - 1, ctx.one());
      CHECK(value == target);
      for (const auto& term : comb.terms) {
        CHECK(term.i >= 0);
        CHECK(term.i < static_cast<int>(l));
        CHECK(term.j >= 0);
        CHECK(term.j < static_cast<int>(l));
        CHECK(term.coeff != ctx.zero());
      }
    }
  }
}

TEST_CASE("the leading coefficient is the product of partial geometric sums") {
  for (int l = 2; l <= 5; ++l) {
    FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
    Solution s = singular_solution(ctx, ctx.from_int(2));
    for (std::size_t m = 1; m <= static_cast<std::size_t>(l); ++m) {
      for (std::size_t n = 1; n <= static_cast<std::size_t>(l); ++n) {
        CAPTURE(l);
        CAPTURE(m);
        CAPTURE(n);
        ElementaryCombination comb = elementary_in_monomials(s, m, n);
        FieldElem lead = ctx.one();
        for (std::size_t j = n + 1; j <= static_cast<std::size_t>(l); ++j)
          lead *= ctx.geometric_sum(l - static_cast<long>(j));
        bool found = false;
        for (const auto& term : comb.terms) {
          if (term.i == l - static_cast<int>(m) && term.j == l - static_cast<int>(n)) {
            CHECK(term.coeff == lead.inv());
            found = true;
          }
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("extraction rejects other families and bad indices") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution s = singular_solution(ctx, ctx.from_int(1));
  CHECK_THROWS_WITH_AS(elementary_in_monomials(s, 0, 1), doctest::Contains("RangeError"),
                       Error);
  CHECK_THROWS_WITH_AS(elementary_in_monomials(s, 1, 4), doctest::Contains("RangeError"),
                       Error);

  Solution other = nonsingular_solution_eta(ctx, ctx.from_int(2), ctx.from_int(2));
  CHECK_THROWS_WITH_AS(elementary_in_monomials(other, 1, 1),
                       doctest::Contains("WrongFamily"), Error);

  std::vector<FieldElem> alphas{ctx.from_int(1), ctx.from_int(2), ctx.from_int(3)};
  Solution rich = singular_solution_alphas(ctx, alphas);
  CHECK_THROWS_WITH_AS(elementary_in_monomials(rich, 1, 1),
                       doctest::Contains("WrongFamily"), Error);
}

}  // TEST_SUITE
