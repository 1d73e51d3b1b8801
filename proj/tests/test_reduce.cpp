#include <doctest.h>

#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/reduce.hpp"
#include "qweyl/sampling.hpp"
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

Solution conjugate(const Solution& s, const Mat& g) {
  Mat gi = inverse(g);
  return Solution{s.ctx, g * s.x * gi, g * s.y * gi};
}

Solution direct_sum(const Solution& a, const Solution& b) {
  std::size_t n = a.size(), m = b.size();
  Mat x = Mat::zero(a.ctx, n + m, n + m);
  Mat y = Mat::zero(a.ctx, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x.set(i, j, a.x.at(i, j));
      y.set(i, j, a.y.at(i, j));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      x.set(n + i, n + j, b.x.at(i, j));
      y.set(n + i, n + j, b.y.at(i, j));
    }
  return Solution{a.ctx, x, y};
}

void check_maps_to(const Reduction& r, const Solution& from, const Solution& target) {
  REQUIRE(inverse_opt(r.witness).has_value());
  CHECK(r.witness * from.x == target.x * r.witness);
  CHECK(r.witness * from.y == target.y * r.witness);
}

}  // namespace

TEST_SUITE("reduce") {

TEST_CASE("orbit representatives") {
  FieldCtx ctx = FieldCtx::prime(7, 3);  // orbits of <2>: {1,2,4} and {3,6,5}
  CHECK(orbit_representative(ctx.from_int(3)) == ctx.from_int(3));
  CHECK(orbit_representative(ctx.from_int(6)) == ctx.from_int(3));
  CHECK(orbit_representative(ctx.from_int(5)) == ctx.from_int(3));
  CHECK(orbit_representative(ctx.from_int(4)) == ctx.from_int(1));
  CHECK_THROWS_WITH_AS(orbit_representative(ctx.zero()),
                       doctest::Contains("ZeroParameter"), Error);

  FieldCtx c4 = FieldCtx::cyclotomic(4);
  CHECK(orbit_representative(c4.gamma()) == c4.from_int(-1));
}

TEST_CASE("canonical forms compare and realize") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  CanonicalForm a = CanonicalForm::singular(ctx.from_int(2));
  CanonicalForm b = CanonicalForm::singular(ctx.from_int(2));
  CanonicalForm c = CanonicalForm::singular(ctx.from_int(3));
  CanonicalForm d = CanonicalForm::nonsingular(ctx.from_int(3), ctx.from_int(2));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != d);

  Solution rs = realize(ctx, a);
  CHECK(rs.x == shift_x(ctx));
  CHECK(rs.y == singular_y(ctx, ctx.from_int(2)));
  Solution rn = realize(ctx, d);
  CHECK(rn.x == nonsingular_x(ctx, ctx.from_int(3)));
  CHECK(rn.y == nonsingular_y_eta(ctx, ctx.from_int(3), ctx.from_int(2)));
}

TEST_CASE("the shift-partner family solves and spans at exactly multiples of l") {
  for (int l = 2; l <= 4; ++l) {
    FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
    for (std::size_t n = 1; n <= static_cast<std::size_t>(2 * l); ++n) {
      CAPTURE(l);
      CAPTURE(n);
      AffineFamily fam = solve_D_for_shift(ctx, n);
      if (n % static_cast<std::size_t>(l) != 0) {
        CHECK_FALSE(fam.feasible);
        continue;
      }
      REQUIRE(fam.feasible);
      if (n == static_cast<std::size_t>(l)) {
        CHECK(fam.basis.size() == static_cast<std::size_t>(l));
        Mat shift = shift_block_sum(ctx, {n});
        CHECK(verify_relation(Solution{ctx, shift, *fam.particular}).pass);
        for (const Mat& b : fam.basis)
          CHECK(verify_relation(Solution{ctx, shift, *fam.particular + b}).pass);
      }
    }
  }
  CHECK_THROWS_WITH_AS(solve_D_for_shift(FieldCtx::prime(3, 2), 0),
                       doctest::Contains("RangeError"), Error);
}

TEST_CASE("the corner recursion in closed form") {
  SUBCASE("l = 2") {
    FieldCtx ctx = FieldCtx::prime(3, 2);
    auto [ps, beta] = recursion_p(ctx, {ctx.from_int(1), ctx.from_int(2)});
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == ctx.from_int(2));                 // p_1 = a_2
    CHECK(beta == ctx.from_int(2));                  // a_1 + a_2^2 = 5 = 2
  }
  SUBCASE("l = 3") {
    FieldCtx ctx = FieldCtx::prime(7, 3);
    auto [ps, beta] =
        recursion_p(ctx, {ctx.from_int(1), ctx.from_int(2), ctx.from_int(3)});
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == ctx.from_int(6));
    CHECK(ps[1] == ctx.from_int(3));
    CHECK(beta == ctx.from_int(4));
  }
}

TEST_CASE("reduction of a shift-family solution") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  std::vector<FieldElem> alphas{ctx.from_int(1), ctx.from_int(2), ctx.from_int(3)};
  Solution s = singular_solution_alphas(ctx, alphas);

  Reduction r = reduce_singular(s);
  CHECK(r.canonical == CanonicalForm::singular(ctx.from_int(4)));
  CHECK(r.trace.alphas == alphas);
  CHECK(r.trace.ps == std::vector<FieldElem>{ctx.from_int(6), ctx.from_int(3)});
  CHECK(r.trace.block_sizes == std::vector<std::size_t>{3});
  // x is already the shift, so the witness is the corner-clearing conjugator
  CHECK(r.witness == from_rows(ctx, {{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}));
  check_maps_to(r, s, realize(ctx, r.canonical));
}

TEST_CASE("an already-canonical singular pair reduces with the identity witness") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution s = singular_solution(ctx, ctx.from_int(2));
  Reduction r = reduce_singular(s);
  CHECK(r.canonical == CanonicalForm::singular(ctx.from_int(2)));
  CHECK(r.witness == Mat::identity(ctx, 3));
}

TEST_CASE("singular reduction is invariant under conjugation") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  std::vector<FieldElem> alphas{ctx.from_int(5), ctx.zero(), ctx.from_int(1)};
  Solution s = singular_solution_alphas(ctx, alphas);
  Reduction base = reduce_singular(s);

  Rng rng(414243);
  for (int trial = 0; trial < 5; ++trial) {
    Solution t = conjugate(s, rng.invertible_matrix(ctx, 3));
    Reduction r = reduce_singular(t);
    CHECK(r.canonical == base.canonical);
    check_maps_to(r, t, realize(ctx, r.canonical));
  }
}

TEST_CASE("reduction of a diagonalizable solution") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  std::vector<FieldElem> bs{ctx.from_int(1), ctx.from_int(1), ctx.from_int(4)};
  Solution s = nonsingular_solution(ctx, ctx.from_int(6), bs);

  Reduction r = reduce_nonsingular(s);
  // lambda = 6 lies in the orbit {6, 5, 3} with representative 3, and the
  // cycle product of the off-diagonal parameters is 4
  CHECK(r.canonical ==
        CanonicalForm::nonsingular(ctx.from_int(3), ctx.from_int(4)));
  // the recorded parameters are read in whatever rotation the eigenvalue
  // search produced; their cycle product is the invariant
  REQUIRE(r.trace.bs.size() == 3);
  FieldElem prod = ctx.one();
  for (const auto& b : r.trace.bs) prod *= b;
  CHECK(prod == ctx.from_int(4));
  check_maps_to(r, s, realize(ctx, r.canonical));
}

TEST_CASE("an already-canonical diagonalizable pair keeps the identity witness") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution s = nonsingular_solution_eta(ctx, ctx.from_int(3), ctx.from_int(2));
  Reduction r = reduce_nonsingular(s);
  CHECK(r.canonical ==
        CanonicalForm::nonsingular(ctx.from_int(3), ctx.from_int(2)));
  CHECK(r.witness == Mat::identity(ctx, 3));
}

TEST_CASE("nonsingular reduction is invariant under conjugation") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution s = nonsingular_solution_eta(ctx, ctx.from_int(5), ctx.from_int(3));
  Reduction base = reduce_nonsingular(s);
  CHECK(base.canonical ==
        CanonicalForm::nonsingular(ctx.from_int(3), ctx.from_int(3)));

  Rng rng(515253);
  for (int trial = 0; trial < 5; ++trial) {
    Solution t = conjugate(s, rng.invertible_matrix(ctx, 3));
    Reduction r = reduce_nonsingular(t);
    CHECK(r.canonical == base.canonical);
    check_maps_to(r, t, realize(ctx, r.canonical));
  }
}

TEST_CASE("reduction over the rationals and their extensions") {
  SUBCASE("singular over Q") {
    FieldCtx ctx = FieldCtx::cyclotomic(2);
    Solution s = singular_solution_alphas(ctx, {ctx.from_int(1), ctx.from_int(2)});
    Reduction r = reduce_singular(s);
    // beta = a_1 + a_2^2 = 5
    CHECK(r.canonical == CanonicalForm::singular(ctx.from_int(5)));
    check_maps_to(r, s, realize(ctx, r.canonical));
  }
  SUBCASE("diagonalizable over Q picks the lexicographic representative") {
    FieldCtx ctx = FieldCtx::cyclotomic(2);
    Solution s = nonsingular_solution_eta(ctx, ctx.from_int(-2), ctx.from_int(3));
    Reduction r = reduce_nonsingular(s);
    CHECK(r.canonical ==
          CanonicalForm::nonsingular(ctx.from_int(-2), ctx.from_int(3)));
    check_maps_to(r, s, realize(ctx, r.canonical));
  }
  SUBCASE("diagonalizable over a cubic cyclotomic field") {
    FieldCtx ctx = FieldCtx::cyclotomic(3);
    // lambda = 1 + gamma has (1 + gamma)^3 = -1, so the eigenvalue search
    // succeeds and the orbit representative is -1
    FieldElem lambda = ctx.from_coeffs({mpq_class(1), mpq_class(1)});
    Solution s = nonsingular_solution_eta(ctx, lambda, ctx.from_int(2));
    Reduction r = reduce_nonsingular(s);
    CHECK(r.canonical ==
          CanonicalForm::nonsingular(ctx.from_int(-1), ctx.from_int(2)));
    check_maps_to(r, s, realize(ctx, r.canonical));
  }
  SUBCASE("an eigenvalue outside the rational gamma lattice is refused") {
    FieldCtx ctx = FieldCtx::cyclotomic(4);
    // lambda = 1 + i: lambda^4 = -4 has no rational fourth root, so no
    // eigenvalue of the form (rational) * gamma^k exists
    FieldElem lambda = ctx.from_coeffs({mpq_class(1), mpq_class(1)});
    Solution s = nonsingular_solution_eta(ctx, lambda, ctx.one());
    CHECK_THROWS_WITH_AS(reduce_nonsingular(s),
                         doctest::Contains("UnsupportedOverThisField"), Error);
  }
}

TEST_CASE("full pipeline dispatch") {
  FieldCtx ctx = FieldCtx::prime(3, 2);

  SUBCASE("nilpotent x goes to the singular family") {
    Solution s = singular_solution(ctx, ctx.from_int(1));
    CHECK(canonicalize(s).canonical == CanonicalForm::singular(ctx.from_int(1)));
  }
  SUBCASE("invertible x goes to the diagonalizable family") {
    Solution s = nonsingular_solution_eta(ctx, ctx.from_int(2), ctx.from_int(2));
    CHECK(canonicalize(s).canonical.tag == CanonicalForm::Tag::nonsingular_lambda_eta);
  }
  SUBCASE("non-solutions are rejected") {
    Solution bad{ctx, shift_x(ctx), shift_x(ctx)};
    CHECK_THROWS_WITH_AS(canonicalize(bad), doctest::Contains("NotASolution"), Error);
  }
  SUBCASE("commuting pairs are rejected") {
    Mat x = from_rows(ctx, {{0, 2}, {1, 0}});
    CHECK_THROWS_WITH_AS(canonicalize(Solution{ctx, x, x}),
                         doctest::Contains("CommutativePair"), Error);
  }
  SUBCASE("reducible pairs are rejected") {
    Solution s = singular_solution(ctx, ctx.from_int(1));
    Solution ss = direct_sum(s, s);
    REQUIRE(verify_relation(ss).pass);
    CHECK_THROWS_WITH_AS(canonicalize(ss), doctest::Contains("NotIrreducible"), Error);
    CHECK_THROWS_WITH_AS(reduce_singular(ss), doctest::Contains("NotIrreducibleShape"),
                         Error);
  }
  SUBCASE("an x with no eigenvalue in the field is refused") {
    Mat x = from_rows(ctx, {{0, 2}, {1, 0}});
    Mat y = from_rows(ctx, {{0, 1}, {0, 0}});
    Solution s{ctx, x, y};
    REQUIRE(verify_relation(s).pass);
    CHECK_THROWS_WITH_AS(canonicalize(s), doctest::Contains("NoEigenvalueInField"),
                         Error);
  }
}

TEST_CASE("intertwiner dimensions obey the irreducibility dichotomy") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution a = singular_solution(ctx, ctx.from_int(0));
  Solution b = singular_solution(ctx, ctx.from_int(1));
  Solution c = nonsingular_solution_eta(ctx, ctx.from_int(3), ctx.from_int(2));

  CHECK(intertwiners(a, b).empty());
  CHECK(intertwiners(a, c).empty());
  auto self = intertwiners(a, a);
  REQUIRE(self.size() == 1);
  auto s = is_scalar(self[0]);
  REQUIRE(s.has_value());
  CHECK(*s != ctx.zero());

  Rng rng(616263);
  Solution g = conjugate(a, rng.invertible_matrix(ctx, 3));
  CHECK(intertwiners(a, g).size() == 1);
}

TEST_CASE("equivalence witnesses") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  Solution a = singular_solution_alphas(
      ctx, {ctx.from_int(1), ctx.from_int(2), ctx.from_int(3)});
  Solution canon = singular_solution(ctx, ctx.from_int(4));

  auto w = are_equivalent(a, canon);
  REQUIRE(w.has_value());
  REQUIRE(inverse_opt(*w).has_value());
  CHECK(*w * a.x == canon.x * *w);
  CHECK(*w * a.y == canon.y * *w);

  CHECK_FALSE(are_equivalent(canon, singular_solution(ctx, ctx.from_int(5))).has_value());
  CHECK_FALSE(
      are_equivalent(canon, nonsingular_solution_eta(ctx, ctx.from_int(3), ctx.from_int(2)))
          .has_value());
}

TEST_CASE("equivalence search covers reducible pairs at small sizes") {
  FieldCtx ctx = FieldCtx::prime(3, 2);
  Solution s = singular_solution(ctx, ctx.from_int(1));
  Solution ss = direct_sum(s, s);
  // the intertwiner space is 4-dimensional and echelon members may be
  // singular; the exhaustive sweep must still find an invertible combination
  auto w = are_equivalent(ss, ss);
  REQUIRE(w.has_value());
  CHECK(inverse_opt(*w).has_value());
  CHECK(*w * ss.x == ss.x * *w);
  CHECK(*w * ss.y == ss.y * *w);
}

}  // TEST_SUITE
