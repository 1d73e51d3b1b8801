#include <doctest.h>

#include <gmpxx.h>

#include "qweyl/errors.hpp"
#include "qweyl/field.hpp"

using namespace qweyl;

TEST_SUITE("field") {

TEST_CASE("prime context picks the smallest primitive root") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  CHECK(ctx.kind() == FieldKind::prime);
  CHECK(ctx.p() == 7);
  CHECK(ctx.l() == 3);
  CHECK(ctx.degree() == 1);
  CHECK(ctx.gamma().residue() == 2);
  CHECK(ctx.gamma_pow(3) == ctx.one());
  CHECK(ctx.gamma_pow(1) != ctx.one());
  CHECK(ctx.gamma_pow(2) != ctx.one());
}

TEST_CASE("prime context honors a valid gamma hint and rejects a bad one") {
  FieldCtx hinted = FieldCtx::prime(7, 3, 4);
  CHECK(hinted.gamma().residue() == 4);
  CHECK(hinted.gamma_pow(3) == hinted.one());

  CHECK_THROWS_WITH_AS(FieldCtx::prime(7, 3, 6), doctest::Contains("HintNotPrimitive"),
                       Error);
  CHECK_THROWS_WITH_AS(FieldCtx::prime(6, 3), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(FieldCtx::prime(5, 3), doctest::Contains("NoRootOfUnity"), Error);
}

TEST_CASE("smallest primes admitting each root order") {
  CHECK(smallest_prime_with_root(2) == 3);
  CHECK(smallest_prime_with_root(3) == 7);
  CHECK(smallest_prime_with_root(4) == 5);
  CHECK(smallest_prime_with_root(5) == 11);
  CHECK(smallest_prime_with_root(6) == 7);
  CHECK(smallest_prime_with_root(7) == 29);
  CHECK(smallest_prime_with_root(8) == 17);
}

TEST_CASE("primality of small integers") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("prime arithmetic") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  CHECK(ctx.from_residue(-1).residue() == 6);
  CHECK(ctx.from_int(10).residue() == 3);
  CHECK(ctx.from_int(3).inv() == ctx.from_int(5));
  CHECK(ctx.from_int(3).pow(-1) == ctx.from_int(5));
  CHECK(ctx.from_int(2) / ctx.from_int(3) == ctx.from_int(2) * ctx.from_int(5));
  CHECK((ctx.from_int(4) + ctx.from_int(5)).residue() == 2);
  CHECK((-ctx.from_int(2)).residue() == 5);
  CHECK_THROWS_WITH_AS(ctx.zero().inv(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("geometric sums vanish exactly at full length") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  CHECK(ctx.geometric_sum(0) == ctx.one());
  CHECK(ctx.geometric_sum(1) == ctx.from_int(3));  // 1 + 2
  CHECK(ctx.geometric_sum(2) == ctx.zero());       // 1 + 2 + 4 = 7

  FieldCtx cyc = FieldCtx::cyclotomic(3);
  CHECK(cyc.geometric_sum(1) != cyc.zero());
  CHECK(cyc.geometric_sum(2) == cyc.zero());
}

TEST_CASE("cyclotomic moduli match the classical polynomials") {
  auto coeffs = [](const FieldCtx& ctx) {
    std::vector<long> out;
    for (const auto& c : ctx.modulus()) out.push_back(c.get_si());
    return out;
  };
  CHECK(coeffs(FieldCtx::cyclotomic(2)) == std::vector<long>{1, 1});
  CHECK(coeffs(FieldCtx::cyclotomic(3)) == std::vector<long>{1, 1, 1});
  CHECK(coeffs(FieldCtx::cyclotomic(4)) == std::vector<long>{1, 0, 1});
  CHECK(coeffs(FieldCtx::cyclotomic(5)) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(coeffs(FieldCtx::cyclotomic(6)) == std::vector<long>{1, -1, 1});
  CHECK(coeffs(FieldCtx::cyclotomic(7)) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
  CHECK(coeffs(FieldCtx::cyclotomic(8)) == std::vector<long>{1, 0, 0, 0, 1});

  CHECK(FieldCtx::cyclotomic(2).degree() == 1);
  CHECK(FieldCtx::cyclotomic(3).degree() == 2);
  CHECK(FieldCtx::cyclotomic(8).degree() == 4);
}

TEST_CASE("cyclotomic arithmetic reduces modulo the minimal polynomial") {
  FieldCtx c3 = FieldCtx::cyclotomic(3);
  FieldElem g2 = c3.gamma_pow(2);
  CHECK(g2.coeffs() == std::vector<mpq_class>{-1, -1});  // t^2 = -1 - t
  CHECK(c3.gamma_pow(3) == c3.one());

  FieldCtx c4 = FieldCtx::cyclotomic(4);
  CHECK(c4.gamma_pow(2) == c4.from_int(-1));
  CHECK(c4.gamma() * c4.gamma_pow(3) == c4.one());
  CHECK(c4.gamma().inv() == c4.gamma_pow(3));
}

TEST_CASE("rational embedding and extraction") {
  FieldCtx c4 = FieldCtx::cyclotomic(4);
  mpq_class q(2, 3);
  FieldElem v = c4.from_rational(q);
  REQUIRE(v.as_rational().has_value());
  CHECK(*v.as_rational() == q);
  CHECK_FALSE(c4.gamma().as_rational().has_value());

  FieldElem w = c4.from_coeffs({mpq_class(-1, 2), mpq_class(3, 4)});
  CHECK(w.coeffs()[0] == mpq_class(-1, 2));
  CHECK(w.coeffs()[1] == mpq_class(3, 4));
  CHECK_THROWS_WITH_AS(c4.from_coeffs({mpq_class(1)}), doctest::Contains("BadLength"),
                       Error);
}

TEST_CASE("element order for orbit representatives") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  CHECK(lex_less(ctx.from_int(2), ctx.from_int(5)));
  CHECK_FALSE(lex_less(ctx.from_int(5), ctx.from_int(2)));

  FieldCtx c4 = FieldCtx::cyclotomic(4);
  CHECK(lex_less(c4.from_int(-1), c4.gamma()));   // [-1,0] < [0,1]
  CHECK(lex_less(c4.gamma(), c4.one()));          // [0,1] < [1,0]
  CHECK(lex_less(-c4.gamma(), c4.gamma()));       // [0,-1] < [0,1]
}

TEST_CASE("text forms") {
  FieldCtx ctx = FieldCtx::prime(7, 3);
  CHECK(ctx.from_int(5).str() == "5");

  FieldCtx c4 = FieldCtx::cyclotomic(4);
  FieldElem w = c4.from_coeffs({mpq_class(-1, 2), mpq_class(3)});
  CHECK(w.str() == "-1/2,3/1");
}

TEST_CASE("cross-context operations are rejected") {
  FieldCtx a = FieldCtx::prime(7, 3);
  FieldCtx b = FieldCtx::prime(13, 3);
  CHECK(a != b);
  CHECK(a == FieldCtx::prime(7, 3));
  CHECK_THROWS_WITH_AS(a.one() + b.one(), doctest::Contains("CtxMismatch"), Error);
}

}  // TEST_SUITE
