#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qweyl/burnside.hpp"
#include "qweyl/census.hpp"
#include "qweyl/field.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/reduce.hpp"
#include "qweyl/sampling.hpp"
#include "qweyl/solutions.hpp"

using namespace qweyl;

namespace {

void bm_prime_field_ops(benchmark::State& state) {
  FieldCtx ctx = FieldCtx::prime(29, 7);
  FieldElem a = ctx.from_int(17);
  FieldElem b = ctx.from_int(23);
  for (auto _ : state) {
    FieldElem c = a * b + a.inv();
    benchmark::DoNotOptimize(c.residue());
  }
}
BENCHMARK(bm_prime_field_ops);

void bm_cyclotomic_field_ops(benchmark::State& state) {
  FieldCtx ctx = FieldCtx::cyclotomic(static_cast<int>(state.range(0)));
  FieldElem a = ctx.gamma() + ctx.from_int(2);
  FieldElem b = ctx.gamma_pow(2) - ctx.from_rational(mpq_class(1, 3));
  for (auto _ : state) {
    FieldElem c = a * b + b.inv();
    benchmark::DoNotOptimize(&c);
  }
}
BENCHMARK(bm_cyclotomic_field_ops)->Arg(4)->Arg(8);

void bm_matrix_multiply(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
  Rng rng(7);
  Mat a = rng.invertible_matrix(ctx, static_cast<std::size_t>(l));
  Mat b = rng.invertible_matrix(ctx, static_cast<std::size_t>(l));
  for (auto _ : state) {
    Mat c = a * b;
    benchmark::DoNotOptimize(&c);
  }
}
BENCHMARK(bm_matrix_multiply)->Arg(4)->Arg(8);

void bm_algebra_closure(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
  Solution s = singular_solution(ctx, ctx.from_int(1));
  for (auto _ : state) {
    SubalgebraBasis alg = generated_algebra(s);
    benchmark::DoNotOptimize(alg.dim());
  }
}
BENCHMARK(bm_algebra_closure)->Arg(3)->Arg(5);

void bm_reduce_singular(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
  Rng rng(11);
  Solution s = singular_solution_alphas(
      ctx, rng.elements(ctx, static_cast<std::size_t>(l)));
  Mat g = rng.invertible_matrix(ctx, static_cast<std::size_t>(l));
  Mat gi = inverse(g);
  Solution t{ctx, g * s.x * gi, g * s.y * gi};
  for (auto _ : state) {
    Reduction r = reduce_singular(t);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(bm_reduce_singular)->Arg(3)->Arg(6);

void bm_reduce_nonsingular(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l);
  Rng rng(13);
  Solution s = nonsingular_solution(ctx, ctx.from_int(2),
                                    rng.nonzero_elements(ctx, static_cast<std::size_t>(l)));
  Mat g = rng.invertible_matrix(ctx, static_cast<std::size_t>(l));
  Mat gi = inverse(g);
  Solution t{ctx, g * s.x * gi, g * s.y * gi};
  for (auto _ : state) {
    Reduction r = reduce_nonsingular(t);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(bm_reduce_nonsingular)->Arg(3)->Arg(6);

void bm_census_flagship(benchmark::State& state) {
  FieldCtx ctx = FieldCtx::prime(3, 2);
  for (auto _ : state) {
    CensusReport report = classify_bruteforce(ctx, 2);
    benchmark::DoNotOptimize(report.irreducible_count);
  }
}
BENCHMARK(bm_census_flagship)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
