#include "qweyl/selftest.hpp"

#include <algorithm>
#include <functional>

#include "qweyl/sampling.hpp"

namespace qweyl {

namespace {

struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (first.empty()) first = what;
    }
  }

  CriterionResult result(int index, const std::string& extra = "") const {
    CriterionResult r{index, criterion_name(index), failed == 0, ""};
    r.detail = std::to_string(checked) + " checks";
    if (!extra.empty()) r.detail += "; " + extra;
    if (failed > 0)
      r.detail += "; " + std::to_string(failed) + " failed, first: " + first;
    return r;
  }
};

std::uint64_t tag(int criterion, int l, int kind) {
  return static_cast<std::uint64_t>(criterion) * 1000 +
         static_cast<std::uint64_t>(l) * 10 + static_cast<std::uint64_t>(kind);
}

std::vector<FieldCtx> both_kinds(int l) {
  std::vector<FieldCtx> ctxs;
  ctxs.push_back(FieldCtx::cyclotomic(l));
  ctxs.push_back(FieldCtx::prime(smallest_prime_with_root(l), l, std::nullopt));
  return ctxs;
}

std::string ctx_label(const FieldCtx& ctx) {
  if (ctx.kind() == FieldKind::prime)
    return "F_" + std::to_string(ctx.p()) + " l=" + std::to_string(ctx.l());
  return "Q(zeta_" + std::to_string(ctx.l()) + ")";
}

// A nonzero cyclotomic scalar whose l-th power is rational, so the eigenvalue
// search can see it: integer times a power of gamma.
FieldElem rational_times_root(Rng& rng, const FieldCtx& ctx) {
  long c = static_cast<long>(rng.below(8)) - 4;
  if (c == 0) c = 1;
  return ctx.from_int(c) * ctx.gamma_pow(static_cast<long>(rng.below(8)));
}

// The criterion 1 instance set, reused verbatim by criterion 3. Seeds are
// bound to criterion 1 on purpose.
void relation_instances(
    std::uint64_t seed,
    const std::function<void(const Solution&, const std::string&)>& visit) {
  for (int l = 2; l <= 8; ++l) {
    auto ctxs = both_kinds(l);
    for (std::size_t kind = 0; kind < ctxs.size(); ++kind) {
      const FieldCtx& ctx = ctxs[kind];
      Rng rng(derive_seed(seed, tag(1, l, static_cast<int>(kind))));
      for (int draw = 0; draw < 20; ++draw) {
        std::string where = ctx_label(ctx) + " draw " + std::to_string(draw);
        visit(singular_solution(ctx, rng.element(ctx)), where + " singular");
        visit(singular_solution_alphas(ctx, rng.elements(ctx, static_cast<std::size_t>(l))),
              where + " alphas");
        FieldElem lambda = ctx.kind() == FieldKind::prime ? rng.nonzero_element(ctx)
                                                          : rational_times_root(rng, ctx);
        visit(nonsingular_solution(ctx, lambda,
                                   rng.nonzero_elements(ctx, static_cast<std::size_t>(l))),
              where + " nonsingular");
        visit(nonsingular_solution_eta(ctx, lambda, rng.nonzero_element(ctx)),
              where + " nonsingular-eta");
      }
    }
  }
}

CriterionResult criterion_relation_exactness(std::uint64_t seed) {
  Tally t;
  relation_instances(seed, [&](const Solution& s, const std::string& where) {
    RelationReport rel = verify_relation(s);
    t.expect(rel.pass && !rel.residual, where + ": relation residual nonzero");
  });
  return t.result(1);
}

CriterionResult criterion_algebra_dimension(std::uint64_t seed) {
  Tally t;
  auto full = [&](const Solution& s, const std::string& where) {
    std::size_t n = s.size();
    SubalgebraBasis alg = generated_algebra(s);
    t.expect(alg.dim() == n * n, where + ": algebra dimension " +
                                     std::to_string(alg.dim()) + " of " +
                                     std::to_string(n * n));
  };
  for (int l = 2; l <= 6; ++l) {
    FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l, std::nullopt);
    Rng rng(derive_seed(seed, tag(2, l, 1)));
    std::string label = ctx_label(ctx);
    full(singular_solution(ctx, ctx.zero()), label + " beta=0");
    full(singular_solution(ctx, ctx.one()), label + " beta=1");
    full(singular_solution(ctx, rng.element(ctx)), label + " beta random");
    for (int draw = 0; draw < 3; ++draw)
      full(nonsingular_solution_eta(ctx, rng.nonzero_element(ctx), rng.nonzero_element(ctx)),
           label + " lambda-eta draw " + std::to_string(draw));
  }
  for (int l = 2; l <= 3; ++l) {
    FieldCtx ctx = FieldCtx::cyclotomic(l);
    Rng rng(derive_seed(seed, tag(2, l, 0)));
    std::string label = ctx_label(ctx);
    full(singular_solution(ctx, ctx.zero()), label + " beta=0");
    full(singular_solution(ctx, ctx.one()), label + " beta=1");
    full(nonsingular_solution_eta(ctx, rational_times_root(rng, ctx),
                                  rng.nonzero_element(ctx)),
         label + " lambda-eta");
  }
  // the textbook opening example: shift and its transpose-like partner at l=2
  FieldCtx intro = FieldCtx::prime(3, 2, std::nullopt);
  full(singular_solution(intro, intro.zero()), "intro pair F_3");
  full(singular_solution(FieldCtx::cyclotomic(2), FieldCtx::cyclotomic(2).zero()),
       "intro pair Q");
  return t.result(2);
}

CriterionResult criterion_structural_facts(std::uint64_t seed) {
  Tally t;
  relation_instances(seed, [&](const Solution& s, const std::string& where) {
    StructuralReport r = structural_report(s);
    t.expect(r.all_pass(), where + ": structural check failed");
  });
  return t.result(3);
}

CriterionResult criterion_power_row_formula(std::uint64_t seed) {
  Tally t;
  for (int l = 2; l <= 6; ++l)
    for (const FieldCtx& ctx : both_kinds(l)) {
      Rng rng(derive_seed(seed, tag(4, l, ctx.kind() == FieldKind::prime)));
      for (const FieldElem& beta :
           {ctx.zero(), ctx.one(), rng.element(ctx)}) {
        Mat y = singular_y(ctx, beta);
        Mat power = Mat::identity(ctx, static_cast<std::size_t>(l));
        for (int v = 1; v <= l - 1; ++v) {
          power = power * y;
          FieldElem expected = power_row_value(ctx, v);
          bool ok = true;
          for (int col = 1; col <= l; ++col) {
            const FieldElem& entry = power.at(static_cast<std::size_t>(l - 1),
                                              static_cast<std::size_t>(col - 1));
            ok = ok && (col == l - v ? entry == expected : entry.is_zero());
          }
          t.expect(ok, ctx_label(ctx) + " v=" + std::to_string(v) +
                           ": bottom row of y^v deviates");
        }
      }
    }
  return t.result(4);
}

CriterionResult criterion_elementary_extraction(std::uint64_t seed) {
  Tally t;
  for (int l = 2; l <= 5; ++l)
    for (const FieldCtx& ctx : both_kinds(l)) {
      Rng rng(derive_seed(seed, tag(5, l, ctx.kind() == FieldKind::prime)));
      for (const FieldElem& beta : {ctx.zero(), rng.element(ctx)}) {
        Solution s = singular_solution(ctx, beta);
        std::size_t lu = static_cast<std::size_t>(l);
        for (std::size_t m = 1; m <= lu; ++m)
          for (std::size_t n = 1; n <= lu; ++n) {
            std::string where = ctx_label(ctx) + " e(" + std::to_string(m) + "," +
                                std::to_string(n) + ")";
            ElementaryCombination combo = elementary_in_monomials(s, m, n);
            bool exponents_ok = true;
            Mat value(ctx, lu, lu);
            for (const auto& term : combo.terms) {
              exponents_ok = exponents_ok && term.i >= 0 && term.i < l &&
                             term.j >= 0 && term.j < l;
              value = value + (s.x.pow(static_cast<unsigned long>(term.i)) *
                               s.y.pow(static_cast<unsigned long>(term.j)))
                                  .scaled(term.coeff);
            }
            Mat target(ctx, lu, lu);
            target.set(m - 1, n - 1, ctx.one());
            t.expect(exponents_ok, where + ": exponent outside 0..l-1");
            t.expect(value == target, where + ": terms do not evaluate to e_mn");

            // the display identity behind the extraction: x^(l-m) y^(l-n)
            // equals the leading product at (m, n) plus rows above m
            FieldElem lead = ctx.one();
            for (std::size_t j = n + 1; j <= lu; ++j)
              lead *= ctx.geometric_sum(static_cast<long>(lu - j));
            Mat w = s.x.pow(static_cast<unsigned long>(lu - m)) *
                    s.y.pow(static_cast<unsigned long>(lu - n));
            bool shape_ok = !lead.is_zero() && w.at(m - 1, n - 1) == lead;
            for (std::size_t i = m - 1; i < lu && shape_ok; ++i)
              for (std::size_t jj = 0; jj < lu; ++jj)
                if (!(i == m - 1 && jj == n - 1))
                  shape_ok = shape_ok && w.at(i, jj).is_zero();
            t.expect(shape_ok, where + ": leading identity fails");
          }
      }
    }
  return t.result(5);
}

CriterionResult criterion_shift_relation_family(std::uint64_t) {
  Tally t;
  for (int l = 2; l <= 6; ++l)
    for (const FieldCtx& ctx : both_kinds(l)) {
      for (std::size_t n = 1; n <= 3 * static_cast<std::size_t>(l); ++n) {
        AffineFamily fam = solve_D_for_shift(ctx, n);
        std::string where =
            ctx_label(ctx) + " n=" + std::to_string(n);
        if (n % static_cast<std::size_t>(l) != 0) {
          t.expect(!fam.feasible, where + ": expected infeasible");
          continue;
        }
        if (n != static_cast<std::size_t>(l)) continue;
        bool ok = fam.feasible && fam.basis.size() == static_cast<std::size_t>(l);
        if (ok) {
          // every member must be exactly the alphas family over its corner column
          Mat shift = shift_x(ctx);
          FieldElem g = ctx.gamma();
          auto is_family_member = [&](const Mat& d) {
            std::vector<FieldElem> alphas;
            for (std::size_t i = 0; i < n; ++i) alphas.push_back(d.at(i, n - 1));
            return d == singular_y_alphas(ctx, alphas);
          };
          Mat particular = *fam.particular;
          ok = (particular * shift - (shift * particular).scaled(g) ==
                Mat::identity(ctx, n)) &&
               is_family_member(particular);
          for (const Mat& b : fam.basis) {
            ok = ok && (b * shift - (shift * b).scaled(g)).is_zero() &&
                 is_family_member(particular + b);
          }
        }
        t.expect(ok, where + ": family at n=l is not the l-parameter one");
      }
    }
  return t.result(6);
}

CriterionResult criterion_reduction_roundtrip(std::uint64_t seed) {
  Tally t;
  for (int l = 2; l <= 6; ++l) {
    FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l, std::nullopt);
    std::size_t lu = static_cast<std::size_t>(l);
    std::string label = ctx_label(ctx);
    Rng rng(derive_seed(seed, tag(7, l, 1)));
    for (int draw = 0; draw < 100; ++draw) {
      std::vector<FieldElem> alphas = rng.elements(ctx, lu);
      Solution s = singular_solution_alphas(ctx, alphas);
      Reduction red = reduce_singular(s);
      FieldElem beta = recursion_p(ctx, alphas).second;
      t.expect(red.canonical == CanonicalForm::singular(beta),
               label + " alphas draw " + std::to_string(draw) + ": wrong beta");
    }
    for (int draw = 0; draw < 100; ++draw) {
      FieldElem lambda = rng.nonzero_element(ctx);
      std::vector<FieldElem> bs = rng.nonzero_elements(ctx, lu);
      Solution s = nonsingular_solution(ctx, lambda, bs);
      Reduction red = reduce_nonsingular(s);
      FieldElem eta = ctx.one();
      for (const auto& b : bs) eta *= b;
      t.expect(red.canonical ==
                   CanonicalForm::nonsingular(orbit_representative(lambda), eta),
               label + " bs draw " + std::to_string(draw) + ": wrong lambda or eta");
    }
    for (int draw = 0; draw < 5; ++draw) {
      Mat g = rng.invertible_matrix(ctx, lu);
      Mat ginv = inverse(g);
      Solution s1 = singular_solution_alphas(ctx, rng.elements(ctx, lu));
      Solution c1{ctx, g * s1.x * ginv, g * s1.y * ginv};
      t.expect(canonicalize(c1).canonical == canonicalize(s1).canonical,
               label + " conjugated singular draw " + std::to_string(draw) +
                   ": canonical form changed");
      Solution s2 =
          nonsingular_solution(ctx, rng.nonzero_element(ctx), rng.nonzero_elements(ctx, lu));
      Solution c2{ctx, g * s2.x * ginv, g * s2.y * ginv};
      t.expect(canonicalize(c2).canonical == canonicalize(s2).canonical,
               label + " conjugated nonsingular draw " + std::to_string(draw) +
                   ": canonical form changed");
    }
  }
  for (int l = 2; l <= 3; ++l) {
    FieldCtx ctx = FieldCtx::cyclotomic(l);
    std::size_t lu = static_cast<std::size_t>(l);
    std::string label = ctx_label(ctx);
    Rng rng(derive_seed(seed, tag(7, l, 0)));
    for (int draw = 0; draw < 10; ++draw) {
      std::vector<FieldElem> alphas = rng.elements(ctx, lu);
      Reduction red = reduce_singular(singular_solution_alphas(ctx, alphas));
      t.expect(red.canonical ==
                   CanonicalForm::singular(recursion_p(ctx, alphas).second),
               label + " alphas draw " + std::to_string(draw) + ": wrong beta");
      FieldElem lambda = rational_times_root(rng, ctx);
      std::vector<FieldElem> bs = rng.nonzero_elements(ctx, lu);
      Reduction nred = reduce_nonsingular(nonsingular_solution(ctx, lambda, bs));
      FieldElem eta = ctx.one();
      for (const auto& b : bs) eta *= b;
      t.expect(nred.canonical ==
                   CanonicalForm::nonsingular(orbit_representative(lambda), eta),
               label + " bs draw " + std::to_string(draw) + ": wrong lambda or eta");
    }
  }
  return t.result(7);
}

CriterionResult criterion_intertwiner_dimensions(std::uint64_t seed) {
  Tally t;
  for (int l = 2; l <= 3; ++l) {
    FieldCtx ctx = FieldCtx::prime(smallest_prime_with_root(l), l, std::nullopt);
    std::string label = ctx_label(ctx);
    Rng rng(derive_seed(seed, tag(8, l, 1)));
    std::vector<CanonicalForm> forms;
    for (std::int64_t b = 0; b < std::min<std::int64_t>(4, ctx.p()); ++b)
      forms.push_back(CanonicalForm::singular(ctx.from_residue(b)));
    std::vector<FieldElem> reps;
    for (std::int64_t r = 1; r < ctx.p(); ++r) {
      FieldElem rep = orbit_representative(ctx.from_residue(r));
      bool seen = false;
      for (const auto& known : reps) seen = seen || known == rep;
      if (!seen) reps.push_back(rep);
    }
    for (const auto& rep : reps)
      for (std::int64_t e = 1; e < std::min<std::int64_t>(5, ctx.p()); ++e)
        forms.push_back(CanonicalForm::nonsingular(rep, ctx.from_residue(e)));

    std::vector<Solution> reals;
    for (const auto& f : forms) reals.push_back(realize(ctx, f));
    for (std::size_t i = 0; i < reals.size(); ++i)
      for (std::size_t j = i + 1; j < reals.size(); ++j)
        t.expect(intertwiners(reals[i], reals[j]).empty(),
                 label + " forms " + std::to_string(i) + "," + std::to_string(j) +
                     ": unexpected intertwiner");
    for (std::size_t i = 0; i < reals.size(); ++i) {
      t.expect(intertwiners(reals[i], reals[i]).size() == 1,
               label + " form " + std::to_string(i) + ": self-dimension is not 1");
      for (int draw = 0; draw < 2; ++draw) {
        Mat g = rng.invertible_matrix(ctx, reals[i].size());
        Mat ginv = inverse(g);
        Solution conj{ctx, g * reals[i].x * ginv, g * reals[i].y * ginv};
        t.expect(intertwiners(reals[i], conj).size() == 1,
                 label + " form " + std::to_string(i) + ": conjugate dimension is not 1");
        auto witness = are_equivalent(reals[i], conj);
        t.expect(witness && is_scalar(*witness * ginv).has_value(),
                 label + " form " + std::to_string(i) +
                     ": witness is not a scalar multiple of the conjugator");
      }
    }
  }
  FieldCtx qctx = FieldCtx::cyclotomic(2);
  Solution a = singular_solution(qctx, qctx.zero());
  Solution b = singular_solution(qctx, qctx.one());
  Solution c = nonsingular_solution_eta(qctx, qctx.one(), qctx.one());
  t.expect(intertwiners(a, a).size() == 1, "Q(zeta_2): self-dimension is not 1");
  t.expect(intertwiners(a, b).empty(), "Q(zeta_2): distinct betas intertwine");
  t.expect(intertwiners(a, c).empty(), "Q(zeta_2): cross-family intertwiner");
  return t.result(8);
}

CriterionResult criterion_census_bijection(std::uint64_t) {
  Tally t;
  std::string extra;
  for (std::int64_t p : {3, 5}) {
    FieldCtx ctx = FieldCtx::prime(p, 2, std::nullopt);
    CensusReport report = classify_bruteforce(ctx, 2);
    CrossValidation cv = cross_validate(report);
    std::string label = "p=" + std::to_string(p);
    t.expect(cv.bijection,
             label + ": classes=" + std::to_string(report.classes.size()) +
                 " predicted=" + std::to_string(predicted_forms(ctx).size()) +
                 " missing=" + std::to_string(cv.missing.size()) +
                 " unexpected=" + std::to_string(cv.unexpected.size()) +
                 " anomalies=" + std::to_string(cv.anomalies.size()));
    if (!extra.empty()) extra += "; ";
    extra += label + ": total=" + std::to_string(report.total_solutions) +
             " irreducible=" + std::to_string(report.irreducible_count) +
             " classes=" + std::to_string(report.classes.size());
  }
  return t.result(9, extra);
}

std::vector<CriterionResult> run_basic(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int index = 1; index <= 9; ++index) out.push_back(run_criterion(index, seed));
  return out;
}

std::string transcript(std::uint64_t seed) {
  json j;
  j["seed"] = seed;
  json arr = json::array();
  for (const auto& r : run_basic(seed)) arr.push_back(to_json(r));
  j["criteria"] = arr;
  return j.dump(2);
}

CriterionResult criterion_determinism(std::uint64_t seed) {
  std::string first = transcript(seed);
  std::string second = transcript(seed);
  CriterionResult r{10, criterion_name(10), first == second, ""};
  if (r.pass) {
    r.detail = "two transcripts of " + std::to_string(first.size()) + " bytes match";
  } else {
    std::size_t at = 0;
    while (at < first.size() && at < second.size() && first[at] == second[at]) ++at;
    r.detail = "transcripts diverge at byte " + std::to_string(at);
  }
  return r;
}

}  // namespace

const char* criterion_name(int index) {
  switch (index) {
    case 1: return "relation-exactness";
    case 2: return "algebra-dimension";
    case 3: return "structural-facts";
    case 4: return "power-row-formula";
    case 5: return "elementary-extraction";
    case 6: return "shift-relation-family";
    case 7: return "reduction-roundtrip";
    case 8: return "intertwiner-dimensions";
    case 9: return "census-bijection";
    case 10: return "determinism";
    default: fail(Errc::range_error, "criterion index must be 1..10");
  }
}

CriterionResult run_criterion(int index, std::uint64_t seed) {
  const char* name = criterion_name(index);  // rejects a bad index up front
  try {
    switch (index) {
      case 1: return criterion_relation_exactness(seed);
      case 2: return criterion_algebra_dimension(seed);
      case 3: return criterion_structural_facts(seed);
      case 4: return criterion_power_row_formula(seed);
      case 5: return criterion_elementary_extraction(seed);
      case 6: return criterion_shift_relation_family(seed);
      case 7: return criterion_reduction_roundtrip(seed);
      case 8: return criterion_intertwiner_dimensions(seed);
      case 9: return criterion_census_bijection(seed);
      case 10: return criterion_determinism(seed);
      default: fail(Errc::range_error, "criterion index must be 1..10");
    }
  } catch (const std::exception& e) {
    return {index, name, false, std::string("exception: ") + e.what()};
  }
}

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report;
  report.seed = seed;
  report.pass = true;
  for (int index = 1; index <= criterion_count; ++index) {
    report.criteria.push_back(run_criterion(index, seed));
    report.pass = report.pass && report.criteria.back().pass;
  }
  return report;
}

json to_json(const CriterionResult& r) {
  json j;
  j["index"] = r.index;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

json to_json(const SelftestReport& r) {
  json j;
  j["seed"] = r.seed;
  json arr = json::array();
  for (const auto& c : r.criteria) arr.push_back(to_json(c));
  j["criteria"] = arr;
  j["pass"] = r.pass;
  return j;
}

}  // namespace qweyl
