#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qweyl/json_io.hpp"
#include "qweyl/selftest.hpp"

namespace qweyl::cli {

namespace {

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::bad_length:
    case Errc::ctx_mismatch:
    case Errc::shape_mismatch:
    case Errc::range_error:
    case Errc::zero_parameter:
    case Errc::not_prime:
    case Errc::no_root_of_unity:
    case Errc::hint_not_primitive:
      return 2;
    default:
      return 1;
  }
}

FieldCtx build_ctx(const std::string& spec, int l, std::optional<std::int64_t> gamma) {
  if (spec.rfind("prime:", 0) == 0) {
    std::string digits = spec.substr(6);
    std::int64_t p = 0;
    bool ok = !digits.empty();
    try {
      std::size_t used = 0;
      p = std::stoll(digits, &used);
      ok = ok && used == digits.size();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) fail(Errc::parse_error, "bad field spec '" + spec + "'");
    return FieldCtx::prime(p, l, gamma);
  }
  if (spec == "cyclotomic") return FieldCtx::cyclotomic(l);
  fail(Errc::parse_error, "field spec must be 'prime:<p>' or 'cyclotomic'");
}

json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "invalid JSON in '" + path + "'");
  return j;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::uint64_t default_budget() {
  if (const char* env = std::getenv("QWEYL_CENSUS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return CensusOptions{}.budget;
}

struct CtxFlags {
  std::string spec = "prime:3";
  int l = 2;
  std::int64_t gamma = -1;  // negative means unset

  void attach(CLI::App* cmd) {
    cmd->add_option("--ctx", spec, "field: 'prime:<p>' or 'cyclotomic'");
    cmd->add_option("--l", l, "order of the root of unity")->required();
    cmd->add_option("--gamma", gamma, "preferred primitive root residue (prime fields)");
  }

  FieldCtx build() const {
    std::optional<std::int64_t> hint;
    if (gamma >= 0) hint = gamma;
    return build_ctx(spec, l, hint);
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact constructions, reductions and classification for pairs with y x - gamma x y = 1"};
  app.require_subcommand(1);
  int code = 0;

  // construct
  auto* construct = app.add_subcommand("construct", "emit a canonical family solution");
  construct->require_subcommand(1);

  auto* c_singular = construct->add_subcommand("singular", "shift x with corner-parameter y");
  CtxFlags singular_ctx;
  singular_ctx.attach(c_singular);
  std::string beta_text = "0";
  c_singular->add_option("--beta", beta_text, "corner parameter");
  c_singular->callback([&] {
    FieldCtx ctx = singular_ctx.build();
    print(out, to_json(singular_solution(ctx, elem_from_text(ctx, beta_text))));
  });

  auto* c_alphas = construct->add_subcommand("alphas", "shift x with general upper-triangular y");
  CtxFlags alphas_ctx;
  alphas_ctx.attach(c_alphas);
  std::string alphas_text;
  c_alphas->add_option("--alphas", alphas_text, "l parameters, ';' separated")->required();
  c_alphas->callback([&] {
    FieldCtx ctx = alphas_ctx.build();
    print(out, to_json(singular_solution_alphas(ctx, elems_from_text(ctx, alphas_text))));
  });

  auto* c_nonsingular = construct->add_subcommand("nonsingular", "diagonal x with cyclic y");
  CtxFlags nonsingular_ctx;
  nonsingular_ctx.attach(c_nonsingular);
  std::string lambda_text;
  std::string bs_text;
  std::string eta_text;
  c_nonsingular->add_option("--lambda", lambda_text, "diagonal scale, nonzero")->required();
  auto* bs_opt = c_nonsingular->add_option("--bs", bs_text, "l off-diagonal parameters, ';' separated");
  auto* eta_opt = c_nonsingular->add_option("--eta", eta_text, "corner parameter, nonzero");
  bs_opt->excludes(eta_opt);
  c_nonsingular->callback([&] {
    FieldCtx ctx = nonsingular_ctx.build();
    FieldElem lambda = elem_from_text(ctx, lambda_text);
    if (!bs_text.empty())
      print(out, to_json(nonsingular_solution(ctx, lambda, elems_from_text(ctx, bs_text))));
    else if (!eta_text.empty())
      print(out, to_json(nonsingular_solution_eta(ctx, lambda, elem_from_text(ctx, eta_text))));
    else
      fail(Errc::parse_error, "one of --bs or --eta is required");
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check the relation for a solution file");
  std::string verify_path;
  verify->add_option("file", verify_path, "solution JSON, '-' for stdin")->required();
  verify->callback([&] {
    RelationReport r = verify_relation(solution_from_json(read_json_input(verify_path)));
    print(out, to_json(r));
    code = r.pass ? 0 : 1;
  });

  // structural
  auto* structural = app.add_subcommand("structural", "power, skew-commutation and u-matrix facts");
  std::string structural_path;
  structural->add_option("file", structural_path, "solution JSON, '-' for stdin")->required();
  structural->callback([&] {
    StructuralReport r = structural_report(solution_from_json(read_json_input(structural_path)));
    print(out, to_json(r));
    code = r.all_pass() ? 0 : 1;
  });

  // irreducible
  auto* irreducible = app.add_subcommand("irreducible", "dimension of the generated algebra");
  std::string irreducible_path;
  irreducible->add_option("file", irreducible_path, "solution JSON, '-' for stdin")->required();
  irreducible->callback([&] {
    Solution s = solution_from_json(read_json_input(irreducible_path));
    SubalgebraBasis alg = generated_algebra(s);
    bool irr = alg.dim() == s.size() * s.size();
    json j;
    j["irreducible"] = irr;
    j["algebra_dim"] = alg.dim();
    print(out, j);
    code = irr ? 0 : 1;
  });

  // elementary
  auto* elementary = app.add_subcommand("elementary", "monomial combination equal to e_mn");
  int elem_l = 0;
  std::size_t elem_m = 0;
  std::size_t elem_n = 0;
  std::string elem_spec = "prime:3";
  std::int64_t elem_gamma = -1;
  std::string elem_beta = "0";
  elementary->add_option("l", elem_l, "order of the root of unity")->required();
  elementary->add_option("m", elem_m, "target row, 1..l")->required();
  elementary->add_option("n", elem_n, "target column, 1..l")->required();
  elementary->add_option("--ctx", elem_spec, "field: 'prime:<p>' or 'cyclotomic'");
  elementary->add_option("--gamma", elem_gamma, "preferred primitive root residue");
  elementary->add_option("--beta", elem_beta, "corner parameter of the family");
  elementary->callback([&] {
    std::optional<std::int64_t> hint;
    if (elem_gamma >= 0) hint = elem_gamma;
    FieldCtx ctx = build_ctx(elem_spec, elem_l, hint);
    Solution s = singular_solution(ctx, elem_from_text(ctx, elem_beta));
    print(out, to_json(elementary_in_monomials(s, elem_m, elem_n)));
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "canonical form with conjugation witness");
  std::string reduce_path;
  reduce->add_option("file", reduce_path, "solution JSON, '-' for stdin")->required();
  reduce->callback([&] {
    print(out, to_json(canonicalize(solution_from_json(read_json_input(reduce_path)))));
  });

  // equivalent
  auto* equivalent = app.add_subcommand("equivalent", "simultaneous similarity test");
  std::string eq_a;
  std::string eq_b;
  equivalent->add_option("a", eq_a, "first solution JSON")->required();
  equivalent->add_option("b", eq_b, "second solution JSON")->required();
  equivalent->callback([&] {
    Solution a = solution_from_json(read_json_input(eq_a));
    Solution b = solution_from_json(read_json_input(eq_b));
    auto witness = are_equivalent(a, b);
    json j;
    j["equivalent"] = witness.has_value();
    if (witness) j["witness"] = to_json(*witness);
    print(out, j);
    code = witness ? 0 : 1;
  });

  // census
  auto* census = app.add_subcommand("census", "brute-force classification over a prime field");
  std::int64_t census_p = 0;
  int census_l = 0;
  std::size_t census_n = 0;
  std::int64_t census_gamma = -1;
  CensusOptions census_opts;
  census_opts.budget = default_budget();
  census->add_option("--p", census_p, "field size, prime with l | p-1")->required();
  census->add_option("--l", census_l, "order of the root of unity")->required();
  census->add_option("--n", census_n, "matrix size to sweep")->required();
  census->add_option("--gamma", census_gamma, "preferred primitive root residue");
  census->add_flag("--prune", census_opts.prune, "skip x with non-scalar x^l");
  census->add_option("--jobs", census_opts.jobs, "parallel sweep partitions");
  census->add_option("--budget", census_opts.budget, "maximum x-sweep size");
  census->callback([&] {
    std::optional<std::int64_t> hint;
    if (census_gamma >= 0) hint = census_gamma;
    FieldCtx ctx = FieldCtx::prime(census_p, census_l, hint);
    CensusReport report = classify_bruteforce(ctx, census_n, census_opts);
    CrossValidation cv = cross_validate(report);
    json j = to_json(report);
    j["cross_validation"] = to_json(cv);
    print(out, j);
    code = (report.anomalies.empty() && cv.bijection) ? 0 : 1;
  });

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
  std::uint64_t seed = default_selftest_seed;
  selftest->add_option("--seed", seed, "master seed for all sampled checks");
  selftest->callback([&] {
    SelftestReport report = run_selftest(seed);
    print(out, to_json(report));
    code = report.pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    print(out, to_json(e));
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace qweyl::cli
