#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;

  nlohmann::json body() const { return nlohmann::json::parse(out); }
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("qweyl");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = qweyl::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << text;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct emits a verifiable solution") {
  CliResult r = run({"construct", "singular", "--ctx", "prime:7", "--l", "3", "--beta", "4"});
  REQUIRE(r.code == 0);
  auto j = r.body();
  CHECK(j["ctx"]["p"] == 7);
  CHECK(j["x"]["rows"] == 3);
  CHECK(j["y"]["entries"][2] == 4);  // corner parameter at (1, l)

  auto file = write_temp("qweyl_cli_singular.json", r.out);
  CliResult v = run({"verify", file.string()});
  CHECK(v.code == 0);
  CHECK(v.body()["pass"] == true);
}

TEST_CASE("construct covers all three families and both field kinds") {
  CHECK(run({"construct", "alphas", "--ctx", "prime:7", "--l", "3", "--alphas", "1;2;3"})
            .code == 0);
  CHECK(run({"construct", "nonsingular", "--ctx", "prime:7", "--l", "3", "--lambda", "3",
             "--bs", "1;2;3"})
            .code == 0);
  CHECK(run({"construct", "nonsingular", "--ctx", "cyclotomic", "--l", "4", "--lambda",
             "2,0", "--eta", "1,1"})
            .code == 0);
  CliResult r = run({"construct", "singular", "--ctx", "cyclotomic", "--l", "3", "--beta",
                     "1/2,-2"});
  REQUIRE(r.code == 0);
  CHECK(r.body()["y"]["entries"][2][0] == "1/2");
}

TEST_CASE("usage and format failures exit with 2") {
  CHECK(run({"construct", "singular", "--ctx", "prime:5", "--l", "3"}).code == 2);
  CHECK(run({"construct", "singular", "--ctx", "prime:abc", "--l", "2"}).code == 2);
  CHECK(run({"construct", "singular", "--ctx", "prime:9", "--l", "2"}).code == 2);
  CHECK(run({"construct", "nonsingular", "--ctx", "prime:7", "--l", "3", "--lambda", "0",
             "--eta", "1"})
            .code == 2);
  CHECK(run({"construct", "alphas", "--ctx", "prime:7", "--l", "3", "--alphas", "1;2"})
            .code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);

  auto junk = write_temp("qweyl_cli_junk.json", "{ not json");
  CliResult r = run({"verify", junk.string()});
  CHECK(r.code == 2);
  CHECK(r.body()["error"]["code"] == "ParseError");
  CHECK(run({"verify", "/nonexistent/qweyl.json"}).code == 2);
}

TEST_CASE("verify flags broken pairs with exit 1 and a residual") {
  CliResult good = run({"construct", "singular", "--ctx", "prime:7", "--l", "3"});
  REQUIRE(good.code == 0);
  auto j = good.body();
  j["y"]["entries"][0] = 1;  // corrupt one entry
  auto file = write_temp("qweyl_cli_broken.json", j.dump());
  CliResult r = run({"verify", file.string()});
  CHECK(r.code == 1);
  CHECK(r.body()["pass"] == false);
  CHECK(r.body().contains("residual"));
}

TEST_CASE("structural and irreducible checks pass on a canonical pair") {
  CliResult c = run({"construct", "nonsingular", "--ctx", "prime:7", "--l", "3",
                     "--lambda", "3", "--eta", "2"});
  REQUIRE(c.code == 0);
  auto file = write_temp("qweyl_cli_nonsingular.json", c.out);

  CliResult s = run({"structural", file.string()});
  CHECK(s.code == 0);
  CHECK(s.body()["ux_skew"] == true);

  CliResult i = run({"irreducible", file.string()});
  CHECK(i.code == 0);
  CHECK(i.body()["irreducible"] == true);
  CHECK(i.body()["algebra_dim"] == 9);
}

TEST_CASE("elementary expansion through the command line") {
  CliResult r = run({"elementary", "3", "2", "3", "--ctx", "prime:7", "--beta", "1"});
  REQUIRE(r.code == 0);
  auto j = r.body();
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 3);
  CHECK(j["terms"].is_array());
  CHECK(run({"elementary", "3", "4", "1", "--ctx", "prime:7"}).code == 2);
}

TEST_CASE("reduce names the canonical form and witness") {
  CliResult c =
      run({"construct", "alphas", "--ctx", "prime:7", "--l", "3", "--alphas", "1;2;3"});
  REQUIRE(c.code == 0);
  auto file = write_temp("qweyl_cli_alphas.json", c.out);
  CliResult r = run({"reduce", file.string()});
  REQUIRE(r.code == 0);
  auto j = r.body();
  CHECK(j["canonical"]["tag"] == "SingularBeta");
  CHECK(j["canonical"]["beta"] == 4);
  CHECK(j["witness"]["rows"] == 3);

  // a pair that cannot be reduced over its field is a mathematical failure
  nlohmann::json extra;
  extra["ctx"] = {{"kind", "prime"}, {"p", 3}, {"l", 2}, {"gamma", 2}};
  extra["x"] = {{"rows", 2}, {"cols", 2}, {"entries", {0, 2, 1, 0}}};
  extra["y"] = {{"rows", 2}, {"cols", 2}, {"entries", {0, 1, 0, 0}}};
  auto efile = write_temp("qweyl_cli_extra.json", extra.dump());
  CliResult e = run({"reduce", efile.string()});
  CHECK(e.code == 1);
  CHECK(e.body()["error"]["code"] == "NoEigenvalueInField");
}

TEST_CASE("equivalence through the command line") {
  CliResult a =
      run({"construct", "alphas", "--ctx", "prime:7", "--l", "3", "--alphas", "1;2;3"});
  CliResult b = run({"construct", "singular", "--ctx", "prime:7", "--l", "3", "--beta", "4"});
  CliResult c = run({"construct", "singular", "--ctx", "prime:7", "--l", "3", "--beta", "5"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(c.code == 0);
  auto fa = write_temp("qweyl_cli_eq_a.json", a.out);
  auto fb = write_temp("qweyl_cli_eq_b.json", b.out);
  auto fc = write_temp("qweyl_cli_eq_c.json", c.out);

  CliResult same = run({"equivalent", fa.string(), fb.string()});
  CHECK(same.code == 0);
  CHECK(same.body()["equivalent"] == true);
  CHECK(same.body().contains("witness"));

  CliResult diff = run({"equivalent", fa.string(), fc.string()});
  CHECK(diff.code == 1);
  CHECK(diff.body()["equivalent"] == false);

  // mixing fields is a context error
  CliResult other = run({"construct", "singular", "--ctx", "prime:13", "--l", "3"});
  REQUIRE(other.code == 0);
  auto fo = write_temp("qweyl_cli_eq_o.json", other.out);
  CHECK(run({"equivalent", fa.string(), fo.string()}).code == 2);
}

TEST_CASE("census reports the classification and its cross-check") {
  CliResult clean = run({"census", "--p", "3", "--l", "2", "--n", "1"});
  CHECK(clean.code == 0);
  CHECK(clean.body()["irreducible_count"] == 0);
  CHECK(clean.body()["cross_validation"]["bijection"] == true);

  CliResult flagship = run({"census", "--p", "3", "--l", "2", "--n", "2"});
  CHECK(flagship.code == 1);  // the two extra classes break the bijection
  auto j = flagship.body();
  CHECK(j["total_solutions"] == 264);
  CHECK(j["irreducible_count"] == 168);
  CHECK(j["classes"].size() == 7);
  CHECK(j["cross_validation"]["bijection"] == false);

  CliResult over = run({"census", "--p", "3", "--l", "2", "--n", "4"});
  CHECK(over.code == 1);
  CHECK(over.body()["error"]["code"] == "BudgetExceeded");

  CHECK(run({"census", "--p", "4", "--l", "2", "--n", "2"}).code == 2);
}

}  // TEST_SUITE
