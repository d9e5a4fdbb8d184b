#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "cherednik/cli.hpp"
#include "cherednik/singular.hpp"
#include "json.hpp"

using namespace cherednik;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto o = run(std::move(args));
  REQUIRE(o.code == cli::kExitOk);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("quotient report for S(3), r = 2") {
  const auto j = run_json({"quotient", "--group", "S(3)", "--r", "2", "--cutoff", "8", "--format", "json"});
  CHECK(j["hilbert"] == Json::array({1, 2, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(j["dimension"] == 4);
  CHECK(j["status"] == "finite");
  CHECK(j["cutoff"] == 8);
  CHECK(j["k"] == "2/3");
}

TEST_CASE("rank one table") {
  const auto o = run({"rank1", "--l", "2", "--c", "3/2", "--format", "csv"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out.rfind("p,m,multiplicity,gap,b,dim_L\n", 0) == 0);
  CHECK(o.out.find("0,1,1,3,3,3\n") != std::string::npos);
  const auto brute = run({"rank1", "--l", "3", "--c", "1/2,2/3", "--brute"});
  CHECK(brute.code == cli::kExitOk);
}

TEST_CASE("floats and malformed input are usage errors") {
  const auto o = run({"dunkl", "--group", "Z(2)", "--c", "0.5", "--poly", "x1"});
  CHECK(o.code == cli::kExitUsage);
  CHECK(o.err.find("floating point") != std::string::npos);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"quotient", "--group", "S(3)"}).code == cli::kExitUsage);
  CHECK(run({"quotient", "--group", "G(2,1,2)", "--r", "3", "--k", "1/2", "--c", "7"}).code == cli::kExitUsage);
  CHECK(run({"dunkl", "--group", "S(2)", "--k", "1", "--poly", "x3"}).code == cli::kExitUsage);
  CHECK(run({"--format", "xml", "rank1", "--l", "2", "--c", "1"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("Dunkl subcommand") {
  const auto j = run_json({"dunkl", "--group", "Z(2)", "--c", "3/2", "--poly", "x1^3", "--direction", "1"});
  CHECK(j["results"][0]["value"]["text"] == "0");
  const auto k = run_json({"dunkl", "--group", "S(2)", "--k", "5/3", "--poly", "x1"});
  CHECK(k["results"][0]["value"]["text"] == "-2/3");
}

TEST_CASE("sigma sweep classification follows Sigma_r") {
  const auto j = run_json({"sweep", "sigma", "--l", "2", "--n", "2", "--r", "3", "--k", "1/3,1/2,1,2", "--cutoff", "12"});
  CHECK(j["consistent"] == true);
  REQUIRE(j["points"].size() == 4);
  for (const auto& p : j["points"]) {
    const bool in = sigma_r_contains(parse_rational(p["k"].get<std::string>()), 2, 2, 3);
    CHECK(p["status"] == (in ? "unknown_at_cutoff" : "finite"));
    if (!in) CHECK(p["dimension"] == 9);
  }
  const auto empty = run_json({"sweep", "sigma", "--l", "2", "--n", "2", "--r", "3", "--k", ""});
  CHECK(empty["points"].empty());
}

TEST_CASE("rank one sweep agrees with brute force") {
  const auto j = run_json({"sweep", "rank1", "--l", "3", "--b-max", "5"});
  CHECK(j["consistent"] == true);
  CHECK(j["points"].size() > 5);
}

TEST_CASE("output is deterministic and independent of the execution mode") {
  const std::vector<std::string> a = {"character", "--group", "G(2,1,2)", "--r", "3", "--k", "1/3", "--cutoff", "8"};
  const auto first = run(a), second = run(a);
  CHECK(first.code == cli::kExitOk);
  CHECK(first.out == second.out);
  auto par = a;
  par.insert(par.begin(), "--parallel");
  CHECK(run(par).out == first.out);

  const std::vector<std::string> s = {"--seed", "9", "support", "--n", "4", "--r", "2", "--samples", "30"};
  CHECK(run(s).out == run(s).out);
}

TEST_CASE("cutoff from the environment") {
  setenv(cli::kCutoffVariable, "5", 1);
  const auto j = run_json({"hilbert", "--group", "S(3)", "--r", "2"});
  unsetenv(cli::kCutoffVariable);
  CHECK(j["cutoff"] == 5);
  CHECK(run({"hilbert", "--group", "S(3)", "--r", "2"}).out != std::string());
  setenv(cli::kCutoffVariable, "five", 1);
  CHECK(run({"hilbert", "--group", "S(3)", "--r", "2"}).code == cli::kExitUsage);
  unsetenv(cli::kCutoffVariable);
}

TEST_CASE("other subcommands") {
  CHECK(run_json({"euler-check", "--group", "S(3)", "--r", "2"})["ok"] == true);
  CHECK(run_json({"gorenstein", "--group", "S(3)", "--r", "2"})["gorenstein"] == true);
  const auto rad = run_json({"radical", "--group", "Z(2)", "--c", "3/2", "--cutoff", "5"});
  CHECK(rad["hilbert"] == Json::array({1, 1, 1, 0, 0, 0}));
  CHECK(run_json({"locus", "sigma", "--l", "2", "--n", "2", "--r", "3", "--k", "1/2"})["contains"] == true);
  CHECK(run_json({"locus", "er", "--l", "2", "--n", "2", "--r", "3", "--k", "1/2", "--c", "1"})["on_locus"] == true);
  CHECK(run_json({"support", "--n", "4", "--r", "2", "--point", "1,1,5,5"})["points"][0]["support"] == true);
  CHECK(run_json({"singular", "typeA", "--n", "3", "--r", "2"})["singular_vectors"].size() == 3);
  CHECK(run_json({"singular", "wreath", "--l", "3", "--n", "2", "--r", "2", "--k", "1/5"})["singular_vectors"].size() == 2);
  CHECK(run_json({"singular", "solve", "--group", "S(3)", "--k", "2/3", "--degree", "2"})["dimension"] == 2);
}
