#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "shadowpack/cli.hpp"
#include "shadowpack/io.hpp"

using namespace shadowpack;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"shadowpack"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli((int)argv.size(), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("density command reproduces the lattice densities") {
  Run r = run({"density", "--body", "cubocta", "--lattice", "lambda1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["density"] == "45/49");
  CHECK(j["determinant"] == "196/27");

  Run r2 = run({"density", "--lattice", "lambda2"});
  CHECK(Json::parse(r2.out)["density"] == "20/27");
}

TEST_CASE("vol and diffbody") {
  Run r = run({"vol", "--body", "cube:1"});
  CHECK(Json::parse(r.out)["volume"] == "8/1");
  Run t = run({"diffbody", "--body", "tetra"});
  Json j = Json::parse(t.out);
  CHECK(j["ratio"] == "20/1");
  CHECK(j["body"]["vertices"].size() == 12);
}

TEST_CASE("shadow command, exact and sampled") {
  Run r = run({"shadow", "--config", "lambda1", "--dir", "e1", "--anchor", "0"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["volume"] == "16/27");
  CHECK(j["engine"] == "exact");

  Run q = run({"shadow", "--config", "lambda2", "--dir", "e1", "--quadrants"});
  Json jq = Json::parse(q.out);
  CHECK(jq["volume"] == "1/3");
  CHECK(jq["quadrants"][0] == "1/12");

  Run m = run({"shadow", "--config", "lambda2", "--dir", "e1", "--mc", "20000", "--seed", "7"});
  Json jm = Json::parse(m.out);
  CHECK(jm["engine"] == "monte-carlo");
  CHECK(jm["samples"] == 20000);
  double est = std::stod(jm["estimate"].get<std::string>());
  double se = std::stod(jm["stderr"].get<std::string>());
  CHECK(std::abs(est - 1.0 / 3.0) <= 4 * se + 1e-9);
}

TEST_CASE("mu command") {
  Run r = run({"mu", "--config", "lambda2", "--dir", "e1"});
  CHECK(Json::parse(r.out)["mu"] == "1/3");
  Run b = run({"mu", "--config", "lambda2", "--dirs", "e1,e2,e3"});
  CHECK(Json::parse(b.out)["mu_bar"] == "29/18");
}

TEST_CASE("bound command") {
  Run r = run({"bound", "--from-mu", "16/27"});
  CHECK(Json::parse(r.out)["bound"] == "45/49");
  Run q = run({"bound", "--from-quadrant", "1/12"});
  CHECK(Json::parse(q.out)["bound"] == "20/21");
  Run m = run({"bound", "--main-theorem"});
  Json jm = Json::parse(m.out);
  CHECK(jm["cubocta"]["bound"]["lo"].get<std::string>().substr(0, 9) == "0.9601527");
  CHECK(jm["tetra"]["bound"]["hi"].get<std::string>().substr(0, 9) == "0.3840610");
}

TEST_CASE("constants command") {
  Run r = run({"constants", "--name", "alpha"});
  Json j = Json::parse(r.out);
  CHECK(j["alpha"]["value"]["lo"].get<std::string>().substr(0, 9) == "0.7223517");
  Run bad = run({"constants", "--name", "not_a_constant"});
  CHECK(bad.code == 2);
}

TEST_CASE("verify command writes verdicts and a csv sidecar") {
  Run r = run({"verify", "--case", "lem42", "--grid", "1/25", "--out", "/tmp/lem42.csv"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["verdicts"][0]["case"] == "lem42");
  std::ifstream csv("/tmp/lem42.csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "case,params,value,margin");
  size_t lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  CHECK(lines > 100);
}

TEST_CASE("exit codes") {
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"vol", "--body", "dodecahedron"}).code == 2);
  CHECK(run({"mu", "--config", "lambda2"}).code == 2);  // missing direction
  CHECK(run({"density", "--lattice", "/no/such/file.json"}).code == 2);
}

TEST_CASE("byte-identical output for identical inputs") {
  auto once = run({"shadow", "--config", "lambda1", "--dir", "e1"});
  auto twice = run({"shadow", "--config", "lambda1", "--dir", "e1"});
  CHECK(once.out == twice.out);
  auto mc1 = run({"shadow", "--config", "single", "--dir", "e2", "--mc", "5000", "--seed", "11"});
  auto mc2 = run({"shadow", "--config", "single", "--dir", "e2", "--mc", "5000", "--seed", "11"});
  CHECK(mc1.out == mc2.out);
}

TEST_CASE("config files round-trip through the cli") {
  {
    std::ofstream f("/tmp/sp_config.json");
    f << R"({"body": "cubocta", "anchors": [["0","0","0"], ["2","0","0"]]})";
  }
  Run r = run({"shadow", "--config", "/tmp/sp_config.json", "--dir", "e1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  // one front translate touching at the square facet leaves volume 4/3
  CHECK(j["volume"] == "4/3");
  {
    std::ofstream f("/tmp/sp_lattice.json");
    f << R"({"basis": [["2","0","0"], ["1","3/2","3/2"], ["1","-3/2","3/2"]]})";
  }
  Run d = run({"density", "--lattice", "/tmp/sp_lattice.json"});
  CHECK(Json::parse(d.out)["density"] == "20/27");
}
