#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cyclokit/cli.hpp"

using namespace cyclokit;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclokit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void check_envelope(const json& r, const std::string& command) {
  CHECK(r.at("command") == command);
  CHECK(r.contains("field"));
  CHECK(r.contains("results"));
  CHECK(r.at("oracle_checked").is_boolean());
  CHECK(r.at("mismatches").is_array());
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze F_23, n = 16") {
  Run r = run({"analyze", "--field", "q:23", "--n", "16"});
  REQUIRE(r.code == kExitOk);
  json j = r.report();
  check_envelope(j, "analyze");
  const json& res = j["results"];
  CHECK(res["quadratic"] == true);
  CHECK(res["n_F"] == 2);
  CHECK(res["order"] == 8);
  CHECK(res["t"] == 16);
  CHECK(res["minpoly"]["case"] == "two_high_minus");
  CHECK(res["minpoly"]["yogh"] == 7);
  CHECK(res["minpoly"]["norm_symbolic"] == "-1");
  CHECK(res["minpoly"]["norm_concrete"]["int"] == 22);
  CHECK(res["kappa"]["branch"] == "minus");
  CHECK(res["generator"]["kind"] == "radical");
  CHECK(j["oracle_checked"] == true);
  CHECK(j["mismatches"].empty());
}

TEST_CASE("analyze Q, n = 4") {
  Run r = run({"analyze", "--field", "Q", "--n", "4"});
  REQUIRE(r.code == kExitOk);
  json res = r.report()["results"];
  CHECK(res["minpoly"]["case"] == "radical");
  CHECK(res["minpoly"]["yogh"] == 3);
  CHECK(res["minpoly"]["trace_concrete"]["int"] == 0);
  CHECK(res["minpoly"]["norm_concrete"]["int"] == 1);
  CHECK(res["quad_class"]["squarefree"] == -1);
}

TEST_CASE("analyze reports degree above two") {
  Run r = run({"analyze", "--field", "q:5", "--n", "7"});
  REQUIRE(r.code == kExitOk);
  json res = r.report()["results"];
  CHECK(res["quadratic"] == false);
  CHECK(res["degree"] == 6);
  CHECK_FALSE(res.contains("minpoly"));
}

TEST_CASE("analyze in characteristic 2") {
  Run r = run({"analyze", "--field", "q:2", "--n", "3"});
  REQUIRE(r.code == kExitOk);
  json res = r.report()["results"];
  CHECK(res["generator"]["kind"] == "artin_schreier");
  CHECK(res["quad_class"]["trace_bit"] == 1);
}

TEST_CASE("moduli commands") {
  Run a = run({"moduli", "--field", "q:5"});
  REQUIRE(a.code == kExitOk);
  json ra = a.report();
  check_envelope(ra, "moduli");
  CHECK(ra["results"]["presentation"] == "mu(24) - mu(4)");
  CHECK(ra["results"]["cardinality"] == 20);
  CHECK(ra["results"]["classes"].size() == 1);
  CHECK(ra["oracle_checked"] == true);

  Run b = run({"moduli", "--field", "Q"});
  REQUIRE(b.code == kExitOk);
  json rb = b.report()["results"];
  CHECK(rb["classes"].size() == 2);
  CHECK(rb["cardinality"] == 6);
  for (const auto& c : rb["classes"]) {
    CHECK(c.contains("primes"));
    CHECK(c.contains("representative_n"));
    CHECK(c.contains("minpoly"));
  }

  Run c = run({"moduli", "--field", "q:23", "--prime", "2"});
  REQUIRE(c.code == kExitOk);
  json rc = c.report()["results"];
  CHECK(rc["presentation"] == "mu(16) - mu(2)");
  CHECK(rc["c2"] == 4);
  CHECK(rc["nu"] == 4);
}

TEST_CASE("verify commands") {
  for (auto [field, max_n] : std::vector<std::pair<std::string, std::string>>{
           {"q:23", "528"}, {"q:5", "24"}, {"q:4", "15"}}) {
    Run r = run({"verify", "--field", field, "--max-n", max_n});
    CHECK_MESSAGE(r.code == kExitOk, field << " " << r.err);
    json j = r.report();
    check_envelope(j, "verify");
    CHECK(j["mismatches"].empty());
    CHECK(j["results"]["mismatch_count"] == 0);
  }
}

TEST_CASE("classify command") {
  Run r = run({"classify", "--field", "q:23"});
  REQUIRE(r.code == kExitOk);
  json res = r.report()["results"];
  CHECK(res["c2"] == 4);
  CHECK(res["s_max"].size() == 1);
  CHECK(res["quad_moduli"]["separable_classes"] == 1);
  Run q = run({"classify", "--field", "Q"});
  REQUIRE(q.code == kExitOk);
  CHECK(q.report()["results"]["s_max"].size() == 2);
  CHECK(q.report()["results"]["c2"].is_null());
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "--field", "q:23"}).code == kExitParse);
  CHECK(run({"analyze", "--field", "q:6", "--n", "3"}).code == kExitParse);
  CHECK(run({"analyze", "--field", "F5", "--n", "3"}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"analyze", "--field", "q:5", "--n", "10"}).code == kExitPrecondition);
  CHECK(run({"verify", "--field", "Q"}).code == kExitPrecondition);
  CHECK(run({"moduli", "--field", "q:5", "--prime", "5"}).code == kExitPrecondition);
  CHECK(run({"verify", "--field", "q:1031"}).code == kExitSizeBound);
}

TEST_CASE("output is stable") {
  Run a = run({"classify", "--field", "q:9"});
  Run b = run({"classify", "--field", "q:9"});
  CHECK(a.out == b.out);
  CHECK(json::accept(a.out));
}

}  // TEST_SUITE
