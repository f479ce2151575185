#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsfact/cli.hpp"
#include "hsfact/report.hpp"

using hsfact::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("box") {
  const auto o = call({"box", "--mu", "2,1"});
  REQUIRE(o.code == 0);
  const auto j = json::parse(o.out);
  CHECK(j["command"] == "box");
  CHECK(j["results"]["count"] == 4);
  CHECK(j["status"] == "pass");
  CHECK(j.contains("timing"));
}

TEST_CASE("factorize") {
  const auto o = call({"factorize", "--mu", "1,0", "--power", "2"});
  REQUIRE(o.code == 0);
  const auto j = json::parse(o.out);
  CHECK(j["results"]["certificate"]["coefficients"].size() == 2);
  CHECK(j["results"]["certificate"]["residual_empty"] == true);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("factorize below the threshold reports a residual") {
  const auto o = call({"factorize", "--mu", "1,0", "--power", "1"});
  REQUIRE(o.code == 0);
  CHECK(json::parse(o.out)["results"]["certificate"]["residual_empty"] == false);
}

TEST_CASE("paths and dims") {
  CHECK(call({"paths", "--mu", "2,1", "--nu", "1,0"}).code == 0);
  CHECK(call({"dims", "--mu", "1", "--m", "3"}).code == 0);
  CHECK(call({"kernel", "--mu", "1", "--m", "3", "--degree", "2"}).code == 0);
}

TEST_CASE("verify suites") {
  CHECK(call({"verify", "theorem", "--mu", "1", "--m", "3", "--power", "2", "--degree", "4"}).code == 0);
  CHECK(call({"verify", "box", "--rank", "2", "--max-entry", "2"}).code == 0);
  CHECK(call({"verify", "identities", "--mu", "1", "--m", "3", "--degree", "2"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(call({"box", "--mu"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"verify", "nonsense"}).code == 2);
  CHECK(call({"dims", "--mu", "1", "--m", "4"}).code == 2);
  CHECK(call({"factorize", "--mu", "1,2"}).code == 2);
  CHECK(call({"dims", "--mu", "2,1", "--m", "5", "--cap", "10"}).code == 3);
}

TEST_CASE("json output is deterministic apart from timing") {
  const std::vector<std::string> args{"factorize", "--mu", "2,1", "--power", "3"};
  auto a = json::parse(call(args).out);
  auto b = json::parse(call(args).out);
  a.erase("timing");
  b.erase("timing");
  CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("--json writes a file and prints a table") {
  const std::string path = "test_cli_report.json";
  const auto o = call({"box", "--mu", "1,1", "--json", path});
  REQUIRE(o.code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  const auto j = json::parse(in);
  CHECK(j["command"] == "box");
  CHECK_FALSE(o.out.empty());
  CHECK(o.out.front() != '{');
  std::remove(path.c_str());
}

TEST_CASE("a failed check marks the report failed") {
  hsfact::Report r;
  r.command = "box";
  r.check("always", true);
  CHECK(r.pass());
  CHECK(r.to_json()["status"] == "pass");
  r.check("never", false);
  CHECK_FALSE(r.pass());
  CHECK(r.to_json(false)["status"] == "fail");
  CHECK_FALSE(r.to_json(false).contains("timing"));
}
