#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "modunits/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = modunits::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("torsion for p = 5, n = 1") {
  const auto r = run({"torsion", "--p", "5", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Z/2 (unconditional)") != std::string::npos);
}

TEST_CASE("class group as JSON") {
  const auto j = run_json({"class-group", "--p", "11", "--n", "1"});
  CHECK(j["invariant_factors"] == nlohmann::json::array({5}));
  CHECK(j["order"] == "5");
  CHECK(j["certified"] == true);
}

TEST_CASE("cusps of level 1") {
  const auto j = run_json({"cusps", "1"});
  CHECK(j["cusps"].size() == 1);
  CHECK(run({"cusps", "1"}).code == 0);
}

TEST_CASE("every command emits parseable, deterministic JSON") {
  const std::vector<std::vector<std::string>> cmds = {
      {"cusps", "25"},
      {"eta-check", "eta(1)^-6 * eta(5)^6", "--level", "5"},
      {"divisor", "eta(1)^-12*eta(11)^12", "--level", "11"},
      {"class-group", "--N", "12"},
      {"matrices", "--p", "5", "--n", "3"},
      {"leading-coeffs", "--p", "5", "--n", "2"},
      {"delta", "--p", "5", "--n", "3"},
      {"torsion", "--pq", "13", "37"},
      {"pq", "--p", "13", "--q", "37"},
      {"verify", "--suite", "2"},
  };
  for (auto args : cmds) {
    CAPTURE(args[0]);
    args.push_back("--json");
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(nlohmann::json::parse(j.dump()) == j);
    // Text output as well.
    args.pop_back();
    CHECK(run(args).code == 0);
  }
}

TEST_CASE("usage and scope errors exit with 2") {
  CHECK(run({"torsion", "--p", "2", "--n", "1"}).code == 2);
  CHECK(run({"class-group", "--p", "3", "--n", "2"}).code == 2);
  CHECK(run({"eta-check", "eta(1)^(", "--level", "5"}).code == 2);
  CHECK(run({"divisor", "eta(1)*eta(2)^-1", "--level", "2"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"class-group", "--p", "5"}).code == 2);
  CHECK(run({"torsion", "--pq", "13", "37", "--p", "5"}).code == 2);
  const auto r = run({"cusps", "0"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("class-group") != std::string::npos);
}
