#include <sstream>

#include "doctest.h"

#include "contentlab/cli.hpp"
#include "json.hpp"

using namespace contentlab;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("content") {
  const auto r = cli({"content", "--base", "trunc(Z/2,4)", "--alg", "quad(x^3)", "--elem", "y*y"});
  CHECK(r.status == 0);
  CHECK(r.out == "(x^3)\n");
  const auto j = cli({"content", "--base", "trunc(Z/2,4)", "--alg", "quad(x^3)", "--elem", "y", "--json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["content"] == "(1)");
  CHECK(parsed["oracle"] == "(1)");
}

TEST_CASE("check") {
  auto r = cli({"check", "mccoy", "--base", "Z/4", "--alg", "trunc(2)"});
  CHECK(r.status == 0);
  CHECK(r.out == "false; witness f=x, g=x\n");
  r = cli({"check", "mccoy", "--base", "Z/4", "--alg", "id"});
  CHECK(r.out == "true\n");
  r = cli({"check", "residually-mccoy", "--family", "prime", "--base", "trunc(Z/2,4)", "--alg", "quad(x^3)"});
  CHECK(r.out == "false; witness I=(x), f=y, g=y\n");
  r = cli({"check", "property-a", "--base", "Z/12"});
  CHECK(r.out == "true\n");
  r = cli({"check", "mccoy", "--base", "Z/4", "--alg", "trunc(2)", "--expect", "true"});
  CHECK(r.status == 1);
  r = cli({"check", "mccoy", "--base", "Z/4", "--alg", "trunc(2)", "--expect", "false"});
  CHECK(r.status == 0);
  r = cli({"check", "frobnicate", "--base", "Z/4", "--alg", "id"});
  CHECK(r.status == 2);
}

TEST_CASE("analyze") {
  auto r = cli({"analyze", "--base", "Z/4", "--alg", "trunc(2)", "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "contentlab.report/1");
  CHECK(j["verdicts"]["mccoy"] == false);
  CHECK(j["witnesses"]["mccoy"] == "f=x, g=x");
  r = cli({"analyze", "--base", "Z/12", "--alg", "trunc(3)", "--max-alg", "100"});
  CHECK(r.status == 2);
}

TEST_CASE("suites") {
  auto r = cli({"verify-theorems", "--moduli", "2,3,4", "--depths", "2,3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("0 violations / ") != std::string::npos);
  r = cli({"verify-example1", "--depth", "4"});
  CHECK(r.status == 0);
  r = cli({"verify-example1", "--depth", "3"});
  CHECK(r.status == 2);
  CHECK(r.err.find("degenerate-depth") != std::string::npos);
  r = cli({"search", "--predicate", "!mccoy", "--moduli", "2", "--no-composites"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("found: ", 0) == 0);
  r = cli({"search", "--predicate", "weak_content & !semicontent", "--moduli", "2,4"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("absent", 0) == 0);
}

TEST_CASE("usage and parse errors") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"content", "--base", "Z/4"}).status == 2);
  const auto r = cli({"content", "--base", "trunc(Z/0,2)", "--alg", "id", "--elem", "1"});
  CHECK(r.status == 2);
  CHECK(r.err.find("position 8") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(cli({"--help"}).status == 0);
}
