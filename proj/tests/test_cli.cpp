#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "majorana/cli.hpp"
#include "majorana/verification.hpp"

using namespace majorana;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("majorana_test_" + name)).string();
}

}  // namespace

TEST_CASE("symbolic entries") {
  CHECK(symbolic_entry({0.0, 0.0}) == "0");
  CHECK(symbolic_entry({-1.0, 0.0}) == "-1");
  CHECK(symbolic_entry({0.0, -1.0}) == "-i");
  CHECK(symbolic_entry({0.5, 0.0}) == "(0.5, 0)");
}

TEST_CASE("table") {
  const auto r = cli({"table", "--mass", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sqrt(m/2) = 1\n") == 0);
  CHECK(r.out.find("lambda^S_up   (0, i, 1, 0)") != std::string::npos);
  CHECK(r.out.find("rho^A_up      (1, 0, 0, i)") != std::string::npos);
  CHECK(cli({"table", "--mass", "0"}).code == 2);
  CHECK(cli({"table", "--mass", "2", "--format", "json"}).out.find("\"lambda^S_up\"") != std::string::npos);
}

TEST_CASE("eval") {
  const auto rest = cli({"eval", "--momentum", "0", "0", "0", "--mass", "2", "--family", "lambda", "--kind", "S",
                         "--index", "up", "--format", "json"});
  CHECK(rest.code == 0);
  CHECK(rest.out.find("\"components\"") != std::string::npos);
  CHECK(rest.out.find("\"p_plus\": 2.0") != std::string::npos);

  const auto xi = cli({"eval", "--momentum", "1", "2", "3", "--mass", "2", "--family", "xi"});
  CHECK(xi.code == 0);
  CHECK(xi.out.find("intertwiner residual") != std::string::npos);

  CHECK(cli({"eval", "--momentum", "1", "2", "3", "--mass", "-1"}).code == 2);
  CHECK(cli({"eval", "--momentum", "1", "2", "3", "--family", "tachyon"}).code == 2);
  CHECK(cli({"eval", "--momentum", "1", "2", "3", "--kind", "Q"}).code == 2);
  CHECK(cli({"eval", "--momentum", "1", "2"}).code == 2);
  CHECK(cli({"eval", "--momentum", "0", "0", "0", "--family", "xi"}).code == 2);
}

TEST_CASE("verify and diff") {
  const auto a = temp_path("a.json");
  const auto b = temp_path("b.json");
  const auto c = temp_path("c.json");
  auto r = cli({"verify", "--suite", "dynamics", "--samples", "10", "--format", "json", "--out", a});
  CHECK(r.code == 0);
  CHECK(r.out == "verify dynamics: 15/15 passed, 0 failed\n");
  CHECK(cli({"verify", "--suite", "dynamics", "--samples", "10", "--seed", "4", "--format", "json", "--out", b}).code ==
        0);
  CHECK(cli({"verify", "--suite", "dynamics", "--samples", "10", "--force-convention", "-1", "--format", "json",
             "--out", c})
            .code == 1);

  CHECK(cli({"diff", a, b}).code == 0);
  const auto drift = cli({"diff", a, c});
  CHECK(drift.code == 1);
  CHECK(drift.out.find("dynamics.convention\n") == 0);

  std::ifstream in(a);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(report_from_json(text.str()).suite == "dynamics");

  CHECK(cli({"diff", a}).code == 2);
  CHECK(cli({"diff", a, temp_path("missing.json")}).code == 2);
  for (const auto& p : {a, b, c}) std::remove(p.c_str());
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(cli({"verify", "--samples", "0"}).code == 2);
  CHECK(cli({"verify", "--format", "xml"}).code == 2);
  CHECK(cli({"verify", "--force-convention", "2"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
