#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "majorana/errors.hpp"
#include "majorana/verification.hpp"

using namespace majorana;

namespace {

const CheckResult& find(const VerificationReport& r, const std::string& id) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.id == id; });
  REQUIRE(it != r.checks.end());
  return *it;
}

CheckSpec dummy(std::string id, std::string anchor, double tol = 1e-12) {
  return {std::move(id), std::move(anchor), "spin-half", tol, Expectation::Vanish,
          [](const SuiteContext&, std::mt19937_64&) { return CheckOutcome{}; }};
}

}  // namespace

TEST_CASE("registry is valid and covers every group") {
  const auto& reg = check_registry();
  CHECK(reg.size() >= 30);
  for (const std::string group : {"spin-half", "symmetry", "dynamics", "spin-one"}) {
    CHECK(std::any_of(reg.begin(), reg.end(), [&](const CheckSpec& s) { return s.group == group; }));
  }
  for (const auto& s : reg) {
    CHECK(s.id.rfind(s.group + ".", 0) == 0);
    CHECK(s.anchor.find("Eq") == std::string::npos);
  }
}

TEST_CASE("registry validation rejects bad specs") {
  CHECK_NOTHROW(validate_registry({dummy("a", "x"), dummy("b", "y")}));
  CHECK_THROWS_AS(validate_registry({dummy("a", "x"), dummy("a", "y")}), std::logic_error);
  CHECK_THROWS_AS(validate_registry({dummy("a", "x"), dummy("b", "x")}), std::logic_error);
  CHECK_THROWS_AS(validate_registry({dummy("a", "")}), std::logic_error);
  CHECK_THROWS_AS(validate_registry({dummy("", "x")}), std::logic_error);
  CHECK_THROWS_AS(validate_registry({dummy("a", "x", 0.0)}), std::logic_error);
}

TEST_CASE("run_suite argument errors") {
  CHECK_THROWS_AS(run_suite("nope", 1, 10), UsageError);
  CHECK_THROWS_AS(run_suite("all", 1, 0), UsageError);
  SuiteOptions bad;
  bad.forced_convention = 3;
  CHECK_THROWS_AS(run_suite("dynamics", 1, 5, bad), UsageError);
}

TEST_CASE("full suite passes with seed 1 and 100 samples") {
  const auto r = run_suite("all", 1, 100);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
  CHECK(r.summary.total == r.checks.size());
  CHECK(r.summary.passed + r.summary.failed == r.summary.total);
  CHECK(r.all_passed());
  CHECK(r.convention == 1);
  CHECK(r.checks.size() >= 30);
}

TEST_CASE("suites select their group") {
  const auto r = run_suite("spin-one", 2, 10);
  CHECK(std::all_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.id.rfind("spin-one.", 0) == 0; }));
  CHECK(find(r, "spin-one.c-squared-minus-one").pass);
  const auto& none = find(r, "spin-one.sc-no-solution");
  CHECK(none.pass);
  CHECK(none.residual > 0.1);
}

TEST_CASE("convention is stable across sample counts") {
  CHECK(run_suite("all", 1, 1).convention == run_suite("dynamics", 1, 100).convention);
}

TEST_CASE("forced wrong convention fails the dynamics suite") {
  SuiteOptions o;
  o.forced_convention = -1;
  const auto r = run_suite("dynamics", 1, 20, o);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(find(r, "dynamics.convention").pass);
  CHECK(r.convention == -1);
  o.forced_convention = 1;
  CHECK(run_suite("dynamics", 1, 20, o).all_passed());
}

TEST_CASE("reports are deterministic") {
  const auto a = run_suite("symmetry", 9, 15);
  const auto b = run_suite("symmetry", 9, 15);
  CHECK(a == b);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("diff_reports") {
  const auto a = run_suite("dynamics", 1, 10);
  CHECK(diff_reports(a, a).empty());
  CHECK(diff_reports(a, run_suite("dynamics", 2, 10)).empty());

  auto flipped = a;
  for (auto& c : flipped.checks) {
    if (c.id != "dynamics.convention") continue;
    for (auto& [k, v] : c.constants)
      if (k == "frequency_sign") v = -1LL;
  }
  CHECK(diff_reports(a, flipped) == std::vector<std::string>{"dynamics.convention"});

  auto failed = a;
  failed.checks.front().pass = false;
  CHECK(diff_reports(a, failed) == std::vector<std::string>{a.checks.front().id});

  CHECK_THROWS_AS(diff_reports(a, run_suite("spin-one", 1, 2)), UsageError);
}

TEST_CASE("json round trip") {
  auto r = run_suite("spin-half", 3, 7);
  CHECK(report_from_json(report_to_json(r)) == r);
  // a check that threw carries an infinite residual, encoded as null
  r.checks.front().residual = std::numeric_limits<double>::infinity();
  r.checks.front().constants.emplace_back("error", std::string("boom"));
  r.checks.front().constants.emplace_back("count", 3LL);
  r.checks.front().constants.emplace_back("phase", Complex(0.25, -1.5));
  CHECK(report_from_json(report_to_json(r)) == r);
  CHECK_THROWS_AS(report_from_json("{"), UsageError);
  CHECK_THROWS_AS(report_from_json("{\"suite\": \"all\"}"), UsageError);
}

TEST_CASE("text report") {
  const auto r = run_suite("spin-one", 1, 3);
  const auto text = report_to_text(r);
  CHECK(text.find("suite spin-one  seed 1  samples 3  convention +1") == 0);
  CHECK(text.find("PASS  spin-one.c-squared-minus-one") != std::string::npos);
  CHECK(text.find(std::to_string(r.summary.passed) + " passed, 0 failed") != std::string::npos);
}
