#include "so32/errors.hpp"
#include "so32/io.hpp"
#include "so32/verify.hpp"
#include "support.hpp"

using namespace so32;

TEST_SUITE("verify") {
  TEST_CASE("every suite passes at the default parameters") {
    for (const std::string& suite : suite_names()) {
      CAPTURE(suite);
      const VerifyReport report = run_suite(suite, {});
      CHECK_FALSE(report.checks.empty());
      for (const CheckRecord& r : report.checks) {
        CAPTURE(r.id);
        CHECK(r.pass);
        CHECK(r.max_deviation <= r.tolerance);
      }
      CHECK(report.pass());
    }
  }

  TEST_CASE("suite names") {
    CHECK(suite_names() == std::vector<std::string>{"algebra", "casimir", "diffops", "orthogonality", "parseval", "sphere"});
    CHECK(is_suite("all"));
    CHECK_FALSE(is_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope", {}), UsageError);
  }

  TEST_CASE("the combined run prefixes ids and keeps suite order") {
    const VerifyReport all = run_suite("all", {});
    REQUIRE_FALSE(all.checks.empty());
    CHECK(all.checks.front().id.rfind("algebra/", 0) == 0);
    CHECK(all.checks.back().id.rfind("sphere/", 0) == 0);
    CHECK(all.pass());
  }

  TEST_CASE("casimir report carries the observed eigenvalue") {
    VerifyOptions o;
    o.l_max = 10;
    o.tol = 1e-10;
    const VerifyReport r = run_suite("casimir", o);
    bool seen = false;
    for (const CheckRecord& c : r.checks)
      if (c.id.find("so32") != std::string::npos && c.observed) {
        CHECK(*c.observed == doctest::Approx(-1.25).epsilon(1e-12));
        seen = true;
      }
    CHECK(seen);
    CHECK(r.pass());
  }

  TEST_CASE("tolerance override reaches numerical checks") {
    VerifyOptions o;
    o.tol = 1e-30;
    const VerifyReport r = run_suite("casimir", o);
    CHECK_FALSE(r.pass());
  }

  TEST_CASE("reports are deterministic") {
    const std::string a = io::dump(io::to_json(run_suite("parseval", {})));
    const std::string b = io::dump(io::to_json(run_suite("parseval", {})));
    CHECK(a == b);
  }

  TEST_CASE("report layout") {
    const io::json j = io::to_json(run_suite("orthogonality", {}));
    CHECK(j["tool"] == "so32");
    CHECK(j["suite"] == "orthogonality");
    CHECK(j["parameters"]["lmax"] == 12);
    CHECK(j["pass"] == true);
    const io::json& first = j["checks"][0];
    for (const char* key : {"id", "anchor", "max_deviation", "tolerance", "validity_l_max", "pass"})
      CHECK(first.contains(key));
  }
}
