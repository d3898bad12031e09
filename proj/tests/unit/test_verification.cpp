#include <cmath>

#include "doctest.h"
#include "gupsu2/special_functions.hpp"
#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2/verification.hpp"

using namespace gupsu2;

TEST_CASE("suite names round-trip") {
  for (Suite s : kAllSuites) CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("nope").has_value());
  CHECK_FALSE(parse_suite("").has_value());
}

TEST_CASE("every suite passes") {
  for (const SuiteReport& rep : run_suites(kAllSuites)) {
    CAPTURE(to_string(rep.suite));
    CHECK_FALSE(rep.checks.empty());
    for (const CheckResult& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.measured);
      CHECK(c.passed);
      CHECK(c.measured <= c.tolerance);
    }
    CHECK(rep.passed());
  }
}

TEST_CASE("concurrent and sequential runs agree") {
  const auto a = run_suites(kAllSuites, true, 5);
  const auto b = run_suites(kAllSuites, false, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].suite == kAllSuites[i]);
    REQUIRE(a[i].checks.size() == b[i].checks.size());
    for (std::size_t k = 0; k < a[i].checks.size(); ++k) CHECK(a[i].checks[k].measured == b[i].checks[k].measured);
    CHECK(a[i].notes == b[i].notes);
  }
}

TEST_CASE("normalization suite carries the audit table") {
  const SuiteReport rep = run_suite(Suite::normalization);
  CHECK(rep.notes.size() > 2);
}

TEST_CASE("failed report") {
  SuiteReport rep{Suite::algebra, {{"x", 1.0, 0.5, false, ""}}, {}};
  CHECK_FALSE(rep.passed());
}

TEST_CASE("gegenbauer samples avoid roots") {
  for (unsigned n = 0; n <= 6; ++n) {
    const auto samples = gegenbauer_samples(n, 1.5, 0.5, -5.0, 5.0, 50);
    CHECK(samples.size() >= 25);
    for (double p : samples) {
      CHECK(p != 0.0);
      CHECK(p >= -5.0);
      CHECK(p <= 5.0);
    }
  }
}
