#include <doctest.h>

#include "qstack/error.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

TEST_SUITE("verify") {
  TEST_CASE("each suite passes on a small run") {
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      const auto r = run_suite(name, SuiteConfig{21, 12});
      CHECK(r.ok());
      CHECK(r.cases > 0);
      CHECK(r.violations == 0);
    }
  }

  TEST_CASE("results are deterministic") {
    const auto a = to_json(run_suite("moment-map", SuiteConfig{5, 20}));
    const auto b = to_json(run_suite("moment-map", SuiteConfig{5, 20}));
    CHECK(a == b);
  }

  TEST_CASE("exhaustive variants") {
    CHECK(verify_chain_coherence_exhaustive(2, 1, 2).ok());
    CHECK(verify_higgs_exhaustive(1, 2).ok());
  }

  TEST_CASE("bookkeeping") {
    SuiteResult r;
    r.record(true, "a");
    r.record_soft(false, "b");
    r.required = 1;
    CHECK(r.cases == 2);
    CHECK(r.ok());
    r.record(false, "c");
    CHECK_FALSE(r.ok());
    CHECK(r.failures.size() == 2);
    CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), Error);
  }
}
