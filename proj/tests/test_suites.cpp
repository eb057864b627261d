#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skewps/errors.hpp"
#include "skewps/suites.hpp"

using namespace skewps;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  for (const char* n : {"lemma-beta", "lemma-gamma", "prop3.4", "prop3.7", "prop3.4-counterexample", "assoc", "leibniz",
                        "compatible", "compat-gate", "ring-axioms", "prop4.3", "prop4.4", "theoremA", "weierstrass",
                        "ideal-poly"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite"), UnknownSuite);
}

TEST_CASE("every suite passes at small sizes") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport r = run_suite(name, {.trials = 3, .configurations = 2, .seed = 9});
    if (r.expected_failure) {
      CHECK_FALSE(r.passed);
      CHECK(r.as_predicted);
    } else {
      CHECK(r.passed);
      CHECK(r.failures == 0);
    }
    CHECK(r.reproduce.find("skewps check " + name) == 0);
  }
}

TEST_CASE("suites are deterministic in the seed") {
  for (const char* name : {"lemma-beta", "assoc", "weierstrass", "prop4.4"}) {
    CAPTURE(name);
    const SuiteOptions o{.trials = 4, .configurations = 3, .seed = 21};
    CHECK(run_suite(name, o).to_json().dump() == run_suite(name, o).to_json().dump());
  }
}

TEST_CASE("the unit-shift counterexample fails exactly as predicted") {
  const SuiteReport r = run_suite("prop3.4-counterexample");
  CHECK(r.expected_failure);
  CHECK_FALSE(r.passed);
  CHECK(r.as_predicted);
}

TEST_CASE("the derivative gate rejects d/dpi") {
  const SuiteReport r = run_suite("compat-gate", {.seed = 1});
  CHECK(r.passed);
}
