#pragma once

#include <string>
#include <vector>

#include "skewps/serialize.hpp"

namespace skewps {

/// Seeded property suites. Every suite is deterministic given (trials,
/// configurations, seed); configuration k draws from Rng(seed).child(k).
struct SuiteOptions {
  int trials = -1;          // samples per configuration; -1: suite default
  int configurations = -1;  // -1: suite default
  uint64_t seed = 0;
};

struct SuiteReport {
  std::string suite;
  std::string property;
  bool passed = true;
  /// The suite encodes a statement that must fail (the unit-shift
  /// counterexample); `passed` is then false and `as_predicted` says whether
  /// it failed exactly as predicted.
  bool expected_failure = false;
  bool as_predicted = false;
  int configurations = 0;
  int trials = 0;
  int failures = 0;
  uint64_t seed = 0;
  std::string detail;   // first failure
  json counterexample;  // first failure's witness
  json data;            // suite-specific summary (tables, counts)
  std::string reproduce;

  json to_json() const;
};

const std::vector<std::string>& suite_names();
/// UnknownSuite for names outside suite_names().
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace skewps
