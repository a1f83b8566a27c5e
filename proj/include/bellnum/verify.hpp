#pragma once

#include "bellnum/exact.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bellnum {

/// Outcome of one verification suite. Only the first counterexample is kept.
struct SuiteResult {
  std::string suite;
  int max_n = 0;
  long passed = 0;
  long failed = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return failed == 0; }

  /// Records one identity check; `describe` is only evaluated on failure.
  template <typename Describe>
  void record(bool holds, Describe&& describe) {
    if (holds) {
      ++passed;
      return;
    }
    ++failed;
    if (!first_failure) {
      first_failure = describe();
    }
  }
};

/// Suite names in run order; "all" runs every one of them.
const std::vector<std::string>& verify_suite_names();

/// Largest max_n a suite accepts. Throws DomainError for unknown names.
int verify_suite_cap(std::string_view suite);

/// Runs one named suite up to max_n (1 <= max_n <= cap). Randomized checks
/// draw from a generator seeded with `seed`.
SuiteResult run_verify_suite(std::string_view suite, int max_n, std::uint64_t seed);

/// Runs every suite, each clamped to its own cap.
std::vector<SuiteResult> run_all_verify_suites(int max_n, std::uint64_t seed);

/// Small random rational with numerator in [-9, 9] and denominator in [1, 7].
Rational random_rational(std::mt19937_64& rng);

/// Number of partitions of the integer n into exactly k parts.
ExactInt integer_partitions_exact(int n, int k);

}  // namespace bellnum
