#pragma once

#include "bellnum/combinatorial_tables.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bellnum {

using BellEvaluator = std::function<ExactInt(int, BellMethod)>;

struct BenchTiming {
  BellMethod method;
  std::string value;
  std::int64_t median_ns = 0;
  std::int64_t min_ns = 0;
  int repeats = 0;
};

struct BenchEntry {
  int n = 0;
  std::vector<BenchTiming> timings;
};

struct BenchReport {
  std::string version;
  std::string timestamp;
  int max_n = 0;
  int repeat = 0;
  std::vector<BellMethod> methods;
  bool values_agree = true;
  std::vector<std::string> disagreements;
  std::vector<BenchEntry> entries;
};

/// Times every method on n = 1..max_n: one warm-up call, then `repeat` timed
/// calls on a monotonic clock. Values from the warm-up are compared across
/// methods before any timing is kept; on disagreement the report carries
/// values_agree = false and no timings.
BenchReport run_bench(int max_n, const std::vector<BellMethod>& methods, int repeat,
                      const BellEvaluator& evaluate = bell);

nlohmann::json to_json(const BenchReport& report);

/// Median of a nonempty sample (lower middle element for even sizes).
std::int64_t median_of(std::vector<std::int64_t> samples);

}  // namespace bellnum
