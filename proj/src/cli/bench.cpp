#include "bellnum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#ifndef BELLNUM_VERSION
#define BELLNUM_VERSION "unknown"
#endif

namespace bellnum {
namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Keeps the optimizer from discarding a timed computation.
void consume(const ExactInt& value) {
  static volatile std::size_t sink = 0;
  sink = sink + mpz_size(value.get_mpz_t());
}

}  // namespace

std::int64_t median_of(std::vector<std::int64_t> samples) {
  const auto middle = samples.begin() + static_cast<std::ptrdiff_t>((samples.size() - 1) / 2);
  std::nth_element(samples.begin(), middle, samples.end());
  return *middle;
}

BenchReport run_bench(int max_n, const std::vector<BellMethod>& methods, int repeat,
                      const BellEvaluator& evaluate) {
  if (max_n < 1) {
    throw DomainError("bench needs max-n >= 1");
  }
  if (repeat < 3) {
    throw DomainError("bench needs repeat >= 3");
  }
  if (methods.empty()) {
    throw DomainError("bench needs at least one method");
  }
  if (max_n > kEnumerationMaxN &&
      std::find(methods.begin(), methods.end(), BellMethod::enumerate) != methods.end()) {
    throw DomainError("bench with enumerate is limited to max-n <= " +
                      std::to_string(kEnumerationMaxN));
  }

  BenchReport report;
  report.version = BELLNUM_VERSION;
  report.timestamp = utc_timestamp();
  report.max_n = max_n;
  report.repeat = repeat;
  report.methods = methods;

  for (int n = 1; n <= max_n; ++n) {
    BenchEntry entry;
    entry.n = n;
    for (BellMethod method : methods) {
      BenchTiming timing;
      timing.method = method;
      timing.value = to_string(evaluate(n, method));  // warm-up
      entry.timings.push_back(std::move(timing));
    }
    for (const BenchTiming& timing : entry.timings) {
      if (timing.value != entry.timings.front().value) {
        report.values_agree = false;
        report.disagreements.push_back(
            "n=" + std::to_string(n) + ": " + std::string(to_string(timing.method)) + "=" +
            timing.value + " vs " + std::string(to_string(entry.timings.front().method)) + "=" +
            entry.timings.front().value);
      }
    }
    report.entries.push_back(std::move(entry));
  }
  if (!report.values_agree) {
    return report;
  }

  using clock = std::chrono::steady_clock;
  for (BenchEntry& entry : report.entries) {
    for (BenchTiming& timing : entry.timings) {
      std::vector<std::int64_t> samples;
      samples.reserve(static_cast<std::size_t>(repeat));
      for (int r = 0; r < repeat; ++r) {
        const auto start = clock::now();
        const ExactInt value = evaluate(entry.n, timing.method);
        const auto stop = clock::now();
        consume(value);
        samples.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      timing.repeats = repeat;
      timing.min_ns = *std::min_element(samples.begin(), samples.end());
      timing.median_ns = median_of(std::move(samples));
    }
  }
  return report;
}

nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json methods = nlohmann::json::array();
  for (BellMethod method : report.methods) {
    methods.push_back(std::string(to_string(method)));
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const BenchEntry& entry : report.entries) {
    nlohmann::json timings = nlohmann::json::array();
    for (const BenchTiming& timing : entry.timings) {
      nlohmann::json item = {{"method", std::string(to_string(timing.method))},
                             {"value", timing.value}};
      if (report.values_agree) {
        item["median_ns"] = timing.median_ns;
        item["min_ns"] = timing.min_ns;
        item["repeats"] = timing.repeats;
      }
      timings.push_back(std::move(item));
    }
    nlohmann::json row = {{"n", entry.n}, {"timings", std::move(timings)}};
    if (report.values_agree) {
      row["value"] = entry.timings.front().value;
    }
    entries.push_back(std::move(row));
  }
  return {
      {"report", "bell-bench"},
      {"environment",
       {{"version", report.version}, {"timestamp", report.timestamp}, {"clock", "steady_clock"}}},
      {"max_n", report.max_n},
      {"repeat", report.repeat},
      {"methods", std::move(methods)},
      {"values_agree", report.values_agree},
      {"disagreements", report.disagreements},
      {"entries", std::move(entries)},
  };
}

}  // namespace bellnum
