#pragma once

#include "bellnum/bench.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bellnum {

/// Stable process exit codes.
enum class ExitCode : int {
  ok = 0,
  identity_failure = 1,
  usage = 2,
  internal_failure = 3,
};

enum class OutputFormat { plain, csv, json };

/// One computed value as printed by `bell` and `table`.
struct OutputRecord {
  int n = 0;
  std::optional<int> k;
  std::string method;
  std::string value;  // exact decimal, never floating point
  std::optional<std::int64_t> elapsed_ns;
};

void write_records(std::ostream& out, const std::vector<OutputRecord>& records,
                   OutputFormat format);

struct CliHooks {
  /// Evaluator used by `bell` and `bench`; tests swap in a faulty one to
  /// exercise the cross-check failure path.
  BellEvaluator evaluate = bell;
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace bellnum
