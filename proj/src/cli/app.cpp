#include "bellnum/cli.hpp"

#include "bellnum/bell_polynomials.hpp"
#include "bellnum/power_series.hpp"
#include "bellnum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace bellnum {
namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CrossCheckError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  return OutputFormat::plain;
}

BellMethod require_bell_method(const std::string& text) {
  const auto method = parse_bell_method(text);
  if (!method) {
    throw UsageError("unknown method '" + text +
                     "' (expected classic, lah-stirling, triangle or enumerate)");
  }
  return *method;
}

struct BellOptions {
  std::optional<int> n;
  std::optional<int> upto;
  std::string method = "classic";
  std::string format = "plain";
};

int cmd_bell(const BellOptions& options, std::ostream& out, const CliHooks& hooks) {
  const BellMethod method = require_bell_method(options.method);
  int first = 0;
  int last = 0;
  if (options.n) {
    first = last = *options.n;
  } else if (options.upto) {
    last = *options.upto;
  } else {
    throw UsageError("bell needs --n or --upto");
  }
  if (first < 0 || last < 0) {
    throw UsageError("bell needs n >= 0");
  }
  if (method == BellMethod::enumerate && last > kEnumerationMaxN) {
    throw UsageError("enumerate is limited to n <= " + std::to_string(kEnumerationMaxN));
  }

  std::vector<OutputRecord> records;
  for (int n = first; n <= last; ++n) {
    // The Lah/Stirling sum starts at n = 1; B_0 = 1 by convention.
    const ExactInt value =
        (n == 0 && method == BellMethod::lah_stirling) ? ExactInt(1) : hooks.evaluate(n, method);
    const BellMethod reference =
        method == BellMethod::triangle ? BellMethod::classic : BellMethod::triangle;
    const ExactInt expected = bell(n, reference);
    if (value != expected) {
      throw CrossCheckError("B_" + std::to_string(n) + ": " + std::string(to_string(method)) +
                            " gave " + to_string(value) + " but " +
                            std::string(to_string(reference)) + " gave " + to_string(expected));
    }
    records.push_back({n, std::nullopt, std::string(to_string(method)), to_string(value), {}});
  }
  write_records(out, records, parse_format(options.format));
  return static_cast<int>(ExitCode::ok);
}

struct TableOptions {
  std::string kind;
  int rows = 0;
  std::string method;
  std::string format = "plain";
};

int cmd_table(const TableOptions& options, std::ostream& out) {
  if (options.rows < 1) {
    throw UsageError("table needs --rows >= 1");
  }
  std::string method = options.method;
  std::function<ExactInt(int, int)> entry;
  TriangleTable lah_table(TriangleTable::Kind::lah);
  if (options.kind == "stirling2") {
    if (method.empty()) method = "recurrence";
    if (method == "recurrence") {
      entry = [](int n, int k) { return stirling2_recurrence(n, k); };
    } else if (method == "explicit") {
      entry = [](int n, int k) { return stirling2_explicit(n, k); };
    }
  } else if (options.kind == "lah") {
    if (method.empty()) method = "closed-form";
    if (method == "closed-form") {
      entry = [](int n, int k) { return lah(n, k); };
    } else if (method == "recurrence") {
      entry = [&lah_table](int n, int k) { return lah_table.entry(n, k); };
    }
  } else if (options.kind == "bellpoly-coeffs") {
    if (options.rows > 12) {
      throw UsageError("bellpoly-coeffs is limited to --rows <= 12");
    }
    if (method.empty()) method = "enumerate";
    if (method == "enumerate") {
      entry = [](int n, int k) {
        ExactInt sum = 0;
        for (const PartitionVector& vector : enumerate_partition_vectors(n, k)) {
          sum += partition_coefficient(vector);
        }
        return sum;
      };
    }
  } else {
    throw UsageError("unknown table kind '" + options.kind +
                     "' (expected stirling2, lah or bellpoly-coeffs)");
  }
  if (!entry) {
    throw UsageError("method '" + method + "' does not apply to table " + options.kind);
  }

  const OutputFormat format = parse_format(options.format);
  std::vector<OutputRecord> records;
  for (int n = 1; n <= options.rows; ++n) {
    std::string line;
    for (int k = 1; k <= n; ++k) {
      const std::string value = to_string(entry(n, k));
      if (format == OutputFormat::plain) {
        line += (k > 1 ? "," : "") + value;
      } else {
        records.push_back({n, k, method, value, {}});
      }
    }
    if (format == OutputFormat::plain) {
      out << line << '\n';
    }
  }
  if (format != OutputFormat::plain) {
    write_records(out, records, format);
  }
  return static_cast<int>(ExitCode::ok);
}

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 10;
  std::uint64_t seed = 0;
  std::string format = "plain";
};

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (options.max_n < 1) {
    throw UsageError("verify needs --max-n >= 1");
  }
  if (options.suite == "all") {
    results = run_all_verify_suites(options.max_n, options.seed);
  } else {
    int cap = 0;
    try {
      cap = verify_suite_cap(options.suite);
    } catch (const DomainError& error) {
      throw UsageError(error.what());
    }
    if (options.max_n > cap) {
      throw UsageError("suite " + options.suite + " accepts --max-n <= " + std::to_string(cap));
    }
    results.push_back(run_verify_suite(options.suite, options.max_n, options.seed));
  }

  bool all_ok = true;
  if (parse_format(options.format) == OutputFormat::json) {
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& result : results) {
      all_ok = all_ok && result.ok();
      nlohmann::json item = {{"suite", result.suite},
                             {"max_n", result.max_n},
                             {"passed", result.passed},
                             {"failed", result.failed}};
      if (result.first_failure) {
        item["first_failure"] = *result.first_failure;
      }
      suites.push_back(std::move(item));
    }
    out << nlohmann::json{{"seed", options.seed}, {"all_passed", all_ok}, {"suites", suites}}.dump(2)
        << '\n';
  } else {
    for (const SuiteResult& result : results) {
      all_ok = all_ok && result.ok();
      out << (result.ok() ? "PASS " : "FAIL ") << result.suite << " (max-n " << result.max_n
          << "): " << result.passed << " passed, " << result.failed << " failed\n";
      if (result.first_failure) {
        out << "  first counterexample: " << *result.first_failure << '\n';
      }
    }
  }
  return static_cast<int>(all_ok ? ExitCode::ok : ExitCode::identity_failure);
}

struct GfOptions {
  int order = 15;
  std::optional<int> k;
  std::string format = "plain";
};

int cmd_gf(const GfOptions& options, std::ostream& out) {
  if (options.order < 1) {
    throw UsageError("gf needs --order >= 1");
  }
  if (options.k && (*options.k < 1 || *options.k > options.order)) {
    throw UsageError("gf needs 1 <= --k <= --order");
  }
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("bell", gf_bell_check(options.order));
  checks.emplace_back("bell-alternating", gf_bell_alternating_check(options.order));
  const int k_first = options.k.value_or(1);
  const int k_last = options.k.value_or(std::min(options.order, 8));
  for (int k = k_first; k <= k_last; ++k) {
    checks.emplace_back("stirling k=" + std::to_string(k), gf_stirling_check(k, options.order));
  }

  bool all_ok = true;
  for (const auto& check : checks) {
    all_ok = all_ok && check.second;
  }
  if (parse_format(options.format) == OutputFormat::json) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& [name, ok] : checks) {
      items.push_back({{"check", name}, {"passed", ok}});
    }
    out << nlohmann::json{{"order", options.order}, {"all_passed", all_ok}, {"checks", items}}.dump(2)
        << '\n';
  } else {
    for (const auto& [name, ok] : checks) {
      out << (ok ? "PASS " : "FAIL ") << "gf " << name << " (order " << options.order << ")\n";
    }
  }
  return static_cast<int>(all_ok ? ExitCode::ok : ExitCode::identity_failure);
}

struct BenchOptions {
  int max_n = 40;
  std::vector<std::string> methods{"classic", "lah-stirling", "triangle"};
  int repeat = 5;
  std::string out = "-";
};

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err,
              const CliHooks& hooks) {
  if (options.repeat < 3) {
    throw UsageError("bench needs --repeat >= 3");
  }
  if (options.max_n < 1) {
    throw UsageError("bench needs --max-n >= 1");
  }
  std::vector<BellMethod> methods;
  for (const std::string& name : options.methods) {
    methods.push_back(require_bell_method(name));
  }
  BenchReport report;
  try {
    report = run_bench(options.max_n, methods, options.repeat, hooks.evaluate);
  } catch (const DomainError& error) {
    throw UsageError(error.what());
  }

  const std::string document = to_json(report).dump(2) + "\n";
  if (options.out == "-") {
    out << document;
  } else {
    std::ofstream file(options.out);
    if (!file) {
      throw UsageError("cannot open '" + options.out + "' for writing");
    }
    file << document;
  }
  if (!report.values_agree) {
    err << "bench: methods disagree: " << report.disagreements.front() << '\n';
    return static_cast<int>(ExitCode::internal_failure);
  }
  return static_cast<int>(ExitCode::ok);
}

}  // namespace

void write_records(std::ostream& out, const std::vector<OutputRecord>& records,
                   OutputFormat format) {
  const bool has_k = std::any_of(records.begin(), records.end(),
                                 [](const OutputRecord& r) { return r.k.has_value(); });
  const bool has_elapsed = std::any_of(records.begin(), records.end(),
                                       [](const OutputRecord& r) { return r.elapsed_ns.has_value(); });
  switch (format) {
    case OutputFormat::plain:
      for (const OutputRecord& record : records) {
        out << record.value << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "n" << (has_k ? ",k" : "") << ",method,value" << (has_elapsed ? ",elapsed_ns" : "")
          << '\n';
      for (const OutputRecord& record : records) {
        out << record.n;
        if (has_k) {
          out << ',' << (record.k ? std::to_string(*record.k) : "");
        }
        out << ',' << record.method << ',' << record.value;
        if (has_elapsed) {
          out << ',' << (record.elapsed_ns ? std::to_string(*record.elapsed_ns) : "");
        }
        out << '\n';
      }
      break;
    case OutputFormat::json: {
      nlohmann::json items = nlohmann::json::array();
      for (const OutputRecord& record : records) {
        nlohmann::json item = {{"n", record.n}, {"method", record.method}, {"value", record.value}};
        if (record.k) item["k"] = *record.k;
        if (record.elapsed_ns) item["elapsed_ns"] = *record.elapsed_ns;
        items.push_back(std::move(item));
      }
      out << nlohmann::json{{"records", std::move(items)}}.dump(2) << '\n';
      break;
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Exact Bell, Stirling and Lah number computations and identity checks",
               args.empty() ? "bellnum" : args.front()};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"plain", "csv", "json"});

  BellOptions bell_options;
  auto* bell_cmd = app.add_subcommand("bell", "Compute Bell numbers");
  auto* n_opt = bell_cmd->add_option("--n", bell_options.n, "Single index n >= 0");
  auto* upto_opt = bell_cmd->add_option("--upto", bell_options.upto, "All indices 0..N");
  n_opt->excludes(upto_opt);
  bell_cmd->add_option("--method", bell_options.method,
                       "classic | lah-stirling | triangle | enumerate")
      ->capture_default_str();
  bell_cmd->add_option("--format", bell_options.format)->check(formats)->capture_default_str();

  TableOptions table_options;
  auto* table_cmd = app.add_subcommand("table", "Print a triangle row by row");
  table_cmd->add_option("kind", table_options.kind, "stirling2 | lah | bellpoly-coeffs")
      ->required();
  table_cmd->add_option("--rows", table_options.rows, "Number of rows")->required();
  table_cmd->add_option("--method", table_options.method,
                        "stirling2: recurrence | explicit; lah: closed-form | recurrence");
  table_cmd->add_option("--format", table_options.format)->check(formats)->capture_default_str();

  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity verification suites");
  verify_cmd->add_option("--suite", verify_options.suite,
                         "theorem | stirling | lah | bellpoly | gf | derivative | proof | all")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_options.max_n)->capture_default_str();
  verify_cmd->add_option("--seed", verify_options.seed, "Seed for randomized checks")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_options.format)
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  GfOptions gf_options;
  auto* gf_cmd = app.add_subcommand("gf", "Check generating-function coefficients");
  gf_cmd->add_option("--order", gf_options.order)->capture_default_str();
  gf_cmd->add_option("--k", gf_options.k, "Only check (e^x-1)^k/k! for this k");
  gf_cmd->add_option("--format", gf_options.format)
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  BenchOptions bench_options;
  auto* bench_cmd = app.add_subcommand("bench", "Time Bell-number methods against each other");
  bench_cmd->add_option("--max-n", bench_options.max_n)->capture_default_str();
  bench_cmd->add_option("--methods", bench_options.methods)->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--repeat", bench_options.repeat)->capture_default_str();
  bench_cmd->add_option("--out", bench_options.out, "Report path, '-' for stdout")
      ->capture_default_str();

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? static_cast<int>(ExitCode::ok) : static_cast<int>(ExitCode::usage);
  }

  try {
    if (bell_cmd->parsed()) return cmd_bell(bell_options, out, hooks);
    if (table_cmd->parsed()) return cmd_table(table_options, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_options, out);
    if (gf_cmd->parsed()) return cmd_gf(gf_options, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_options, out, err, hooks);
  } catch (const UsageError& error) {
    err << "error: " << error.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const DomainError& error) {
    err << "error: " << error.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const CrossCheckError& error) {
    err << "internal cross-check failed: " << error.what() << '\n';
    return static_cast<int>(ExitCode::internal_failure);
  } catch (const InternalError& error) {
    err << "internal error: " << error.what() << '\n';
    return static_cast<int>(ExitCode::internal_failure);
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace bellnum
