#include "bellnum/verify.hpp"

#include "bellnum/bell_polynomials.hpp"
#include "bellnum/combinatorial_tables.hpp"
#include "bellnum/lah_derivative.hpp"
#include "bellnum/power_series.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace bellnum {
namespace {

constexpr int kScalingTrialsPerCell = 20;
constexpr int kFaaDiBrunoTrials = 5;

std::string describe_values(std::string_view what, int n, std::optional<int> k,
                            const std::vector<std::pair<std::string, std::string>>& values) {
  std::ostringstream os;
  os << what << " at n=" << n;
  if (k) {
    os << " k=" << *k;
  }
  for (const auto& [label, value] : values) {
    os << " " << label << "=" << value;
  }
  return os.str();
}

// Runs `check`, turning an InternalError (failed exactness assertion) into a
// recorded failure instead of aborting the suite.
template <typename Check, typename Describe>
void guarded(SuiteResult& result, Check&& check, Describe&& describe) {
  try {
    result.record(check(), describe);
  } catch (const InternalError& error) {
    result.record(false, [&] { return describe() + " (" + error.what() + ")"; });
  }
}

void theorem_suite(SuiteResult& result) {
  const int max_n = result.max_n;
  const std::vector<ExactInt> batch = bell_lah_stirling_upto(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const ExactInt lah_stirling = bell_lah_stirling(n);
    const ExactInt classic = bell_classic(n);
    const ExactInt triangle = bell_triangle(n);
    result.record(lah_stirling == classic && classic == triangle &&
                      batch[static_cast<std::size_t>(n - 1)] == classic,
                  [&] {
                    return describe_values("Bell methods disagree", n, std::nullopt,
                                           {{"lah-stirling", to_string(lah_stirling)},
                                            {"classic", to_string(classic)},
                                            {"triangle", to_string(triangle)},
                                            {"batch", to_string(batch[n - 1])}});
                  });
  }
  for (int n = 0; n <= std::min(max_n, kEnumerationMaxN); ++n) {
    const ExactInt counted = bell_enumeration_oracle(n);
    const ExactInt classic = bell_classic(n);
    result.record(counted == classic && counted == bell_triangle(n), [&] {
      return describe_values("partition count mismatch", n, std::nullopt,
                             {{"enumerate", to_string(counted)}, {"classic", to_string(classic)}});
    });
  }
}

void stirling_suite(SuiteResult& result) {
  const int max_n = result.max_n;
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<ExactInt> row = stirling2_row(n);
    for (int k = 1; k <= n; ++k) {
      guarded(
          result,
          [&] {
            const ExactInt explicit_value = stirling2_explicit(n, k);
            return explicit_value == stirling2_recurrence(n, k) && explicit_value == row[k] &&
                   explicit_value > 0;
          },
          [&] {
            return describe_values("S(n,k) mismatch", n, k,
                                   {{"recurrence", to_string(stirling2_recurrence(n, k))},
                                    {"row", to_string(row[k])}});
          });
    }
  }
}

void lah_suite(SuiteResult& result) {
  const int max_n = result.max_n;
  TriangleTable table(TriangleTable::Kind::lah);
  for (int n = 1; n <= max_n; ++n) {
    result.record(lah(n, 1) == factorial(n) && lah(n, n) == 1, [&] {
      return describe_values("Lah edge values", n, std::nullopt,
                             {{"L(n,1)", to_string(lah(n, 1))}, {"L(n,n)", to_string(lah(n, n))}});
    });
    for (int k = 1; k <= n; ++k) {
      const ExactInt closed = lah(n, k);
      result.record(closed == table.entry(n, k) && closed > 0, [&] {
        return describe_values("Lah closed form vs table", n, k,
                               {{"closed", to_string(closed)},
                                {"table", to_string(table.entry(n, k))}});
      });
      if (n + 1 <= max_n) {
        const ExactInt left = k >= 2 ? lah(n, k - 1) : ExactInt(0);
        const ExactInt next = lah(n + 1, k);
        result.record(next == (n + k) * closed + left, [&] {
          return describe_values("Lah recurrence", n + 1, k, {{"closed", to_string(next)}});
        });
      }
    }
  }
  for (int n = 1; n <= std::min(max_n, 12); ++n) {
    result.record(lah_connection_check(n), [&] {
      return describe_values("rising/falling factorial connection", n, std::nullopt, {});
    });
  }
}

TruncatedSeries taylor_without_constant(std::span<const Rational> derivs, int order) {
  TruncatedSeries series(order);
  for (int j = 1; j <= order; ++j) {
    series[j] = derivs[static_cast<std::size_t>(j - 1)] / Rational(factorial(j));
  }
  return series;
}

void bellpoly_suite(SuiteResult& result, std::uint64_t seed) {
  const int max_n = result.max_n;
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto vectors = enumerate_partition_vectors(n, k);
      const bool structurally_valid =
          std::all_of(vectors.begin(), vectors.end(),
                      [](const PartitionVector& v) { return v.satisfies_constraints(); });
      result.record(structurally_valid && ExactInt(static_cast<unsigned long>(vectors.size())) ==
                                              integer_partitions_exact(n, k),
                    [&] {
                      return describe_values("partition vector count", n, k,
                                             {{"count", std::to_string(vectors.size())}});
                    });
      guarded(
          result, [&] { return bell_poly_ones_is_stirling(n, k); },
          [&] { return describe_values("B_{n,k}(1,...,1) != S(n,k)", n, k, {}); });
    }
  }
  for (int n = 1; n <= std::min(max_n, 10); ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int trial = 0; trial < kScalingTrialsPerCell; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        std::vector<Rational> xs;
        for (int i = 0; i < n - k + 1; ++i) {
          xs.push_back(random_rational(rng));
        }
        result.record(bell_poly_scaling_check(n, k, a, b, xs), [&] {
          return describe_values("scaling identity", n, k,
                                 {{"a", to_string(a)}, {"b", to_string(b)}});
        });
      }
    }
  }
  for (int n = 1; n <= std::min(max_n, 10); ++n) {
    for (int trial = 0; trial < kFaaDiBrunoTrials; ++trial) {
      std::vector<Rational> f_derivs;
      std::vector<Rational> h_derivs;
      for (int i = 0; i < n; ++i) {
        f_derivs.push_back(random_rational(rng));
        h_derivs.push_back(random_rational(rng));
      }
      const Rational formula = faa_di_bruno_nth_derivative(f_derivs, h_derivs, n);
      const TruncatedSeries composed =
          ps_compose(taylor_without_constant(f_derivs, n), taylor_without_constant(h_derivs, n));
      const Rational from_series = Rational(factorial(n)) * composed[n];
      result.record(formula == from_series, [&] {
        return describe_values("Faa di Bruno vs series composition", n, std::nullopt,
                               {{"formula", to_string(formula)},
                                {"series", to_string(from_series)}});
      });
    }
  }
}

void gf_suite(SuiteResult& result) {
  const int order = result.max_n;
  result.record(gf_bell_check(order), [&] {
    return describe_values("exp(e^x-1) coefficients", order, std::nullopt, {});
  });
  result.record(gf_bell_alternating_check(order), [&] {
    return describe_values("exp(e^-x-1) coefficients", order, std::nullopt, {});
  });
  for (int k = 1; k <= std::min(order, 8); ++k) {
    result.record(gf_stirling_check(k, order), [&] {
      return describe_values("(e^x-1)^k/k! coefficients", order, k, {});
    });
  }
  std::vector<Rational> exp_coeffs;
  for (int j = 0; j <= order; ++j) {
    exp_coeffs.push_back(make_rational(ExactInt(1), factorial(j)));
  }
  const TruncatedSeries inner = TruncatedSeries::exp_minus_one(order);
  result.record(ps_compose(TruncatedSeries(exp_coeffs), inner) == ps_exp(inner), [&] {
    return describe_values("exp composed with e^x-1 vs ps_exp", order, std::nullopt, {});
  });
}

void derivative_suite(SuiteResult& result) {
  const std::array<Rational, 4> points = {make_rational(2), make_rational(-3), make_rational(1, 2),
                                          make_rational(5, 3)};
  for (int n = 1; n <= result.max_n; ++n) {
    for (const Rational& t0 : points) {
      for (SignChoice sign : {SignChoice::plus, SignChoice::minus}) {
        const Rational formula = exp_recip_derivative_formula(n, t0, sign);
        const Rational oracle = exp_recip_derivative_series_oracle(n, t0, sign);
        result.record(formula == oracle, [&] {
          return describe_values("e^{s/t} derivative ratio", n, std::nullopt,
                                 {{"t0", to_string(t0)},
                                  {"sign", std::string(to_string(sign))},
                                  {"formula", to_string(formula)},
                                  {"oracle", to_string(oracle)}});
        });
      }
      const Rational minus = exp_recip_derivative_formula(n, t0, SignChoice::minus);
      const Rational mirrored = exp_recip_derivative_formula(n, -t0, SignChoice::plus);
      result.record(minus == (n % 2 == 0 ? mirrored : Rational(-mirrored)), [&] {
        return describe_values("sign symmetry", n, std::nullopt, {{"t0", to_string(t0)}});
      });
    }
  }
}

void proof_suite(SuiteResult& result) {
  constexpr int kSlack = 8;
  for (int n = 1; n <= result.max_n; ++n) {
    result.record(proof_identity_check(n, n + kSlack), [&] {
      return describe_values("derivative identity series", n, std::nullopt, {});
    });
    const Rational constant = proof_identity_rhs(n, 0)[0];
    const ExactInt expected = n % 2 == 0 ? bell_classic(n) : ExactInt(-bell_classic(n));
    result.record(constant == Rational(expected), [&] {
      return describe_values("limit x->0", n, std::nullopt,
                             {{"constant", to_string(constant)}, {"expected", to_string(expected)}});
    });
  }
}

const std::map<std::string, int, std::less<>>& suite_caps() {
  static const std::map<std::string, int, std::less<>> caps = {
      {"theorem", 200}, {"stirling", 80}, {"lah", 60},   {"bellpoly", 12},
      {"gf", 40},       {"derivative", 20}, {"proof", 12},
  };
  return caps;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"theorem", "stirling", "lah", "bellpoly",
                                                 "gf",      "derivative", "proof"};
  return names;
}

int verify_suite_cap(std::string_view suite) {
  const auto& caps = suite_caps();
  const auto it = caps.find(suite);
  if (it == caps.end()) {
    throw DomainError("unknown verify suite '" + std::string(suite) + "'");
  }
  return it->second;
}

SuiteResult run_verify_suite(std::string_view suite, int max_n, std::uint64_t seed) {
  const int cap = verify_suite_cap(suite);
  if (max_n < 1 || max_n > cap) {
    throw DomainError("suite " + std::string(suite) + " accepts 1 <= max-n <= " +
                      std::to_string(cap) + ", got " + std::to_string(max_n));
  }
  SuiteResult result;
  result.suite = std::string(suite);
  result.max_n = max_n;
  if (suite == "theorem") {
    theorem_suite(result);
  } else if (suite == "stirling") {
    stirling_suite(result);
  } else if (suite == "lah") {
    lah_suite(result);
  } else if (suite == "bellpoly") {
    bellpoly_suite(result, seed);
  } else if (suite == "gf") {
    gf_suite(result);
  } else if (suite == "derivative") {
    derivative_suite(result);
  } else {
    proof_suite(result);
  }
  return result;
}

std::vector<SuiteResult> run_all_verify_suites(int max_n, std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (const std::string& name : verify_suite_names()) {
    results.push_back(run_verify_suite(name, std::min(max_n, verify_suite_cap(name)), seed));
  }
  return results;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> numerator(-9, 9);
  std::uniform_int_distribution<long> denominator(1, 7);
  const long num = numerator(rng);
  return make_rational(num, denominator(rng));
}

ExactInt integer_partitions_exact(int n, int k) {
  // p(n,k) = p(n-1,k-1) + p(n-k,k), tabulated bottom-up.
  if (n < 0 || k < 0 || k > n) {
    return n == 0 && k == 0 ? 1 : 0;
  }
  std::vector<std::vector<ExactInt>> p(static_cast<std::size_t>(n) + 1,
                                       std::vector<ExactInt>(static_cast<std::size_t>(k) + 1, 0));
  p[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = 1; j <= std::min(m, k); ++j) {
      p[m][j] = p[m - 1][j - 1] + p[m - j][j];
    }
  }
  return p[n][k];
}

}  // namespace bellnum
