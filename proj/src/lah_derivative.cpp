#include "bellnum/lah_derivative.hpp"

#include "bellnum/combinatorial_tables.hpp"

#include <string>

namespace bellnum {
namespace {

void require_derivative_args(int n, const Rational& t0, const char* op) {
  if (n < 1) {
    throw DomainError(std::string(op) + " needs n >= 1, got " + std::to_string(n));
  }
  if (t0 == 0) {
    throw DomainError(std::string(op) + ": t0 = 0 is a singularity");
  }
}

void require_proof_args(int n, int order) {
  if (n < 1 || order < n) {
    throw DomainError("proof identity needs 1 <= n <= order, got n = " + std::to_string(n) +
                      ", order = " + std::to_string(order));
  }
}

}  // namespace

std::string_view to_string(SignChoice sign) {
  return sign == SignChoice::plus ? "+" : "-";
}

Rational exp_recip_derivative_formula(int n, const Rational& t0, SignChoice sign) {
  require_derivative_args(n, t0, "exp_recip_derivative_formula");
  Rational sum = 0;
  for (int k = 1; k <= n; ++k) {
    Rational term = Rational(lah(n, k)) / pow(t0, n + k);
    if (sign == SignChoice::minus && k % 2 == 1) {
      term = -term;
    }
    sum += term;
  }
  return n % 2 == 0 ? sum : Rational(-sum);
}

Rational exp_recip_derivative_series_oracle(int n, const Rational& t0, SignChoice sign) {
  require_derivative_args(n, t0, "exp_recip_derivative_series_oracle");
  // s/(t0+eps) - s/t0 = (s/t0) sum_{j>=1} (-eps/t0)^j
  TruncatedSeries exponent(n);
  const Rational lead = Rational(value(sign)) / t0;
  const Rational ratio = Rational(-1) / t0;
  Rational ratio_power = ratio;
  for (int j = 1; j <= n; ++j) {
    exponent[j] = lead * ratio_power;
    ratio_power *= ratio;
  }
  const TruncatedSeries expanded = ps_exp(exponent);
  return Rational(factorial(n)) * expanded[n];
}

TruncatedSeries proof_identity_rhs(int n, int order) {
  if (n < 1 || order < 0) {
    throw DomainError("proof_identity_rhs needs n >= 1 and order >= 0");
  }
  const std::vector<ExactInt> stirling = stirling2_row(n);
  TruncatedSeries rhs(order);
  for (int k = 1; k <= n; ++k) {
    TruncatedSeries inner(order);
    for (int l = 1; l <= k; ++l) {
      const TruncatedSeries decay = ps_exp(TruncatedSeries::monomial(-l, 1, order));
      inner = ps_add(inner, ps_scale(Rational(lah(k, l)), decay));
    }
    const Rational weight = k % 2 == 0 ? Rational(stirling[k]) : Rational(-stirling[k]);
    rhs = ps_add(rhs, ps_scale(weight, inner));
  }
  return rhs;
}

TruncatedSeries proof_identity_lhs(int n, int order) {
  require_proof_args(n, order);
  const TruncatedSeries generating = ps_exp(TruncatedSeries::exp_minus_one(order, -1));
  TruncatedSeries derivative = generating;
  for (int i = 0; i < n; ++i) {
    derivative = ps_derivative(derivative);
  }
  return ps_div(derivative, generating);
}

bool proof_identity_check(int n, int order) {
  require_proof_args(n, order);
  return proof_identity_lhs(n, order) == proof_identity_rhs(n, order - n);
}

}  // namespace bellnum
