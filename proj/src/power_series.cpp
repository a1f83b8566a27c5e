#include "bellnum/power_series.hpp"

#include "bellnum/combinatorial_tables.hpp"

#include <algorithm>
#include <string>

namespace bellnum {
namespace {

int shared_order(const TruncatedSeries& f, const TruncatedSeries& g) {
  return std::min(f.order(), g.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) {
    throw DomainError("series order must be nonnegative, got " + std::to_string(order));
  }
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("series needs at least a constant coefficient");
  }
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
  TruncatedSeries series(order);
  series[0] = value;
  return series;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int power, int order) {
  TruncatedSeries series(order);
  if (power < 0) {
    throw DomainError("monomial with negative power");
  }
  if (power <= order) {
    series[power] = c;
  }
  return series;
}

TruncatedSeries TruncatedSeries::exp_minus_one(int order, int sign) {
  if (sign != 1 && sign != -1) {
    throw DomainError("exp_minus_one sign must be +1 or -1");
  }
  TruncatedSeries series(order);
  for (int j = 1; j <= order; ++j) {
    const long numerator = (sign < 0 && j % 2 == 1) ? -1 : 1;
    series[j] = make_rational(ExactInt(numerator), factorial(j));
  }
  return series;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw DomainError("cannot truncate order " + std::to_string(this->order()) + " series to " +
                      std::to_string(order));
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries ps_add(const TruncatedSeries& f, const TruncatedSeries& g) {
  TruncatedSeries result(shared_order(f, g));
  for (int j = 0; j <= result.order(); ++j) {
    result[j] = f[j] + g[j];
  }
  return result;
}

TruncatedSeries ps_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  TruncatedSeries result(shared_order(f, g));
  for (int j = 0; j <= result.order(); ++j) {
    result[j] = f[j] - g[j];
  }
  return result;
}

TruncatedSeries ps_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  TruncatedSeries result(shared_order(f, g));
  const int order = result.order();
  for (int i = 0; i <= order; ++i) {
    if (f[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= order; ++j) {
      result[i + j] += f[i] * g[j];
    }
  }
  return result;
}

TruncatedSeries ps_scale(const Rational& c, const TruncatedSeries& f) {
  TruncatedSeries result(f.order());
  for (int j = 0; j <= f.order(); ++j) {
    result[j] = c * f[j];
  }
  return result;
}

TruncatedSeries ps_derivative(const TruncatedSeries& f) {
  if (f.order() < 1) {
    throw DomainError("derivative of an order-0 series has no coefficients left");
  }
  TruncatedSeries result(f.order() - 1);
  for (int j = 1; j <= f.order(); ++j) {
    result[j - 1] = j * f[j];
  }
  return result;
}

TruncatedSeries ps_div(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] == 0) {
    throw DomainError("ps_div: divisor has zero constant term");
  }
  TruncatedSeries result(shared_order(f, g));
  const Rational inverse_lead = 1 / g[0];
  for (int j = 0; j <= result.order(); ++j) {
    Rational acc = f[j];
    for (int i = 1; i <= j; ++i) {
      acc -= g[i] * result[j - i];
    }
    result[j] = acc * inverse_lead;
  }
  return result;
}

TruncatedSeries ps_exp(const TruncatedSeries& f) {
  if (f[0] != 0) {
    throw DomainError("ps_exp: argument must have zero constant term");
  }
  // E' = f' E gives m e_m = sum_{j=1}^{m} j f_j e_{m-j}.
  TruncatedSeries result(f.order());
  result[0] = 1;
  for (int m = 1; m <= f.order(); ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m; ++j) {
      if (f[j] != 0) {
        acc += j * f[j] * result[m - j];
      }
    }
    result[m] = acc / m;
  }
  return result;
}

TruncatedSeries ps_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] != 0) {
    throw DomainError("ps_compose: inner series must have zero constant term");
  }
  const int order = shared_order(f, g);
  TruncatedSeries result = TruncatedSeries::constant(f[order], order);
  for (int j = order - 1; j >= 0; --j) {
    result = ps_mul(result, g);
    result[0] += f[j];
  }
  return result;
}

TruncatedSeries ps_pow(const TruncatedSeries& f, int power) {
  if (power < 0) {
    throw DomainError("ps_pow: negative power");
  }
  TruncatedSeries result = TruncatedSeries::one(f.order());
  for (int i = 0; i < power; ++i) {
    result = ps_mul(result, f);
  }
  return result;
}

bool gf_bell_check(int order) {
  if (order < 1) {
    throw DomainError("gf_bell_check needs order >= 1");
  }
  const TruncatedSeries series = ps_exp(TruncatedSeries::exp_minus_one(order));
  for (int j = 0; j <= order; ++j) {
    if (series[j] != make_rational(bell_classic(j), factorial(j))) {
      return false;
    }
  }
  return true;
}

bool gf_bell_alternating_check(int order) {
  if (order < 1) {
    throw DomainError("gf_bell_alternating_check needs order >= 1");
  }
  const TruncatedSeries series = ps_exp(TruncatedSeries::exp_minus_one(order, -1));
  for (int j = 0; j <= order; ++j) {
    ExactInt signed_bell = bell_classic(j);
    if (j % 2 == 1) {
      signed_bell = -signed_bell;
    }
    if (series[j] != make_rational(signed_bell, factorial(j))) {
      return false;
    }
  }
  return true;
}

bool gf_stirling_check(int k, int order) {
  if (k < 1 || order < k) {
    throw DomainError("gf_stirling_check needs 1 <= k <= order");
  }
  const TruncatedSeries series =
      ps_scale(make_rational(ExactInt(1), factorial(k)),
               ps_pow(TruncatedSeries::exp_minus_one(order), k));
  for (int n = 0; n <= order; ++n) {
    const Rational expected =
        n < k ? Rational(0) : make_rational(stirling2_recurrence(n, k), factorial(n));
    if (series[n] != expected) {
      return false;
    }
  }
  return true;
}

}  // namespace bellnum
