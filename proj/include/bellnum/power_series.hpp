#pragma once

#include "bellnum/exact.hpp"

#include <vector>

namespace bellnum {

/// Power series in x truncated after x^order, with exact rational
/// coefficients. coeffs()[j] is the coefficient of x^j and the vector always
/// has order()+1 entries. Binary operations truncate to the smaller order.
class TruncatedSeries {
public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);

  /// Takes coefficients c_0..c_order; order is coeffs.size()-1.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries constant(const Rational& value, int order);
  static TruncatedSeries one(int order) { return constant(1, order); }

  /// c * x^power, or zero if power > order.
  static TruncatedSeries monomial(const Rational& c, int power, int order);

  /// sum_{j>=1} (sign x)^j / j!, i.e. e^{sign x} - 1, built from factorials.
  static TruncatedSeries exp_minus_one(int order, int sign = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  Rational& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

  /// Copy truncated to a lower order.
  TruncatedSeries truncated(int order) const;

  bool operator==(const TruncatedSeries&) const = default;

private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries ps_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ps_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ps_mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ps_scale(const Rational& c, const TruncatedSeries& f);

/// Term-wise derivative; the result has order one less. Requires order >= 1.
TruncatedSeries ps_derivative(const TruncatedSeries& f);

/// f / g. Requires g(0) != 0.
TruncatedSeries ps_div(const TruncatedSeries& f, const TruncatedSeries& g);

/// exp(f). Requires f(0) == 0, since e^{f(0)} is not rational in general.
TruncatedSeries ps_exp(const TruncatedSeries& f);

/// f(g(x)) by Horner's rule. Requires g(0) == 0.
TruncatedSeries ps_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// f^power for power >= 0.
TruncatedSeries ps_pow(const TruncatedSeries& f, int power);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return ps_add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return ps_sub(f, g); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return ps_mul(f, g); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) { return ps_scale(c, f); }

/// exp(e^x - 1) has coefficients B_j / j! for 0 <= j <= order.
bool gf_bell_check(int order);

/// exp(e^{-x} - 1) has coefficients (-1)^j B_j / j! for 0 <= j <= order.
bool gf_bell_alternating_check(int order);

/// (e^x - 1)^k / k! has coefficients S(n,k)/n! for k <= n <= order and zero
/// below x^k. Requires 1 <= k <= order.
bool gf_stirling_check(int k, int order);

}  // namespace bellnum
