#pragma once

#include "bellnum/exact.hpp"
#include "bellnum/power_series.hpp"

#include <string_view>

namespace bellnum {

/// The sign in e^{+1/t} or e^{-1/t}.
enum class SignChoice : int { plus = 1, minus = -1 };

inline int value(SignChoice sign) { return static_cast<int>(sign); }
std::string_view to_string(SignChoice sign);

/// (e^{s/t})^{(n)} / e^{s/t} at t0 from the Lah-number formula:
/// (-1)^n sum_{k=1}^{n} s^k L(n,k) / t0^{n+k}. Requires n >= 1, t0 != 0.
Rational exp_recip_derivative_formula(int n, const Rational& t0, SignChoice sign);

/// The same ratio read off n! [eps^n] exp(s/(t0+eps) - s/t0), with the
/// exponent expanded as a geometric series. Independent of Lah numbers.
Rational exp_recip_derivative_series_oracle(int n, const Rational& t0, SignChoice sign);

/// sum_{k=1}^{n} (-1)^k S(n,k) sum_{l=1}^{k} L(k,l) e^{-l x}, truncated at
/// `order`: the n-th derivative of e^{e^{-x}} divided by e^{e^{-x}}.
TruncatedSeries proof_identity_rhs(int n, int order);

/// (d^n F / dx^n) / F for F = exp(e^{-x} - 1) built to `order`; the result
/// has order `order - n`.
TruncatedSeries proof_identity_lhs(int n, int order);

/// Compares proof_identity_lhs(n, order) with proof_identity_rhs(n, order - n)
/// coefficient by coefficient. Requires 1 <= n <= order.
bool proof_identity_check(int n, int order);

}  // namespace bellnum
