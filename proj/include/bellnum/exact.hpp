#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bellnum {

/// Arbitrary-precision signed integer. Every combinatorial value lives here.
using ExactInt = mpz_class;

/// Fraction of two ExactInts, always canonical (lowest terms, positive
/// denominator) after arithmetic. Use make_rational() when building one
/// from a raw numerator/denominator pair.
using Rational = mpq_class;

/// Argument outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal arithmetic invariant did not hold. Never expected; signals a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

Rational make_rational(const ExactInt& num, const ExactInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

std::string to_string(const ExactInt& value);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// base^exponent for exponent >= 0, or 1/base^|exponent| (base must be nonzero).
Rational pow(const Rational& base, long exponent);

/// Exact quotient; throws InternalError when divisor does not divide dividend.
ExactInt divide_exact(const ExactInt& dividend, const ExactInt& divisor,
                      const char* context);

}  // namespace bellnum
