#include "bellnum/exact.hpp"

namespace bellnum {

Rational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Rational make_rational(long num, long den) {
  return make_rational(ExactInt(num), ExactInt(den));
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(ExactInt(text));
    }
    return make_rational(ExactInt(text.substr(0, slash)),
                         ExactInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

std::string to_string(const ExactInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (is_integer(value)) {
    return value.get_num().get_str();
  }
  return value.get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational pow(const Rational& base, long exponent) {
  const unsigned long magnitude =
      exponent < 0 ? static_cast<unsigned long>(-exponent)
                   : static_cast<unsigned long>(exponent);
  ExactInt num;
  ExactInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), magnitude);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), magnitude);
  if (exponent < 0) {
    if (base == 0) {
      throw DomainError("negative power of zero");
    }
    return make_rational(den, num);
  }
  return make_rational(num, den);
}

ExactInt divide_exact(const ExactInt& dividend, const ExactInt& divisor,
                      const char* context) {
  if (divisor == 0 || !mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t())) {
    throw InternalError(std::string(context) + ": " + dividend.get_str() +
                        " is not divisible by " + divisor.get_str());
  }
  ExactInt quotient;
  mpz_divexact(quotient.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
  return quotient;
}

}  // namespace bellnum
