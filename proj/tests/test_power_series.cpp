#include "bellnum/power_series.hpp"

#include "bellnum/combinatorial_tables.hpp"
#include "bellnum/verify.hpp"

#include <doctest.h>

#include <random>

using namespace bellnum;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool zero_constant = false) {
  TruncatedSeries series(order);
  for (int j = zero_constant ? 1 : 0; j <= order; ++j) series[j] = random_rational(rng);
  return series;
}

TruncatedSeries x_series(int order) { return TruncatedSeries::monomial(1, 1, order); }

}  // namespace

TEST_CASE("construction and basic arithmetic") {
  const TruncatedSeries one = TruncatedSeries::one(5);
  CHECK(one.order() == 5);
  CHECK(one.coeffs().size() == 6);
  CHECK(TruncatedSeries::monomial(3, 9, 5) == TruncatedSeries::zero(5));
  CHECK_THROWS_AS(TruncatedSeries(-1), DomainError);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), DomainError);

  std::mt19937_64 rng(1);
  const TruncatedSeries f = random_series(rng, 6);
  CHECK(ps_mul(f, one.truncated(5)) == f.truncated(5));
  CHECK(ps_derivative(TruncatedSeries::constant(7, 4)) == TruncatedSeries::zero(3));
  CHECK_THROWS_AS(ps_derivative(TruncatedSeries::one(0)), DomainError);

  const TruncatedSeries x = x_series(4);
  const TruncatedSeries x2 = ps_mul(x, x);
  CHECK(x2 == TruncatedSeries::monomial(1, 2, 4));

  SUBCASE("order is the minimum of the operands") {
    const TruncatedSeries g = random_series(rng, 3);
    CHECK(ps_add(f, g).order() == 3);
    CHECK(ps_mul(f, g).order() == 3);
    CHECK(ps_div(f, TruncatedSeries::one(2)).order() == 2);
    CHECK(ps_derivative(f).order() == 5);
    CHECK(ps_scale(2, f).order() == 6);
  }
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 1 + trial % 12;
    const TruncatedSeries f = random_series(rng, order);
    const TruncatedSeries g = random_series(rng, order + 1);
    const TruncatedSeries h = random_series(rng, order);
    REQUIRE((f + g) + h == f + (g + h));
    REQUIRE(f + g == g + f);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * g == g * f);
    REQUIRE(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("division") {
  std::mt19937_64 rng(2);
  const TruncatedSeries f = random_series(rng, 7);
  CHECK(ps_div(f, TruncatedSeries::one(7)) == f);

  TruncatedSeries unit = f;
  unit[0] = make_rational(3, 4);
  CHECK(ps_div(unit, unit) == TruncatedSeries::one(7));

  // 1/(1-x) = 1 + x + x^2 + ...
  const TruncatedSeries geometric =
      ps_div(TruncatedSeries::one(6), TruncatedSeries::one(6) - x_series(6));
  for (int j = 0; j <= 6; ++j) CHECK(geometric[j] == 1);

  CHECK_THROWS_AS(ps_div(f, x_series(7)), DomainError);

  for (int trial = 0; trial < 20; ++trial) {
    const TruncatedSeries a = random_series(rng, 9);
    TruncatedSeries b = random_series(rng, 9);
    if (b[0] == 0) b[0] = 1;
    REQUIRE(ps_mul(ps_div(a, b), b) == a);
  }
}

TEST_CASE("exponential") {
  CHECK(ps_exp(TruncatedSeries::zero(5)) == TruncatedSeries::one(5));

  const TruncatedSeries ex = ps_exp(x_series(8));
  for (int j = 0; j <= 8; ++j) CHECK(ex[j] == make_rational(ExactInt(1), factorial(j)));

  // exp(x + x^2/2) = 1 + x + x^2 + 2/3 x^3 + ...
  TruncatedSeries arg(3);
  arg[1] = 1;
  arg[2] = make_rational(1, 2);
  CHECK(ps_exp(arg) == TruncatedSeries({1, 1, 1, make_rational(2, 3)}));

  CHECK_THROWS_AS(ps_exp(TruncatedSeries::one(3)), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 2 + trial % 11;
    const TruncatedSeries f = random_series(rng, order, true);
    const TruncatedSeries g = random_series(rng, order, true);
    const TruncatedSeries ef = ps_exp(f);
    REQUIRE(ps_exp(f + g) == ef * ps_exp(g));
    REQUIRE(ps_derivative(ef) == ps_derivative(f) * ef.truncated(order - 1));
  }
}

TEST_CASE("composition") {
  std::mt19937_64 rng(4);
  const TruncatedSeries f = random_series(rng, 8);
  const TruncatedSeries g = random_series(rng, 8, true);
  CHECK(ps_compose(f, x_series(8)) == f);
  CHECK(ps_compose(x_series(8), g) == g);
  CHECK_THROWS_AS(ps_compose(f, TruncatedSeries::one(8)), DomainError);

  for (int trial = 0; trial < 15; ++trial) {
    const int order = 1 + trial % 10;
    const TruncatedSeries a = random_series(rng, order);
    const TruncatedSeries b = random_series(rng, order, true);
    const TruncatedSeries c = random_series(rng, order, true);
    REQUIRE(ps_compose(ps_compose(a, b), c) == ps_compose(a, ps_compose(b, c)));
  }

  // exp composed with e^x - 1 is the Bell generating function.
  std::vector<Rational> exp_coeffs;
  for (int j = 0; j <= 10; ++j) exp_coeffs.push_back(make_rational(ExactInt(1), factorial(j)));
  const TruncatedSeries inner = TruncatedSeries::exp_minus_one(10);
  CHECK(ps_compose(TruncatedSeries(exp_coeffs), inner) == ps_exp(inner));
}

TEST_CASE("generating-function checks") {
  CHECK(gf_bell_check(1));
  CHECK(ps_exp(TruncatedSeries::exp_minus_one(2))[2] == 1);
  CHECK(gf_bell_check(15));

  CHECK(gf_bell_alternating_check(1));
  CHECK(ps_exp(TruncatedSeries::exp_minus_one(2, -1))[2] == 1);
  CHECK(ps_exp(TruncatedSeries::exp_minus_one(3, -1))[3] == make_rational(-5, 6));
  CHECK(gf_bell_alternating_check(15));

  for (int k = 1; k <= 8; ++k) CHECK(gf_stirling_check(k, 15));
  CHECK(gf_stirling_check(2, 4));
  CHECK(gf_stirling_check(6, 6));

  const TruncatedSeries square = ps_pow(TruncatedSeries::exp_minus_one(4), 2);
  CHECK(make_rational(1, 2) * square[3] == make_rational(3, 6));
  CHECK(make_rational(1, 2) * square[4] == make_rational(7, 24));

  CHECK_THROWS_AS(gf_bell_check(0), DomainError);
  CHECK_THROWS_AS(gf_stirling_check(5, 4), DomainError);
}
