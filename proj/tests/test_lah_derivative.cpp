#include "bellnum/lah_derivative.hpp"

#include "bellnum/combinatorial_tables.hpp"

#include <doctest.h>

#include <array>

using namespace bellnum;

namespace {

const std::array<Rational, 4> kPoints = {make_rational(2), make_rational(-3), make_rational(1, 2),
                                         make_rational(5, 3)};

}  // namespace

TEST_CASE("derivative ratio of e^{+-1/t}: hand values") {
  for (const Rational& t0 : kPoints) {
    CHECK(exp_recip_derivative_formula(1, t0, SignChoice::plus) == -1 / (t0 * t0));
  }
  // d/dt e^{1/t} = -t^-2 e^{1/t}; d2 = (2 t^-3 + t^-4) e^{1/t}
  CHECK(exp_recip_derivative_formula(2, 2, SignChoice::plus) == make_rational(5, 16));
  CHECK(exp_recip_derivative_formula(2, 2, SignChoice::minus) == make_rational(-3, 16));
  // d3 e^{1/t} = -(6 t^-4 + 6 t^-5 + t^-6) e^{1/t}
  const Rational t = make_rational(1, 2);
  CHECK(exp_recip_derivative_formula(3, t, SignChoice::plus) ==
        -(6 * pow(t, -4) + 6 * pow(t, -5) + pow(t, -6)));

  CHECK(exp_recip_derivative_series_oracle(1, 1, SignChoice::plus) == -1);
  CHECK(exp_recip_derivative_series_oracle(2, 2, SignChoice::plus) == make_rational(5, 16));
  CHECK(exp_recip_derivative_series_oracle(2, 2, SignChoice::minus) == make_rational(-3, 16));

  CHECK_THROWS_AS(exp_recip_derivative_formula(2, 0, SignChoice::plus), DomainError);
  CHECK_THROWS_AS(exp_recip_derivative_series_oracle(2, 0, SignChoice::minus), DomainError);
  CHECK_THROWS_AS(exp_recip_derivative_formula(0, 1, SignChoice::plus), DomainError);
}

TEST_CASE("Lah formula matches the series oracle") {
  for (int n = 1; n <= 10; ++n) {
    for (const Rational& t0 : kPoints) {
      for (SignChoice sign : {SignChoice::plus, SignChoice::minus}) {
        REQUIRE(exp_recip_derivative_formula(n, t0, sign) ==
                exp_recip_derivative_series_oracle(n, t0, sign));
      }
    }
  }
  const Rational t0 = make_rational(3, 2);
  CHECK(exp_recip_derivative_formula(8, t0, SignChoice::minus) ==
        exp_recip_derivative_series_oracle(8, t0, SignChoice::minus));
}

TEST_CASE("sign symmetry") {
  for (int n = 1; n <= 10; ++n) {
    for (const Rational& t0 : kPoints) {
      const Rational minus = exp_recip_derivative_formula(n, t0, SignChoice::minus);
      const Rational mirrored = exp_recip_derivative_formula(n, -t0, SignChoice::plus);
      CHECK(minus == (n % 2 == 0 ? mirrored : Rational(-mirrored)));
    }
  }
}

TEST_CASE("derivative identity for e^{e^{-x}}") {
  SUBCASE("n = 1: F'/F = -e^{-x}") {
    CHECK(proof_identity_check(1, 6));
    const TruncatedSeries lhs = proof_identity_lhs(1, 6);
    const TruncatedSeries expected = ps_scale(-1, ps_exp(TruncatedSeries::monomial(-1, 1, 5)));
    CHECK(lhs == expected);
  }

  SUBCASE("n = 3 and n = 6") {
    CHECK(proof_identity_check(3, 10));
    CHECK(proof_identity_rhs(3, 7)[0] == -5);
    CHECK(proof_identity_check(6, 14));
  }

  SUBCASE("limit x -> 0 recovers (-1)^n B_n") {
    for (int n = 1; n <= 8; ++n) {
      CHECK(proof_identity_check(n, n + 8));
      const ExactInt bell_n = bell_classic(n);
      CHECK(proof_identity_rhs(n, 8)[0] == (n % 2 == 0 ? bell_n : ExactInt(-bell_n)));
    }
  }

  CHECK_THROWS_AS(proof_identity_check(0, 4), DomainError);
  CHECK_THROWS_AS(proof_identity_check(5, 4), DomainError);
}
