#include "bellnum/combinatorial_tables.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace bellnum;

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(factorial(-1), DomainError);

  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("Stirling numbers of the second kind") {
  SUBCASE("explicit sum") {
    for (int n = 1; n <= 10; ++n) {
      CHECK(stirling2_explicit(n, n) == 1);
      CHECK(stirling2_explicit(n, 1) == 1);
    }
    CHECK(stirling2_explicit(4, 2) == 7);
    CHECK_THROWS_AS(stirling2_explicit(3, 0), DomainError);
    CHECK_THROWS_AS(stirling2_explicit(3, 4), DomainError);
  }

  SUBCASE("recurrence and boundary conventions") {
    CHECK(stirling2_recurrence(0, 0) == 1);
    CHECK(stirling2_recurrence(5, 0) == 0);
    CHECK(stirling2_recurrence(4, 2) == 7);
    CHECK(stirling2_recurrence(3, 2) == 3);
    CHECK_THROWS_AS(stirling2_recurrence(2, 3), DomainError);
  }

  SUBCASE("brute-force set partitions agree") {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= n; ++k) {
        const ExactInt expected(static_cast<unsigned long>(testing::brute_stirling2(n, k)));
        CHECK(stirling2_explicit(n, k) == expected);
        CHECK(stirling2_recurrence(n, k) == expected);
      }
    }
  }

  SUBCASE("explicit equals recurrence, memo equals fresh row") {
    for (int n = 1; n <= 40; ++n) {
      const auto row = stirling2_row(n);
      for (int k = 1; k <= n; ++k) {
        const ExactInt value = stirling2_explicit(n, k);
        REQUIRE(value == stirling2_recurrence(n, k));
        REQUIRE(value == row[k]);
        REQUIRE(value > 0);
      }
    }
    CHECK(to_string(stirling2_recurrence(40, 20)) == "162188909527975750487887236507181");
  }
}

TEST_CASE("TriangleTable") {
  TriangleTable stirling(TriangleTable::Kind::stirling2);
  TriangleTable lahs(TriangleTable::Kind::lah);
  CHECK(stirling.max_row() == 0);
  CHECK(stirling.entry(0, 0) == 1);
  CHECK(stirling.entry(4, 2) == 7);
  CHECK(stirling.max_row() == 4);
  CHECK_THROWS_AS(static_cast<const TriangleTable&>(stirling).at(5, 1), DomainError);

  for (int n = 1; n <= 15; ++n) {
    CHECK(stirling.row(n).size() == static_cast<std::size_t>(n));
    CHECK(lahs.row(n).size() == static_cast<std::size_t>(n));
    CHECK(stirling.entry(n, n) == 1);
    CHECK(lahs.entry(n, n) == 1);
    CHECK(stirling.entry(n, 1) == 1);
    CHECK(lahs.entry(n, 1) == factorial(n));
    CHECK(stirling.entry(n, 0) == 0);
    for (int k = 1; k <= n; ++k) {
      CHECK(lahs.entry(n, k) == lah(n, k));
    }
  }
}

TEST_CASE("shared Stirling memo under concurrent readers") {
  std::vector<std::thread> workers;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([t, &mismatches] {
      for (int n = 30 + t; n >= 1; --n) {
        const auto row = stirling2_row(n);
        for (int k = 0; k <= n; ++k) {
          if (stirling2_recurrence(n, k) != row[k]) ++mismatches[t];
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (int count : mismatches) CHECK(count == 0);
}

TEST_CASE("Lah numbers") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(lah(n, n) == 1);
    CHECK(lah(n, 1) == factorial(n));
  }
  CHECK(lah(3, 1) == 6);
  CHECK(lah(3, 2) == 6);
  CHECK_THROWS_AS(lah(3, 0), DomainError);
  CHECK_THROWS_AS(lah(3, 4), DomainError);

  SUBCASE("ordered-block enumeration agrees") {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= n; ++k) {
        CHECK(lah(n, k) == ExactInt(static_cast<unsigned long>(testing::brute_lah(n, k))));
      }
    }
  }

  SUBCASE("recurrence L(n+1,k) = (n+k) L(n,k) + L(n,k-1)") {
    for (int n = 1; n < 30; ++n) {
      for (int k = 1; k <= n + 1; ++k) {
        const ExactInt same = k <= n ? lah(n, k) : ExactInt(0);
        const ExactInt left = k >= 2 ? lah(n, k - 1) : ExactInt(0);
        REQUIRE(lah(n + 1, k) == (n + k) * same + left);
      }
    }
    CHECK(to_string(lah(30, 15)) == "15732267448930658699673600000");
  }

  SUBCASE("row sums") {
    CHECK(lah_row_sum(1) == 1);
    CHECK(lah_row_sum(2) == 3);
    CHECK(lah_row_sum(3) == 13);
    const long expected[] = {1, 3, 13, 73, 501, 4051, 37633, 394353};
    for (int k = 1; k <= 8; ++k) CHECK(lah_row_sum(k) == expected[k - 1]);
    CHECK_THROWS_AS(lah_row_sum(0), DomainError);
  }
}

TEST_CASE("rising and falling factorials") {
  // (x)_2 = x^2 + x; <x>_2 = x^2 - x
  CHECK(rising_factorial_poly(2) == std::vector<ExactInt>{0, 1, 1});
  CHECK(falling_factorial_poly(2) == std::vector<ExactInt>{0, -1, 1});
  CHECK(rising_factorial_poly(0) == std::vector<ExactInt>{1});
  for (int n = 1; n <= 12; ++n) CHECK(lah_connection_check(n));
  CHECK_THROWS_AS(lah_connection_check(0), DomainError);
}

TEST_CASE("Bell numbers by every method") {
  const long known[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};

  SUBCASE("small values") {
    CHECK(bell_classic(0) == 1);
    CHECK(bell_classic(3) == 5);
    CHECK(bell_classic(5) == 52);
    CHECK(bell_lah_stirling(1) == 1);
    CHECK(bell_lah_stirling(3) == 5);
    CHECK(bell_lah_stirling(4) == 15);
    CHECK(bell_triangle(0) == 1);
    CHECK(bell_triangle(2) == 2);
    CHECK(bell_triangle(6) == 203);
    CHECK(bell_enumeration_oracle(0) == 1);
    CHECK(bell_enumeration_oracle(4) == 15);
    for (int n = 0; n <= 8; ++n) {
      CHECK(bell_classic(n) == ExactInt(static_cast<unsigned long>(testing::brute_bell(n))));
    }
  }

  SUBCASE("n = 0 convention and guards") {
    CHECK_THROWS_AS(bell_lah_stirling(0), DomainError);
    CHECK_THROWS_AS(bell(0, BellMethod::lah_stirling), DomainError);
    CHECK_THROWS_AS(bell_enumeration_oracle(13), DomainError);
    CHECK_THROWS_AS(bell_enumeration_oracle(-1), DomainError);
    CHECK_THROWS_AS(bell_classic(-1), DomainError);
  }

  SUBCASE("enumeration oracle matches through n = 12") {
    for (int n = 0; n <= 12; ++n) {
      CHECK(bell_enumeration_oracle(n) == known[n]);
      CHECK(bell_classic(n) == known[n]);
    }
  }

  SUBCASE("Lah/Stirling sum equals the classic sum and the triangle") {
    const auto batch = bell_lah_stirling_upto(60);
    for (int n = 1; n <= 60; ++n) {
      const ExactInt classic = bell_classic(n);
      REQUIRE(bell_lah_stirling(n) == classic);
      REQUIRE(bell_triangle(n) == classic);
      REQUIRE(batch[n - 1] == classic);
    }
    CHECK(to_string(bell_classic(25)) == "4638590332229999353");
    CHECK(to_string(bell_lah_stirling(60)) ==
          "976939307467007552986994066961675455550246347757474482558637");
  }
}

TEST_CASE("method names round-trip") {
  for (BellMethod m : {BellMethod::classic, BellMethod::lah_stirling, BellMethod::triangle,
                       BellMethod::enumerate}) {
    CHECK(parse_bell_method(to_string(m)) == m);
  }
  CHECK_FALSE(parse_bell_method("dobinski").has_value());
}
