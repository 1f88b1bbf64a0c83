#include <doctest.h>

#include "oracles.hpp"
#include "qmzv/exact.hpp"

using namespace qmzv;

TEST_SUITE("exact") {
  TEST_CASE("bernoulli values") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(-1), std::domain_error);
  }

  TEST_CASE("bernoulli agrees with the recurrence oracle") {
    const auto table = oracle::bernoulli_table(40);
    for (int n = 0; n <= 40; ++n) CHECK_MESSAGE(bernoulli(n) == table[static_cast<std::size_t>(n)], "n = " << n);
  }

  TEST_CASE("odd bernoulli numbers vanish") {
    for (int n = 1; n <= 20; ++n) CHECK(bernoulli(2 * n + 1) == 0);
  }

  TEST_CASE("eulerian polynomial examples") {
    CHECK(eulerian_poly(1) == IntPoly({0, 1}));
    CHECK(eulerian_poly(3) == IntPoly({0, Rational(1, 2), Rational(1, 2)}));
    CHECK(eulerian_poly(4) == IntPoly({0, Rational(1, 6), Rational(2, 3), Rational(1, 6)}));
    CHECK_THROWS_AS(eulerian_poly(0), std::domain_error);
  }

  TEST_CASE("eulerian polynomial times (1-X)^-k reproduces n^{k-1}/(k-1)!") {
    const int N = 50;
    for (int k = 1; k <= 10; ++k) {
      const IntPoly& p = eulerian_poly(k);
      // (1-X)^{-k} = sum_n C(n+k-1, k-1) X^n
      for (int n = 0; n <= N; ++n) {
        Rational lhs = 0;
        for (long i = 0; i <= std::min<long>(n, p.degree()); ++i)
          lhs += p.coefficient(i) * Rational(binomial(n - i + k - 1, k - 1));
        const Rational rhs = n == 0 ? Rational(0) : Rational(oracle::ipow(n, k - 1)) / Rational(oracle::fact(k - 1));
        CHECK_MESSAGE(lhs == rhs, "k = " << k << ", n = " << n);
      }
    }
  }

  TEST_CASE("eulerian polynomials satisfy P_k(1) = 1") {
    for (int k = 1; k <= 12; ++k) CHECK(eulerian_poly(k)(Rational(1)) == 1);
  }

  TEST_CASE("binomial and factorial") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(1, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 0) == 0);
    for (int n = 1; n <= 30; ++n)
      for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == oracle::fact(20));
    CHECK_THROWS_AS(factorial(-2), std::domain_error);
  }

  TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(parse_rational("+2/3") == Rational(2, 3));
    CHECK(to_string(ratio(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
  }
}
