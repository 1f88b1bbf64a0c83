#include <doctest.h>

#include <random>

#include "qmzv/multiseries.hpp"
#include "qmzv/realizations.hpp"

using namespace qmzv;

namespace {

MSeries<Rational> mono(int D, Monomial m, Rational c = 1) {
  MSeries<Rational> s(D);
  s.add(m, c);
  return s;
}

MSeries<Rational> random_mseries(std::mt19937& rng, int D, int terms) {
  std::uniform_int_distribution<int> e(0, D), c(-6, 6);
  MSeries<Rational> s(D);
  for (int i = 0; i < terms; ++i) {
    Monomial m{e(rng), e(rng), e(rng), e(rng)};
    if (total_degree(m) <= D) s.add(m, qmzv::ratio(c(rng), 1 + (i % 3)));
  }
  return s;
}

}  // namespace

TEST_SUITE("multiseries") {
  using namespace qmzv::lf;
  using qmzv::lf::y1;

  TEST_CASE("products and truncation") {
    const auto x1m = mono(3, {1, 0, 0, 0});
    const auto x2m = mono(3, {0, 1, 0, 0});
    CHECK(ms_arith(x1m, x2m, MSeriesOp::mul) == mono(3, {1, 1, 0, 0}));
    const auto p = ms_arith(mono(1, {1, 0, 0, 0}), mono(1, {0, 1, 0, 0}), MSeriesOp::mul);
    CHECK(p.degree_bound() == 1);
    CHECK(p.empty());
    CHECK(ms_arith(x1m, mono(2, {1, 0, 0, 0}), MSeriesOp::sub).degree_bound() == 2);
    CHECK(ms_arith(x1m, x1m, MSeriesOp::sub).empty());
    CHECK(ms_scale(x1m, Rational(3)) == mono(3, {1, 0, 0, 0}, 3));
  }

  TEST_CASE("adding beyond the bound or zero is discarded") {
    MSeries<Rational> s(2);
    s.add({3, 0, 0, 0}, 1);
    s.add({1, 0, 0, 0}, 0);
    CHECK(s.empty());
    CHECK_THROWS_AS(MSeries<Rational>(-1), std::invalid_argument);
  }

  TEST_CASE("square of b1 at X1 X2") {
    const auto b1 = b1_series(3);
    const auto sq = ms_mul(b1, ms_substitute(b1, args(x2, zero, y2, zero)));
    CHECK(sq.coefficient({1, 1, 0, 0}) == Rational(1, 576));
  }

  TEST_CASE("substitution examples") {
    const auto s = mono(4, {2, 0, 1, 0}, Rational(2, 3));
    CHECK(ms_substitute(s, identity_substitution()) == s);
    MSeries<Rational> expected(2);
    expected.add({2, 0, 0, 0}, 1);
    expected.add({1, 1, 0, 0}, 2);
    expected.add({0, 2, 0, 0}, 1);
    CHECK(ms_substitute(mono(2, {2, 0, 0, 0}), args(x1 + x2, x2, y1, y2)) == expected);
    LinearForm shifted = x1;
    shifted.constant = 1;
    CHECK_THROWS_AS(ms_substitute(s, args(shifted, x2, y1, y2)), std::invalid_argument);
  }

  TEST_CASE("substitution inverse pair") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_mseries(rng, 6, 12);
      const auto back = ms_substitute(ms_substitute(a, args(x1 - x2, x2, y1, y2)), args(x1 + x2, x2, y1, y2));
      CHECK(back == a);
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    const Substitution maps[] = {args(x1 + x2, x2, y1, y2 - y1), args(-x2, x1, -y2, y1), args(y1 + y2, y1, x2, x1 - x2),
                                 args(x1, zero, y1 + y2, zero)};
    for (int t = 0; t < 12; ++t) {
      const auto a = random_mseries(rng, 6, 10);
      const auto b = random_mseries(rng, 6, 10);
      for (const auto& m : maps) CHECK(ms_substitute(a * b, m) == ms_substitute(a, m) * ms_substitute(b, m));
    }
  }

  TEST_CASE("divided difference examples") {
    MSeries<Rational> sq(3);
    sq.add({2, 0, 0, 0}, 1);
    sq.add({0, 2, 0, 0}, -1);
    MSeries<Rational> expect(2);
    expect.add({1, 0, 0, 0}, 1);
    expect.add({0, 1, 0, 0}, 1);
    CHECK(ms_divided_difference(sq, DividedPair::X) == expect);

    MSeries<Rational> cube(3);
    cube.add({0, 0, 3, 0}, 1);
    cube.add({0, 0, 0, 3}, -1);
    MSeries<Rational> expect3(2);
    expect3.add({0, 0, 2, 0}, 1);
    expect3.add({0, 0, 1, 1}, 1);
    expect3.add({0, 0, 0, 2}, 1);
    CHECK(ms_divided_difference(cube, DividedPair::Y) == expect3);

    CHECK_THROWS_AS(ms_divided_difference(mono(3, {1, 0, 0, 0}), DividedPair::X), std::domain_error);
  }

  TEST_CASE("divided difference times the difference gives back the input") {
    std::mt19937 rng(3);
    for (int t = 0; t < 15; ++t) {
      const auto f = random_mseries(rng, 7, 10);
      for (auto pair : {DividedPair::X, DividedPair::Y}) {
        const Substitution swap = pair == DividedPair::X ? args(x2, x1, y1, y2) : args(x1, x2, y2, y1);
        const auto anti = f - ms_substitute(f, swap);
        const auto q = ms_divided_difference(anti, pair);
        const auto diff = pair == DividedPair::X ? mono(7, {1, 0, 0, 0}) - mono(7, {0, 1, 0, 0})
                                                 : mono(7, {0, 0, 1, 0}) - mono(7, {0, 0, 0, 1});
        CHECK(q * diff == anti.truncated(q.degree_bound()));
      }
    }
  }

  TEST_CASE("normalized coefficient extraction") {
    const auto b1 = b1_series(5);
    CHECK(ms_coefficient(b1, 2, 0) == Rational(-1, 24));
    CHECK(ms_coefficient(b1, 4, 0) == Rational(1, 1440));
    CHECK(ms_coefficient(b1, 1, 0) == 0);
    CHECK(ms_coefficient(b1, 1, 3) == Rational(1, 1440) * 6);
    CHECK_THROWS_AS(ms_coefficient(b1, 7, 0), std::out_of_range);
    MSeries<Rational> s(4);
    s.add({0, 1, 1, 2}, Rational(1, 2));
    CHECK(ms_coefficient(s, 1, 2, 1, 2) == 1);
  }

  TEST_CASE("coefficient extraction is linear") {
    std::mt19937 rng(9);
    for (int t = 0; t < 10; ++t) {
      const auto a = random_mseries(rng, 5, 15);
      const auto b = random_mseries(rng, 5, 15);
      for (int k1 = 1; k1 <= 3; ++k1)
        for (int d2 = 0; d2 <= 2; ++d2)
          CHECK(ms_coefficient(a * Rational(2) + b, k1, 1, 1, d2) ==
                ms_coefficient(a, k1, 1, 1, d2) * 2 + ms_coefficient(b, k1, 1, 1, d2));
    }
  }

  TEST_CASE("q-series coefficients and promotion") {
    const auto p = promote(b1_series(3), 4);
    CHECK(ms_coefficient(p, 2, 0) == QSeries::constant(Rational(-1, 24), 4));
    CHECK(p.coefficient({0, 1, 0, 0}) == QSeries(4));
    const auto prod = ms_mul(b1_series(3), p);
    CHECK(prod.coefficient({2, 0, 0, 0}) == QSeries::constant(Rational(1, 576), 4));
  }

  TEST_CASE("monomial names") {
    CHECK(monomial_to_string({2, 0, 1, 0}) == "X1^2*Y1");
    CHECK(monomial_to_string({0, 0, 0, 0}) == "1");
  }
}
