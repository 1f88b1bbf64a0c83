#include <doctest.h>

#include "oracles.hpp"
#include "qmzv/realizations.hpp"

using namespace qmzv;
using FS = FormalSymbol;

namespace {

// Taylor coefficients of x/(e^x - 1), by inverting sum x^n/(n+1)!.
std::vector<Rational> bernoulli_over_factorial(int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1), c(a.size());
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = Rational(1) / Rational(oracle::fact(i + 1));
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Rational s = 0;
    for (int j = 1; j <= i; ++j) s += a[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    c[static_cast<std::size_t>(i)] = -s;
  }
  return c;
}

const RealizationTable& table8() {
  static const RealizationTable t = e_series(8, 60);
  return t;
}

}  // namespace

TEST_SUITE("realizations") {
  using namespace qmzv::lf;
  using qmzv::lf::y1;

  TEST_CASE("b1 matches the x/(e^x - 1) expansion") {
    const int D = 12;
    const auto c = bernoulli_over_factorial(D + 1);
    const auto b1 = b1_series(D);
    for (int j = 0; j <= D; ++j) {
      const Rational expect = j % 2 == 1 ? -c[static_cast<std::size_t>(j + 1)] / 2 : Rational(0);
      CHECK(b1.coefficient({j, 0, 0, 0}) == expect);
      CHECK(b1.coefficient({0, 0, j, 0}) == expect);
    }
    for (const auto& [m, v] : b1.terms()) CHECK((m[1] == 0 && m[3] == 0 && (m[0] == 0 || m[2] == 0)));
  }

  TEST_CASE("b1 product and quotient examples") {
    const auto b1 = b1_series(5);
    CHECK(split_product(b1).coefficient({1, 1, 0, 0}) == Rational(1, 576));
    CHECK(split_product(b1).coefficient({0, 0, 1, 1}) == Rational(1, 576));
    // (b(X1) - b(X2))/(X1 - X2) on X^3 gives X1^2 + X1 X2 + X2^2
    const auto rs = stuffle_quotient(b1);
    CHECK(rs.degree_bound() == 4);
    CHECK(rs.coefficient({2, 0, 0, 0}) == Rational(1, 1440) * 6 / 24 * 4);
    CHECK(rs.coefficient({1, 1, 0, 0}) == rs.coefficient({2, 0, 0, 0}));
    CHECK(rs.coefficient({0, 0, 0, 0}) == Rational(-1, 24));
  }

  TEST_CASE("shuffle quotient of b1 under the swap") {
    // b1(X;Y) = sum c_n (X^{2n-1} + Y^{2n-1}); the X part cancels in the Y-difference,
    // leaving sum c_n h_{2n-2}(Y1, Y2).
    const int D = 4;
    const auto b1 = b1_series(D + 1);
    const auto rh = shuffle_quotient(b1);
    const auto swapped = ms_substitute(rh, args(-x2, x1, -y2, y1));
    MSeries<Rational> expect(D);
    const auto c = bernoulli_over_factorial(D + 2);
    for (int n = 1; 2 * n - 2 <= D; ++n) {
      const Rational cn = -c[static_cast<std::size_t>(2 * n)] / 2;
      for (int i = 0; i <= 2 * n - 2; ++i) {
        const int j = 2 * n - 2 - i;
        expect.add({0, 0, j, i}, i % 2 == 0 ? cn : -cn);
      }
    }
    CHECK(swapped == expect);
  }

  TEST_CASE("g generating series coefficients are brackets") {
    const auto g = g_generating_series(3, 12);
    CHECK(g.g1.degree_bound() == 4);
    CHECK(g.g2.degree_bound() == 3);
    for (int k = 1; k <= 3; ++k)
      for (int d = 0; k - 1 + d <= 4; ++d) CHECK(ms_coefficient(g.g1, k, d) == oracle::depth_one(k, d, 12));
    CHECK(ms_coefficient(g.g2, 1, 1, 0, 0) == oracle::brute_bracket({1, 1}, {0, 0}, 12));
    CHECK(ms_coefficient(g.g2, 2, 1, 1, 0) == oracle::brute_bracket({2, 1}, {1, 0}, 12));
    CHECK(ms_coefficient(g.g2, 1, 1, 0, 3) == oracle::brute_bracket({1, 1}, {0, 3}, 12));
  }

  TEST_CASE("Bernoulli double shuffle at degree 12") {
    const auto r = verify_betadsh(12);
    CHECK(r.checks.size() == 2);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.holds(), c.name);
  }

  TEST_CASE("algebraic structure of the g series") {
    const auto r = verify_lemma_algstruct(6, 30);
    CHECK(r.checks.size() == 4);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.holds(), c.name);
  }

  TEST_CASE("a perturbed series is caught") {
    auto b = b2_series(4);
    auto bumped = b;
    bumped.add({1, 0, 0, 2}, Rational(1, 7));
    const auto c = compare_mseries("bump", b, bumped);
    REQUIRE_FALSE(c.holds());
    CHECK(c.first->monomial == Monomial{1, 0, 0, 2});
    CHECK_FALSE(c.first->q_degree.has_value());
  }

  TEST_CASE("E1 examples") {
    const auto e1 = e1_series(5, 10);
    CHECK(ms_coefficient(e1, 2, 0) == eisenstein_gtilde(2, 10));
    CHECK(ms_coefficient(e1, 4, 0) == eisenstein_gtilde(4, 10));
    CHECK(ms_coefficient(e1, 3, 0) == oracle::depth_one(3, 0, 10));
    CHECK(ms_coefficient(e1, 2, 1) == oracle::depth_one(2, 1, 10));
  }

  TEST_CASE("Eisenstein double shuffle at degree 8") {
    const auto r = verify_eisenstein_theorem(8, 30);
    CHECK(r.checks.size() == 2);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.holds(), c.name);
  }

  TEST_CASE("realized symbols") {
    const auto& t = table8();
    for (int k = 1; k <= 9; ++k) CHECK(realize(FormalVec{{FS::G1(k, 0), 1}}, t) == eisenstein_gtilde(k, 60));
    const QSeries pp = realize(FormalVec{{FS::P(4, 4, 0, 0), 1}}, t);
    CHECK(pp[0] == Rational(1, 2073600));
    CHECK(pp == eisenstein_gtilde(4, 60) * eisenstein_gtilde(4, 60));
    CHECK(realize(FormalVec{{FS::P(2, 6, 0, 0), 1}}, t) == eisenstein_gtilde(2, 60) * eisenstein_gtilde(6, 60));
    CHECK(realize(FormalVec{{FS::G1(3, 1), 2}}, t) == qs_qderiv(eisenstein_gtilde(2, 60)));
  }

  TEST_CASE("realization kills every defining relation") {
    const auto& t = table8();
    for (int K = 2; K <= 10; ++K) {
      const RelationSet rs = relation_set(K);
      for (const auto& g : rs.generators()) CHECK_MESSAGE(realize(g, t).is_zero(), g.to_string());
      for (const auto& g : rs.generators()) CHECK(realize_bernoulli(g, t) == 0);
    }
  }

  TEST_CASE("derived relations realize to zero") {
    const auto& t = table8();
    for (int k = 4; k <= 10; k += 2) {
      for (int k1 = 1; k1 < k; ++k1) CHECK(realize(theorem41_vector(k1, k - k1), t).is_zero());
      CHECK(realize(corollary_i_vector(k), t).is_zero());
      CHECK_FALSE(realize(corollary_i_vector(k, true), t).is_zero());
    }
    for (const char* name : {"ramanujan2", "ramanujan4", "ramanujan6", "g8", "g10"})
      CHECK_MESSAGE(realize(named_identity(name), t).is_zero(), name);
    CHECK_FALSE(realize(named_identity("ramanujan4-printed"), t).is_zero());
  }

  TEST_CASE("the standalone Bernoulli realization") {
    for (int K = 2; K <= 10; ++K) {
      const RelationSet rs = relation_set(K);
      for (const auto& g : rs.generators()) CHECK(realize_bernoulli(g) == 0);
    }
    CHECK(realize_bernoulli(FormalVec{{FS::G1(4, 0), 1}}) == Rational(1, 1440));
    CHECK(realize_bernoulli(FormalVec{{FS::P(2, 2, 0, 0), 1}}) == Rational(1, 576));
  }

  TEST_CASE("double zeta vectors are realized through the map into DE") {
    const auto& t = table8();
    const FormalVec dz{{FS::ZZ(2, 2), 1}};
    CHECK(realize(dz, t) == realize(dz_to_de(dz), t));
  }

  TEST_CASE("symbols beyond the table are rejected") {
    const auto& t = table8();
    CHECK_THROWS_AS(realize(FormalVec{{FS::G1(12, 0), 1}}, t), std::out_of_range);
    CHECK_THROWS_AS(realize(FormalVec{{FS::G2(6, 5, 0, 0), 1}}, t), std::out_of_range);
  }

  TEST_CASE("realization images") {
    CHECK(verify_realization_images(9, 8, 40).passed());
    CHECK(verify_realization_images(table8(), 6, 3).passed());
    CHECK_THROWS(verify_realization_images(table8(), 12, 3));
  }
}
