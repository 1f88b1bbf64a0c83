#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qmzv/brackets.hpp"

using namespace qmzv;

namespace {

// All depth-r indices of the given weight.
std::vector<BiIndex> indices_of_weight(std::size_t r, int w) {
  std::vector<BiIndex> out;
  std::vector<int> k(r, 1), d(r, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == 2 * r) {
      if (left == 0) out.emplace_back(k, d);
      return;
    }
    const bool is_k = i < r;
    for (int v = is_k ? 1 : 0; v <= left; ++v) {
      (is_k ? k[i] : d[i - r]) = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, w);
  return out;
}

}  // namespace

TEST_SUITE("brackets") {
  TEST_CASE("bi-index validation and printing") {
    CHECK(bi(2, 3, 0, 1).weight() == 6);
    CHECK(bi(2, 3, 0, 1).to_string() == "g(2,3;0,1)");
    CHECK_THROWS_AS(BiIndex({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(BiIndex({0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(BiIndex({1}, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(BiIndex({1, 2}, {0}), std::invalid_argument);
    CHECK(bi(1, 2, 5, 5) < bi(2, 1, 0, 0));
  }

  TEST_CASE("eval_bracket examples") {
    CHECK(eval_bracket(bi(2, 0), 6) == QSeries(6, {0, 1, 3, 4, 7, 6, 12}));
    CHECK(eval_bracket(bi(1, 1, 0, 0), 5) == QSeries(5, {0, 0, 0, 1, 2, 5}));
    CHECK(eval_bracket(bi(1, 1), 6) == eval_bracket(bi(2, 0), 6));
  }

  TEST_CASE("eval_bracket agrees with brute force") {
    for (int k = 1; k <= 4; ++k)
      for (int d = 0; d <= 3; ++d) CHECK(eval_bracket(bi(k, d), 30) == oracle::depth_one(k, d, 30));
    for (const auto& idx : indices_of_weight(2, 5)) CHECK(eval_bracket(idx, 18) == oracle::brute_bracket(idx.k(), idx.d(), 18));
    for (const auto& idx : indices_of_weight(3, 5)) CHECK(eval_bracket(idx, 14) == oracle::brute_bracket(idx.k(), idx.d(), 14));
  }

  TEST_CASE("partitions and conjugation") {
    const Partition l({4, 1}, {2, 3});
    CHECK(l.size() == 11);
    const Partition c = conjugate(l);
    CHECK(c == Partition({5, 2}, {1, 3}));
    CHECK(c.size() == 11);
    CHECK(conjugate(Partition({1}, {1})) == Partition({1}, {1}));
    CHECK(conjugate(Partition({2}, {3})) == Partition({3}, {2}));
    CHECK_THROWS_AS(Partition({1, 2}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 1}, {1, 0}), std::invalid_argument);
  }

  TEST_CASE("conjugation is an involution on every enumerated partition") {
    for (std::size_t r = 1; r <= 3; ++r) {
      std::size_t count = 0;
      for_each_partition(r, 16, [&](const Partition& p) {
        ++count;
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).size() == p.size());
        CHECK(conjugate(p).distinct_parts() == r);
      });
      CHECK(count > 0);
    }
  }

  TEST_CASE("partition enumeration counts") {
    // number of partitions of M with exactly r distinct part sizes, summed over M <= N,
    // equals the q^0..q^N mass of g(1,..,1)
    for (std::size_t r = 1; r <= 3; ++r) {
      std::vector<int> ones(r, 1), zeros(r, 0);
      const QSeries g = oracle::brute_bracket(ones, zeros, 14);
      std::vector<long> count(15, 0);
      for_each_partition(r, 14, [&](const Partition& p) { ++count[static_cast<std::size_t>(p.size())]; });
      for (std::size_t M = 0; M <= 14; ++M) CHECK(g[M] == count[M]);
    }
  }

  TEST_CASE("conjugation route agrees with direct evaluation") {
    CHECK(bracket_via_conjugation(bi(2, 0), 10) == eval_bracket(bi(2, 0), 10));
    CHECK(bracket_via_conjugation(bi(1, 1, 1, 2), 20) == eval_bracket(bi(1, 1, 1, 2), 20));
    CHECK(bracket_via_conjugation(bi(2, 1, 0, 0), 20) == eval_bracket(bi(2, 1, 0, 0), 20));
    for (std::size_t r = 1; r <= 3; ++r)
      for (int w = static_cast<int>(r); w <= 6; ++w)
        for (const auto& idx : indices_of_weight(r, w))
          CHECK_MESSAGE(bracket_via_conjugation(idx, 16) == eval_bracket(idx, 16), idx.to_string());
  }

  TEST_CASE("lambda coefficients") {
    CHECK(lambda_coeff(1, 1, 1) == -1);
    CHECK(lambda_coeff(2, 3, 3) == Rational(-1, 12));
    CHECK(lambda_coeff(2, 3, 4) == 0);
    CHECK_THROWS_AS(lambda_coeff(2, 3, 0), std::out_of_range);
    CHECK_THROWS_AS(lambda_coeff(2, 3, 5), std::out_of_range);
    // g(1)^2 = 2 g(1,1) + g(2) - g(1)
    const QSeries g1 = eval_bracket(bi(1, 0), 10);
    CHECK(g1 * g1 == eval_bracket(bi(1, 1, 0, 0), 10) * Rational(2) + eval_bracket(bi(2, 0), 10) - g1);
  }

  TEST_CASE("stuffle expansion examples") {
    CHECK(expand_stuffle(1, 0, 1, 0) == BracketCombo{{bi(1, 1, 0, 0), 2}, {bi(2, 0), 1}, {bi(1, 0), -1}});
    CHECK(expand_stuffle(2, 0, 3, 0) ==
          BracketCombo{{bi(2, 3, 0, 0), 1}, {bi(3, 2, 0, 0), 1}, {bi(5, 0), 1}, {bi(3, 0), Rational(-1, 12)}});
    CHECK(expand_stuffle(1, 1, 1, 2) ==
          BracketCombo{{bi(1, 1, 1, 2), 1}, {bi(1, 1, 2, 1), 1}, {bi(2, 3), 1}, {bi(1, 3), -1}});
  }

  TEST_CASE("shuffle expansion examples") {
    CHECK(expand_shuffle(2, 0, 3, 0) == BracketCombo{{bi(2, 3, 0, 0), 1},
                                                     {bi(3, 2, 0, 0), 3},
                                                     {bi(4, 1, 0, 0), 6},
                                                     {bi(4, 1), 3},
                                                     {bi(4, 0), -3}});
    CHECK(expand_shuffle(1, 0, 1, 0) == BracketCombo{{bi(1, 1, 0, 0), 2}, {bi(1, 1), 1}, {bi(1, 0), -1}});
    const QSeries lhs = eval_bracket(bi(1, 1), 30) * eval_bracket(bi(1, 0), 30);
    CHECK(eval_combo(expand_shuffle(1, 1, 1, 0), 30) == lhs);
  }

  TEST_CASE("products agree with both expansions") {
    for (int k1 = 1; k1 <= 5; ++k1)
      for (int k2 = 1; k2 <= 5; ++k2)
        for (int d1 = 0; d1 <= 3; ++d1)
          for (int d2 = 0; d2 <= 3; ++d2) {
            const QSeries prod = oracle::depth_one(k1, d1, 40) * oracle::depth_one(k2, d2, 40);
            CHECK(eval_combo(expand_stuffle(k1, d1, k2, d2), 40) == prod);
            CHECK(eval_combo(expand_shuffle(k1, d1, k2, d2), 40) == prod);
          }
  }

  TEST_CASE("partition relation examples") {
    CHECK(expand_partition_relation(bi(2, 0)) == BracketCombo{{bi(1, 1), 1}});
    CHECK(expand_partition_relation(bi(1, 2)) == BracketCombo{{bi(3, 0), 2}});
    CHECK(expand_partition_relation(bi(2, 1, 0, 0)) == BracketCombo{{bi(1, 1, 0, 1), 1}});
    const QSeries g = eval_bracket(bi(1, 1, 0, 1), 20);
    CHECK(g[3] == 1);
    CHECK(g[4] == 2);
    CHECK_THROWS_AS(expand_partition_relation(BiIndex({1, 1, 1}, {0, 0, 0})), std::invalid_argument);
  }

  TEST_CASE("partition relation preserves the series") {
    for (std::size_t r = 1; r <= 2; ++r)
      for (int w = static_cast<int>(r); w <= 8; ++w)
        for (const auto& idx : indices_of_weight(r, w))
          CHECK_MESSAGE(eval_combo(expand_partition_relation(idx), 40) == eval_bracket(idx, 40), idx.to_string());
  }

  TEST_CASE("partition relation is an involution") {
    for (std::size_t r = 1; r <= 2; ++r)
      for (int w = static_cast<int>(r); w <= 10; ++w)
        for (const auto& idx : indices_of_weight(r, w))
          CHECK_MESSAGE((expand_partition_relation(expand_partition_relation(idx)) == BracketCombo{{idx, 1}}),
                        idx.to_string());
  }

  TEST_CASE("derivative formula") {
    CHECK(qderiv_bracket(bi(3, 0)) == BracketCombo{{bi(4, 1), 3}});
    CHECK(qderiv_bracket(bi(1, 0)) == BracketCombo{{bi(2, 1), 1}});
    CHECK(qderiv_bracket(bi(1, 1, 0, 0)) == BracketCombo{{bi(2, 1, 1, 0), 1}, {bi(1, 2, 0, 1), 1}});
    for (std::size_t r = 1; r <= 2; ++r)
      for (int w = static_cast<int>(r); w <= 6; ++w)
        for (const auto& idx : indices_of_weight(r, w))
          CHECK(qs_qderiv(eval_bracket(idx, 30)) == eval_combo(qderiv_bracket(idx), 30));
  }

  TEST_CASE("verify_bracket_identity reports the first discrepancy") {
    const BracketProduct lhs{{bi(2, 0), bi(3, 0)}};
    CHECK(verify_bracket_identity(lhs, expand_stuffle(2, 0, 3, 0), 60).equal());
    CHECK(verify_bracket_identity(lhs, expand_shuffle(2, 0, 3, 0), 60).equal());
    BracketCombo mutated = expand_shuffle(2, 0, 3, 0);
    mutated.add(bi(4, 1, 0, 0), -1);  // 6 -> 5
    const auto cmp = verify_bracket_identity(lhs, mutated, 10);
    REQUIRE_FALSE(cmp.equal());
    // g(4,1) starts at q^3 with coefficient 1/6, so that is where the mutation shows
    CHECK(eval_bracket(bi(4, 1, 0, 0), 10)[3] == Rational(1, 6));
    CHECK(*cmp.mismatch == 3);
    CHECK(cmp.lhs_value - cmp.rhs_value == Rational(1, 6));
  }

  TEST_CASE("combo bookkeeping drops zeros") {
    BracketCombo c{{bi(2, 0), 1}};
    c.add(bi(2, 0), -1);
    CHECK(c.empty());
    c += BracketCombo{{bi(3, 0), 2}};
    c *= Rational(0);
    CHECK(c.empty());
  }
}
