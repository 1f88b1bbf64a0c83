#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the library routine it is used to check.

#include <functional>
#include <random>
#include <vector>

#include "qmzv/brackets.hpp"
#include "qmzv/exact.hpp"
#include "qmzv/qseries.hpp"

namespace oracle {

using qmzv::Integer;
using qmzv::Rational;

inline Integer ipow(long b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline Integer fact(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// sum_{mn = N} m^d n^{k-1} / (k-1)!
inline qmzv::QSeries depth_one(int k, int d, std::size_t N) {
  std::vector<Rational> c(N + 1);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t m = 1; m <= N; ++m)
      if (n % m == 0) c[n] += Rational(ipow(static_cast<long>(m), d) * ipow(static_cast<long>(n / m), k - 1));
  for (auto& x : c) x /= Rational(fact(k - 1));
  return qmzv::QSeries(N, c);
}

/// Brute force over all (m_i, n_i) with m_1 > ... > m_r > 0 and sum m_i n_i <= N.
inline qmzv::QSeries brute_bracket(const std::vector<int>& k, const std::vector<int>& d, std::size_t N) {
  std::vector<Rational> c(N + 1);
  const std::size_t r = k.size();
  std::function<void(std::size_t, long, long, Integer)> rec = [&](std::size_t i, long max_m, long used, Integer w) {
    if (i == r) {
      c[static_cast<std::size_t>(used)] += Rational(w);
      return;
    }
    for (long m = 1; m < max_m; ++m)
      for (long n = 1; used + m * n <= static_cast<long>(N); ++n)
        rec(i + 1, m, used + m * n, w * ipow(m, d[i]) * ipow(n, k[i] - 1));
  };
  rec(0, static_cast<long>(N) + 1, 0, Integer(1));
  Integer denom = 1;
  for (int ki : k) denom *= fact(ki - 1);
  for (auto& x : c) x /= Rational(denom);
  return qmzv::QSeries(N, c);
}

/// Bernoulli numbers from sum_{j=0}^{n} C(n+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_table(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int j = 0; j < m; ++j) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
      s += Rational(c) * b[static_cast<std::size_t>(j)];
    }
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return b;
}

/// Random series with small rational coefficients.
inline qmzv::QSeries random_series(std::mt19937& rng, std::size_t N) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(N + 1);
  for (auto& x : c) x = qmzv::ratio(num(rng), den(rng));
  return qmzv::QSeries(N, c);
}

}  // namespace oracle
