#pragma once

// Floating-point checks of the q -> 1 limits (1-q)^w g(k_1..k_r) -> zeta(k_1..k_r).

#include <cstddef>
#include <vector>

#include "qmzv/brackets.hpp"

namespace qmzv {

/// Multiple zeta value sum_{m_1 > ... > m_r > 0} prod m_i^{-k_i}, summed with
/// m_1 <= M plus an integral estimate of the outer tail. The truncation error is
/// O(M^{1-k_1} log^{r-1} M). Throws std::invalid_argument unless k_1 >= 2 and all k_i >= 1.
long double mzv_oracle(const std::vector<int>& ks, long M = 200000);

/// (1-q)^w g(k; 0) through the Eulerian form
///   sum_{m_1 > ... > m_r} prod ((1-q)/(1-q^{m_j}))^{k_j} P_{k_j}(q^{m_j}),
/// summing outer indices up to M (stopping early once terms are negligible).
/// Throws std::invalid_argument if some d_i != 0 and std::domain_error unless 0 < q < 1.
long double scaled_g_float(const BiIndex& idx, long double q, long M = 1000000);

/// g(k; 0) at a real q in (0,1); same conditions as scaled_g_float.
long double g_float(const BiIndex& idx, long double q, long M = 1000000);

struct LimitReport {
  BiIndex index = bi(2, 0);
  std::vector<long double> epsilons;  // 1 - q along the ladder, strictly decreasing
  std::vector<long double> samples;   // (1-q)^w g at those points
  long double extrapolated = 0;
  long double reference = 0;
  long double abs_error = 0;
  double tolerance = 0;
  [[nodiscard]] bool passed() const { return abs_error <= tolerance; }
};

/// Two-step Richardson extrapolation (halving steps, error terms eps and eps^2)
/// of the last three samples. Needs at least three samples.
long double richardson2(const std::vector<long double>& samples);

/// Samples (1-q)^w g along q_j = 1 - 2^{-j}, j = 3..j_max, extrapolates and
/// compares with mzv_oracle. j_max defaults to 10 in depth one and 8 otherwise
/// (depth >= 2 sums are capped at 5000 outer terms).
LimitReport limit_check(const BiIndex& idx, double tolerance, int j_max = 0);

}  // namespace qmzv
