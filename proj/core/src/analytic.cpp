#include "qmzv/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace qmzv {

long double mzv_oracle(const std::vector<int>& ks, long M) {
  if (ks.empty()) throw std::invalid_argument("empty MZV index");
  for (int k : ks)
    if (k < 1) throw std::invalid_argument("MZV entries must be >= 1");
  if (ks[0] < 2) throw std::invalid_argument("divergent MZV: first entry must be >= 2");
  if (M < 1) throw std::invalid_argument("cutoff must be positive");

  const std::size_t r = ks.size();
  // cumulative[j] = sum over m_{j+1} > ... > m_r with m_{j+1} < m of the inner product
  std::vector<long double> cumulative(r + 1, 0.0L);
  cumulative[r] = 1.0L;
  std::vector<long double> term(r);
  long double total = 0;
  for (long m = 1; m <= M; ++m) {
    const long double lm = static_cast<long double>(m);
    for (std::size_t j = 0; j < r; ++j) term[j] = std::pow(lm, -static_cast<long double>(ks[j])) * cumulative[j + 1];
    total += term[0];
    for (std::size_t j = 1; j < r; ++j) cumulative[j] += term[j];
  }
  // Outer tail: sum_{m > M} m^{-k_1} C(m) with C(m) the inner sum, frozen at C(M+1),
  // plus the logarithmic growth of C when the next entry is 1.
  const long double k1 = ks[0];
  const long double mid = static_cast<long double>(M) + 0.5L;
  const long double zeta_tail = std::pow(mid, 1.0L - k1) / (k1 - 1.0L);
  total += cumulative[1] * zeta_tail;
  if (r == 2 && ks[1] == 1) total += std::pow(mid, 1.0L - k1) / ((k1 - 1.0L) * (k1 - 1.0L));
  return total;
}

long double scaled_g_float(const BiIndex& idx, long double q, long M) {
  for (int d : idx.d())
    if (d != 0) throw std::invalid_argument("float evaluation supports d = 0 only");
  if (!(q > 0.0L && q < 1.0L)) throw std::domain_error("q must lie in (0,1)");
  if (M < 1) throw std::invalid_argument("cutoff must be positive");

  const std::size_t r = idx.depth();
  const auto& ks = idx.k();
  std::vector<const IntPoly*> poly(r);
  for (std::size_t j = 0; j < r; ++j) poly[j] = &eulerian_poly(ks[j]);

  const long double eps = 1.0L - q;
  std::vector<long double> cumulative(r + 1, 0.0L);
  cumulative[r] = 1.0L;
  std::vector<long double> term(r);
  long double total = 0;
  long double qm = 1.0L;
  for (long m = 1; m <= M; ++m) {
    qm *= q;
    const long double ratio_m = eps / (1.0L - qm);
    for (std::size_t j = 0; j < r; ++j)
      term[j] = std::pow(ratio_m, static_cast<long double>(ks[j])) * poly[j]->evaluate(qm) * cumulative[j + 1];
    total += term[0];
    for (std::size_t j = 1; j < r; ++j) cumulative[j] += term[j];
    // terms eventually decay like q^m; stop once the outer one is negligible
    const long double peak = static_cast<long double>(ks[0]) / eps;
    if (static_cast<long double>(m) > peak && term[0] < 1e-16L * total) break;
  }
  return total;
}

long double g_float(const BiIndex& idx, long double q, long M) {
  const long double scaled = scaled_g_float(idx, q, M);
  int w = 0;
  for (int k : idx.k()) w += k;
  return scaled / std::pow(1.0L - q, static_cast<long double>(w));
}

long double richardson2(const std::vector<long double>& samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw std::invalid_argument("Richardson extrapolation needs three samples");
  const long double a = samples[n - 3], b = samples[n - 2], c = samples[n - 1];
  const long double r1 = 2.0L * b - a;
  const long double r2 = 2.0L * c - b;
  return (4.0L * r2 - r1) / 3.0L;
}

LimitReport limit_check(const BiIndex& idx, double tolerance, int j_max) {
  const bool deep = idx.depth() >= 2;
  if (j_max == 0) j_max = deep ? 8 : 10;
  if (j_max < 5) throw std::invalid_argument("ladder needs j_max >= 5");
  const long cap = deep ? 5000 : 1000000;
  LimitReport report;
  report.index = idx;
  report.tolerance = tolerance;
  for (int j = 3; j <= j_max; ++j) {
    const long double eps = std::ldexp(1.0L, -j);
    report.epsilons.push_back(eps);
    report.samples.push_back(scaled_g_float(idx, 1.0L - eps, cap));
  }
  report.extrapolated = richardson2(report.samples);
  report.reference = mzv_oracle(idx.k());
  report.abs_error = std::fabs(report.extrapolated - report.reference);
  return report;
}

}  // namespace qmzv
