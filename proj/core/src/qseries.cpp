#include "qmzv/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmzv {

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

QSeries QSeries::constant(const Rational& c, std::size_t order) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries QSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return QSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    for (auto& x : coeffs_) x = 0;
  } else if (c != 1) {
    for (auto& x : coeffs_)
      if (x != 0) x *= c;
  }
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  *this = *this * o;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t N = std::min(a.order(), b.order());
  QSeries out(N);
  // Skipping zero coefficients makes products with constants or with
  // sparse series (lacunary g-series, low truncation) linear rather than quadratic.
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j <= N; ++j)
    if (b.coeffs_[j] != 0) nz_b.push_back(j);
  Rational t;
  for (std::size_t i = 0; i <= N; ++i) {
    const Rational& ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j : nz_b) {
      if (i + j > N) break;
      mpq_mul(t.get_mpq_t(), ai.get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out.coeffs_[i + j] += t;
    }
  }
  return out;
}

QSeries qs_arith(const QSeries& a, const QSeries& b, QSeriesOp op) {
  switch (op) {
    case QSeriesOp::add: return a + b;
    case QSeriesOp::sub: return a - b;
    case QSeriesOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown series operation");
}

QSeries qs_scale(const QSeries& a, const Rational& c) { return a * c; }

QSeries qs_qderiv(const QSeries& a) {
  QSeries out(a);
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] *= static_cast<long>(n);
  return out;
}

SeriesComparison compare_series(const QSeries& a, const QSeries& b) {
  SeriesComparison cmp;
  cmp.order = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= cmp.order; ++n) {
    if (a[n] != b[n]) {
      cmp.mismatch = n;
      cmp.lhs_value = a[n];
      cmp.rhs_value = b[n];
      break;
    }
  }
  return cmp;
}

std::vector<Integer> divisor_power_sums(std::size_t N, unsigned p) {
  std::vector<Integer> sigma(N + 1, 0);
  Integer dp;
  for (std::size_t d = 1; d <= N; ++d) {
    mpz_ui_pow_ui(dp.get_mpz_t(), d, p);
    for (std::size_t m = d; m <= N; m += d) sigma[m] += dp;
  }
  return sigma;
}

QSeries eisenstein_gtilde(long k, std::size_t N) {
  if (k < 1) throw std::domain_error("eisenstein_gtilde requires k >= 1");
  auto sigma = divisor_power_sums(N, static_cast<unsigned>(k - 1));
  QSeries out(N);
  if (k >= 2) out[0] = -bernoulli(k) / (2 * Rational(factorial(k)));
  const Rational inv(Integer(1), factorial(k - 1));
  for (std::size_t n = 1; n <= N; ++n) out[n] = Rational(sigma[n]) * inv;
  return out;
}

}  // namespace qmzv
