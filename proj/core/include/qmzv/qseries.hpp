#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qmzv/exact.hpp"

namespace qmzv {

/// Truncated power series in q with exact rational coefficients, known
/// modulo q^{order+1}. Coefficients are stored densely.
///
/// Arithmetic never invents coefficients: the result of a binary operation
/// has the smaller of the two operand orders.
class QSeries {
public:
  QSeries() = default;
  /// The zero series known to order N.
  explicit QSeries(std::size_t order);
  /// Takes coeffs[0..order]; missing trailing entries are zero, extra ones dropped.
  QSeries(std::size_t order, std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, std::size_t order);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  [[nodiscard]] bool is_zero() const;

  /// Copy restricted to a smaller order (no-op if order >= this->order()).
  [[nodiscard]] QSeries truncated(std::size_t order) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  QSeries& operator*=(const QSeries& o);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a) { return a *= Rational(-1); }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  /// Structural equality: same order and same coefficients.
  friend bool operator==(const QSeries&, const QSeries&) = default;

private:
  std::vector<Rational> coeffs_{Rational(0)};
};

enum class QSeriesOp { add, sub, mul };

QSeries qs_arith(const QSeries& a, const QSeries& b, QSeriesOp op);
QSeries qs_scale(const QSeries& a, const Rational& c);

/// q d/dq: multiplies the q^n coefficient by n. Order is preserved.
QSeries qs_qderiv(const QSeries& a);

/// Result of comparing two series up to their common order.
struct SeriesComparison {
  std::size_t order = 0;                 // common order the comparison covers
  std::optional<std::size_t> mismatch;   // first differing q-degree, if any
  Rational lhs_value;                    // values at the mismatch
  Rational rhs_value;
  [[nodiscard]] bool equal() const { return !mismatch.has_value(); }
};

SeriesComparison compare_series(const QSeries& a, const QSeries& b);

/// sigma_p(n) = sum of d^p over divisors d of n, for n = 0..N (index 0 unused, = 0).
std::vector<Integer> divisor_power_sums(std::size_t N, unsigned p);

/// Normalized Eisenstein series
///   -B_k / (2 k!) + 1/(k-1)! sum_{n>0} sigma_{k-1}(n) q^n     (k >= 2),
/// and g(1) (no constant term) for k = 1. Throws std::domain_error for k < 1.
QSeries eisenstein_gtilde(long k, std::size_t N);

}  // namespace qmzv
