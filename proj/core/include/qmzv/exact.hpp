#pragma once

// Exact integer and rational helpers shared by every other module.
//
// Bernoulli numbers follow the x/(e^x - 1) convention throughout, i.e.
// B_1 = -1/2. The lambda coefficients of the stuffle product and the
// Bernoulli realization are only correct under this convention.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qmzv {

using Integer = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms. Throws std::domain_error if den == 0.
Rational ratio(const Integer& num, const Integer& den);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// C(n, k), zero whenever k < 0, k > n or n < 0.
Integer binomial(long n, long k);

/// n! for n >= 0 (memoized). Throws std::domain_error for n < 0.
const Integer& factorial(long n);

/// B_n with B_1 = -1/2 (memoized, thread-safe).
Rational bernoulli(long n);

/// Dense polynomial with rational coefficients; index = degree.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Rational> coeffs);

  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(long i) const;
  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] long double evaluate(long double x) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Normalized Eulerian polynomial P_k, defined by
///   P_k(X) / (1 - X)^k = sum_{n > 0} n^{k-1} / (k-1)! X^n.
/// deg P_k <= k - 1 and P_k(1) = 1. Throws std::domain_error for k < 1.
const IntPoly& eulerian_poly(long k);

}  // namespace qmzv
