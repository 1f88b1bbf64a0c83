#pragma once

// Bi-indexed q-series
//
//   g(k_1..k_r; d_1..d_r) = sum_{m_1 > ... > m_r > 0, n_i > 0}
//                             prod_i m_i^{d_i} n_i^{k_i-1} / (k_i-1)!  q^{sum m_i n_i}
//
// and the exact product / partition relations they satisfy. Every
// expansion here returns a BracketCombo so it can be checked against the
// literal series product with verify_bracket_identity().

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qmzv/exact.hpp"
#include "qmzv/qseries.hpp"

namespace qmzv {

/// Index (k; d) of a g-series. k_i >= 1, d_i >= 0, depth >= 1.
class BiIndex {
public:
  /// Throws std::invalid_argument on length mismatch, depth 0 or out-of-range entries.
  BiIndex(std::vector<int> k, std::vector<int> d);

  [[nodiscard]] const std::vector<int>& k() const { return k_; }
  [[nodiscard]] const std::vector<int>& d() const { return d_; }
  [[nodiscard]] std::size_t depth() const { return k_.size(); }
  [[nodiscard]] int weight() const;
  [[nodiscard]] std::string to_string() const;  // "g(2,3;0,0)"

  friend bool operator==(const BiIndex&, const BiIndex&) = default;
  /// Lexicographic on (k-tuple, d-tuple).
  friend std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b);

private:
  std::vector<int> k_;
  std::vector<int> d_;
};

/// Shorthand for depth-one indices.
inline BiIndex bi(int k, int d) { return BiIndex({k}, {d}); }
inline BiIndex bi(int k1, int k2, int d1, int d2) { return BiIndex({k1, k2}, {d1, d2}); }

/// Young diagram with r distinct part sizes m_1 > ... > m_r > 0 occurring
/// with multiplicities n_1, ..., n_r > 0.
class Partition {
public:
  /// Throws std::invalid_argument unless parts strictly decrease, all entries are positive
  /// and the lengths agree.
  Partition(std::vector<long> parts, std::vector<long> mults);

  [[nodiscard]] const std::vector<long>& parts() const { return parts_; }
  [[nodiscard]] const std::vector<long>& mults() const { return mults_; }
  [[nodiscard]] std::size_t distinct_parts() const { return parts_.size(); }
  [[nodiscard]] long size() const;  // N = sum m_i n_i

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<long> parts_;
  std::vector<long> mults_;
};

/// Reflection of the Young diagram along the diagonal.
Partition conjugate(const Partition& lambda);

/// Calls f on every element of Part_r(M) for 1 <= M <= N (in no particular order).
void for_each_partition(std::size_t r, long N, const std::function<void(const Partition&)>& f);

/// f(lambda) = prod_i m_i^{d_i} n_i^{k_i-1} / (k_i-1)! ; depth must match.
Rational partition_weight(const BiIndex& idx, const Partition& lambda);

/// Finite Q-linear combination of g-series. Zero coefficients are never stored.
class BracketCombo {
public:
  using Terms = std::map<BiIndex, Rational>;

  BracketCombo() = default;
  BracketCombo(std::initializer_list<std::pair<BiIndex, Rational>> terms);

  void add(const BiIndex& idx, const Rational& c);
  BracketCombo& operator+=(const BracketCombo& o);
  BracketCombo& operator*=(const Rational& c);
  friend BracketCombo operator+(BracketCombo a, const BracketCombo& b) { return a += b; }
  friend BracketCombo operator*(const Rational& c, BracketCombo a) { return a *= c; }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const BiIndex& idx) const;

  friend bool operator==(const BracketCombo&, const BracketCombo&) = default;

private:
  Terms terms_;
};

/// q-expansion of g(idx) to order N by direct enumeration of Part_r(M), M <= N.
QSeries eval_bracket(const BiIndex& idx, std::size_t N);

/// Same series via coefficient(q^M) = sum_{lambda in Part_r(M)} f(rho(lambda)).
QSeries bracket_via_conjugation(const BiIndex& idx, std::size_t N);

QSeries eval_combo(const BracketCombo& combo, std::size_t N);

/// lambda^j_{k1,k2}; throws std::out_of_range unless 1 <= j <= k1 + k2 - 1.
Rational lambda_coeff(int k1, int k2, int j);

/// g(k1;d1) g(k2;d2) as g(k1,k2;d1,d2) + g(k2,k1;d2,d1) + g(k1+k2;d1+d2)
///   + sum_j lambda^j_{k1,k2} g(j; d1+d2).
BracketCombo expand_stuffle(int k1, int d1, int k2, int d2);

/// Image of g(idx) under the partition (conjugation) relation; depth 1 or 2.
/// Throws std::invalid_argument for depth > 2.
BracketCombo expand_partition_relation(const BiIndex& idx);

/// Applies expand_partition_relation termwise.
BracketCombo expand_partition_relation(const BracketCombo& combo);

/// Shuffle-product analogue of g(k1;d1) g(k2;d2).
BracketCombo expand_shuffle(int k1, int d1, int k2, int d2);

/// q d/dq g(idx) = sum_j k_j g(.., k_j + 1, ..; .., d_j + 1, ..).
BracketCombo qderiv_bracket(const BiIndex& idx);

/// Left-hand side for verify_bracket_identity: either a product of
/// g-series or a linear combination.
struct BracketProduct {
  std::vector<BiIndex> factors;
};
using BracketExpr = std::variant<BracketProduct, BracketCombo>;

QSeries eval_expr(const BracketExpr& expr, std::size_t N);

/// Evaluates both sides to order N; a mismatch is reported, not thrown.
SeriesComparison verify_bracket_identity(const BracketExpr& lhs, const BracketCombo& rhs, std::size_t N);

}  // namespace qmzv
