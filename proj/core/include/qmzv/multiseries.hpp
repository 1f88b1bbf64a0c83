#pragma once

// Power series in X1, X2, Y1, Y2 truncated at total degree D.
//
// The coefficient type C only needs to be a Q-module (C += C, C -= C,
// C * Rational); multiplication additionally needs C * C. Rational,
// QSeries and FormalVec are the instances used in this library.
//
// Generating-series convention: the object indexed by (k1, k2; d1, d2)
// sits at X1^{k1-1} X2^{k2-1} Y1^{d1}/d1! Y2^{d2}/d2!, so ms_coefficient()
// multiplies the stored coefficient back by d1! d2!.

#include <algorithm>
#include <array>
#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmzv/exact.hpp"
#include "qmzv/qseries.hpp"

namespace qmzv {

enum Var : int { X1 = 0, X2 = 1, Y1 = 2, Y2 = 3 };

/// Exponents of (X1, X2, Y1, Y2).
using Monomial = std::array<int, 4>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

/// Homogeneous linear form a1 X1 + a2 X2 + b1 Y1 + b2 Y2. A nonzero
/// constant term makes the form inhomogeneous; ms_substitute rejects it.
struct LinearForm {
  std::array<long, 4> coeffs{0, 0, 0, 0};
  long constant = 0;

  static LinearForm var(Var v) {
    LinearForm f;
    f.coeffs[static_cast<std::size_t>(v)] = 1;
    return f;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < 4; ++i) a.coeffs[i] += b.coeffs[i];
    a.constant += b.constant;
    return a;
  }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < 4; ++i) a.coeffs[i] -= b.coeffs[i];
    a.constant -= b.constant;
    return a;
  }
  friend LinearForm operator-(LinearForm a) {
    for (auto& c : a.coeffs) c = -c;
    a.constant = -a.constant;
    return a;
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Images of X1, X2, Y1, Y2 (in that order).
using Substitution = std::array<LinearForm, 4>;

/// Substitution F(a1, a2; b1, b2) in the bracket notation of the generating series.
inline Substitution args(LinearForm a1, LinearForm a2, LinearForm b1, LinearForm b2) {
  return {std::move(a1), std::move(a2), std::move(b1), std::move(b2)};
}

inline Substitution identity_substitution() {
  return args(LinearForm::var(X1), LinearForm::var(X2), LinearForm::var(Y1), LinearForm::var(Y2));
}

namespace lf {
inline const LinearForm x1 = LinearForm::var(X1);
inline const LinearForm x2 = LinearForm::var(X2);
inline const LinearForm y1 = LinearForm::var(Y1);
inline const LinearForm y2 = LinearForm::var(Y2);
inline const LinearForm zero{};
}  // namespace lf

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const QSeries& c) { return c.is_zero(); }
template <class C>
concept HasEmpty = requires(const C& c) {
  { c.empty() } -> std::convertible_to<bool>;
};
template <HasEmpty C>
bool coeff_is_zero(const C& c) {
  return c.empty();
}
}  // namespace detail

enum class DividedPair { X, Y };

template <class C>
class MSeries {
public:
  using Terms = std::map<Monomial, C>;

  /// `zero` is the value returned for absent monomials (e.g. the zero QSeries of the
  /// right order); it is never stored.
  explicit MSeries(int degree_bound, C zero = C{}) : bound_(degree_bound), zero_(std::move(zero)) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  }

  [[nodiscard]] int degree_bound() const { return bound_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] const C& zero() const { return zero_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// Adds c at monomial m; monomials beyond the bound are discarded.
  void add(const Monomial& m, const C& c) {
    if (total_degree(m) > bound_ || detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  [[nodiscard]] const C& coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// Copy with a smaller bound (no-op if bound >= degree_bound()).
  [[nodiscard]] MSeries truncated(int bound) const {
    if (bound >= bound_) return *this;
    MSeries out(bound, zero_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) <= bound) out.terms_.emplace(m, c);
    return out;
  }

  MSeries& operator+=(const MSeries& o) { return accumulate(o, false); }
  MSeries& operator-=(const MSeries& o) { return accumulate(o, true); }

  template <class S>
  MSeries& operator*=(const S& s) {
    Terms out;
    for (auto& [m, c] : terms_) {
      C v = c * s;
      if (!detail::coeff_is_zero(v)) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
  friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
  friend MSeries operator-(MSeries a) { return a *= Rational(-1); }
  friend MSeries operator*(MSeries a, const Rational& s) { return a *= s; }
  friend MSeries operator*(const Rational& s, MSeries a) { return a *= s; }

  friend bool operator==(const MSeries& a, const MSeries& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

private:
  MSeries& accumulate(const MSeries& o, bool negate) {
    if (o.bound_ < bound_) *this = truncated(o.bound_);
    zero_ += o.zero_;
    for (const auto& [m, c] : o.terms_) {
      if (total_degree(m) > bound_) continue;
      if (negate)
        add(m, c * Rational(-1));
      else
        add(m, c);
    }
    return *this;
  }

  int bound_;
  C zero_;
  Terms terms_;
};

namespace detail {

using RationalPoly = std::map<Monomial, Rational>;

inline RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b, int bound) {
  RationalPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
      if (total_degree(m) > bound) continue;
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// powers[e] = L^e truncated at `bound`, for e = 0..bound.
inline std::vector<RationalPoly> linear_form_powers(const LinearForm& L, int bound) {
  RationalPoly base;
  for (std::size_t v = 0; v < 4; ++v) {
    if (L.coeffs[v] == 0) continue;
    Monomial m{0, 0, 0, 0};
    m[v] = 1;
    base[m] = Rational(L.coeffs[v]);
  }
  std::vector<RationalPoly> powers;
  powers.push_back(RationalPoly{{Monomial{0, 0, 0, 0}, Rational(1)}});
  for (int e = 1; e <= bound; ++e) powers.push_back(poly_mul(powers.back(), base, bound));
  return powers;
}

// GMP products are expression templates; name the evaluated type instead.
template <class A, class B>
struct product_type {
  using type = decltype(std::declval<A>() * std::declval<B>());
};
template <>
struct product_type<Rational, Rational> {
  using type = Rational;
};
template <class A, class B>
using product_t = typename product_type<A, B>::type;

}  // namespace detail

/// Exact truncated product at bound min(Da, Db). Coefficient types may differ
/// (e.g. Rational times QSeries) as long as A * B is defined.
template <class A, class B>
auto ms_mul(const MSeries<A>& a, const MSeries<B>& b) {
  using C = detail::product_t<A, B>;
  const int bound = std::min(a.degree_bound(), b.degree_bound());
  MSeries<C> out(bound, a.zero() * b.zero());
  // bucket b by total degree so the inner loop stops early
  std::vector<std::vector<const std::pair<const Monomial, B>*>> by_degree(static_cast<std::size_t>(bound) + 1);
  for (const auto& kv : b.terms()) {
    int deg = total_degree(kv.first);
    if (deg <= bound) by_degree[static_cast<std::size_t>(deg)].push_back(&kv);
  }
  for (const auto& [ma, ca] : a.terms()) {
    const int da = total_degree(ma);
    for (int db = 0; da + db <= bound; ++db) {
      for (const auto* kv : by_degree[static_cast<std::size_t>(db)]) {
        const Monomial& mb = kv->first;
        Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        out.add(m, ca * kv->second);
      }
    }
  }
  return out;
}

template <class C>
MSeries<C> operator*(const MSeries<C>& a, const MSeries<C>& b) {
  return ms_mul(a, b);
}

enum class MSeriesOp { add, sub, mul };

template <class C>
MSeries<C> ms_arith(const MSeries<C>& a, const MSeries<C>& b, MSeriesOp op) {
  switch (op) {
    case MSeriesOp::add: return a + b;
    case MSeriesOp::sub: return a - b;
    case MSeriesOp::mul: return ms_mul(a, b);
  }
  throw std::invalid_argument("unknown multiseries operation");
}

template <class C, class S>
MSeries<C> ms_scale(MSeries<C> a, const S& s) {
  a *= s;
  return a;
}

/// Composition with a linear homogeneous substitution, truncated at the same bound.
/// Throws std::invalid_argument if any image has a nonzero constant term.
template <class C>
MSeries<C> ms_substitute(const MSeries<C>& a, const Substitution& map) {
  for (const auto& L : map)
    if (L.constant != 0) throw std::invalid_argument("substitution must be linear and homogeneous");
  const int bound = a.degree_bound();
  std::array<std::vector<detail::RationalPoly>, 4> powers;
  for (std::size_t v = 0; v < 4; ++v) powers[v] = detail::linear_form_powers(map[v], bound);

  MSeries<C> out(bound, a.zero());
  for (const auto& [m, c] : a.terms()) {
    detail::RationalPoly image = powers[0][static_cast<std::size_t>(m[0])];
    for (std::size_t v = 1; v < 4; ++v) {
      if (m[v] == 0) continue;
      image = detail::poly_mul(image, powers[v][static_cast<std::size_t>(m[v])], bound);
    }
    for (const auto& [mi, ci] : image) out.add(mi, c * ci);
  }
  return out;
}

/// (f(.., U1, U2, ..) ) / (U1 - U2) for the pair U = X or Y. The input must vanish
/// on the diagonal U2 = U1; otherwise std::domain_error is thrown. The result has
/// bound D - 1.
template <class C>
MSeries<C> ms_divided_difference(const MSeries<C>& a, DividedPair pair) {
  const std::size_t u1 = pair == DividedPair::X ? X1 : Y1;
  const std::size_t u2 = pair == DividedPair::X ? X2 : Y2;
  if (a.degree_bound() < 1) throw std::invalid_argument("divided difference needs degree bound >= 1");

  MSeries<C> diagonal(a.degree_bound(), a.zero());
  for (const auto& [m, c] : a.terms()) {
    Monomial d = m;
    d[u1] += d[u2];
    d[u2] = 0;
    diagonal.add(d, c);
  }
  if (!diagonal.empty())
    throw std::domain_error("divided difference input does not vanish on the diagonal");

  // f = sum c U1^a U2^b = sum c (U1^a - U2^a) U2^b  because f(U2, U2) = 0
  MSeries<C> out(a.degree_bound() - 1, a.zero());
  for (const auto& [m, c] : a.terms()) {
    const int ea = m[u1];
    for (int i = 0; i < ea; ++i) {
      Monomial q = m;
      q[u1] = i;
      q[u2] = m[u2] + ea - 1 - i;
      out.add(q, c);
    }
  }
  return out;
}

/// Normalized coefficient of the (k1, k2; d1, d2) object:
/// [X1^{k1-1} X2^{k2-1} Y1^{d1} Y2^{d2}] times d1! d2!.
/// Throws std::out_of_range if the monomial exceeds the degree bound.
template <class C>
C ms_coefficient(const MSeries<C>& a, int k1, int k2, int d1, int d2) {
  if (k1 < 1 || k2 < 1 || d1 < 0 || d2 < 0) throw std::out_of_range("invalid generating-series index");
  Monomial m{k1 - 1, k2 - 1, d1, d2};
  if (total_degree(m) > a.degree_bound()) throw std::out_of_range("coefficient beyond the degree bound");
  return a.coefficient(m) * Rational(factorial(d1) * factorial(d2));
}

/// Depth-one objects live on (X1, Y1): ms_coefficient(a, k, 1, d, 0).
template <class C>
C ms_coefficient(const MSeries<C>& a, int k, int d) {
  return ms_coefficient(a, k, 1, d, 0);
}

/// Embeds a rational series as constant q-series of order N.
inline MSeries<QSeries> promote(const MSeries<Rational>& a, std::size_t N) {
  MSeries<QSeries> out(a.degree_bound(), QSeries(N));
  for (const auto& [m, c] : a.terms()) out.add(m, QSeries::constant(c, N));
  return out;
}

/// Human-readable monomial, e.g. "X1^2*Y2".
std::string monomial_to_string(const Monomial& m);

}  // namespace qmzv
