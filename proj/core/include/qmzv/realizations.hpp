#pragma once

// Realizations of the formal double Eisenstein space: the Bernoulli family
// (b1, b2) over Q and the Eisenstein family (E1, E2) over truncated q-series.
//
// Bound conventions: depth-one series are built one degree higher than the
// requested bound D, so divided differences of them land exactly at D.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmzv/formal_space.hpp"
#include "qmzv/multiseries.hpp"
#include "qmzv/qseries.hpp"

namespace qmzv {

/// -1/2 sum_{n>=1} B_{2n}/(2n)! (X1^{2n-1} + Y1^{2n-1}), truncated at total degree D.
MSeries<Rational> b1_series(int D);

/// b1(X1;Y1) b1(X2;Y2) at bound min(D of input).
template <class C>
MSeries<C> split_product(const MSeries<C>& f1) {
  using namespace lf;
  return ms_mul(f1, ms_substitute(f1, args(x2, zero, y2, zero)));
}

/// (f(X1;Y1+Y2) - f(X2;Y1+Y2)) / (X1 - X2) for a depth-one series f of bound D+1.
template <class C>
MSeries<C> stuffle_quotient(const MSeries<C>& f1) {
  using namespace lf;
  return ms_divided_difference(
      ms_substitute(f1, args(x1, zero, y1 + y2, zero)) - ms_substitute(f1, args(x2, zero, y1 + y2, zero)),
      DividedPair::X);
}

/// (f(X1+X2;Y1) - f(X1+X2;Y2)) / (Y1 - Y2) for a depth-one series f of bound D+1.
template <class C>
MSeries<C> shuffle_quotient(const MSeries<C>& f1) {
  using namespace lf;
  return ms_divided_difference(
      ms_substitute(f1, args(x1 + x2, zero, y1, zero)) - ms_substitute(f1, args(x1 + x2, zero, y2, zero)),
      DividedPair::Y);
}

/// The depth-two Bernoulli series b2 at bound D.
MSeries<Rational> b2_series(int D);

/// Depth-one and depth-two generating series of the g-series.
struct GSeries {
  MSeries<QSeries> g1;  // bound D + 1, supported on (X1, Y1)
  MSeries<QSeries> g2;  // bound D
};

/// Coefficients from eval_bracket at q-order N; g1 at bound D + 1, g2 at bound D.
GSeries g_generating_series(int D, std::size_t N);

/// First place where two series differ.
struct Discrepancy {
  Monomial monomial{};
  std::optional<std::size_t> q_degree;  // set for q-series coefficients
  std::string lhs;
  std::string rhs;
};

struct IdentityCheck {
  std::string name;
  int degree_bound = 0;
  std::size_t q_order = 0;  // 0 for rational identities
  std::optional<Discrepancy> first;
  [[nodiscard]] bool holds() const { return !first.has_value(); }
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;
  [[nodiscard]] bool passed() const;
};

/// Coefficientwise comparison at the common degree bound.
IdentityCheck compare_mseries(std::string name, const MSeries<Rational>& lhs, const MSeries<Rational>& rhs);
IdentityCheck compare_mseries(std::string name, const MSeries<QSeries>& lhs, const MSeries<QSeries>& rhs);

/// Both lines of the double shuffle equations of (b1, b2) at bound D.
VerificationReport verify_betadsh(int D);

/// Stuffle, partition (two identities) and shuffle relations of (g1, g2) at bound D, q-order N.
VerificationReport verify_lemma_algstruct(int D, std::size_t N);

struct RealizationTable {
  int D = 0;
  std::size_t N = 0;
  MSeries<QSeries> e1{0};         // bound D + 1
  MSeries<QSeries> e2{0};         // bound D
  MSeries<Rational> b1{0};        // bound D + 1
  MSeries<Rational> b2{0};        // bound D
};

/// E1 = b1 + g1 alone at the given bound (no depth-two work).
MSeries<QSeries> e1_series(int bound, std::size_t N);

/// E1 = b1 + g1 and the mixed series E2; covers symbols of weight <= D + 2.
RealizationTable e_series(int D, std::size_t N);

/// Both lines of the double shuffle equations of (E1, E2) held in the table.
VerificationReport verify_eisenstein_theorem(const RealizationTable& table);
VerificationReport verify_eisenstein_theorem(int D, std::size_t N);

/// Image of a formal vector (Dz vectors go through dz_to_de first).
/// Throws std::out_of_range for symbols beyond the table bounds.
QSeries realize(const FormalVec& v, const RealizationTable& table);

/// Bernoulli realization; reads coefficients of b1, b2 from the table.
Rational realize_bernoulli(const FormalVec& v, const RealizationTable& table);
/// Builds the Bernoulli series just large enough for v.
Rational realize_bernoulli(const FormalVec& v);

/// e1-coefficient at (k, d) against ((k-d-1)!/(k-1)!) (q d/dq)^d G~_{k-d} for
/// 1 <= k <= kmax, 0 <= d < k, d <= dmax. Needs kmax - 1 + dmax <= D + 1.
VerificationReport verify_realization_images(const RealizationTable& table, int kmax, int dmax);
/// Same check on a freshly built E1 of bound kmax - 1 + dmax.
VerificationReport verify_realization_images(int kmax, int dmax, std::size_t N);

}  // namespace qmzv
