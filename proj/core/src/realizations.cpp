#include "qmzv/realizations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qmzv/brackets.hpp"

namespace qmzv {

using namespace lf;

MSeries<Rational> b1_series(int D) {
  MSeries<Rational> out(D);
  for (int n = 1; 2 * n - 1 <= D; ++n) {
    const Rational c = -bernoulli(2 * n) / Rational(factorial(2 * n)) / 2;
    out.add({2 * n - 1, 0, 0, 0}, c);
    out.add({0, 0, 2 * n - 1, 0}, c);
  }
  return out;
}

MSeries<Rational> b2_series(int D) {
  const auto b1 = b1_series(D + 1);
  const auto pb = split_product(b1).truncated(D);
  const auto rs = stuffle_quotient(b1);
  const auto rh = shuffle_quotient(b1);
  const Rational third(1, 3), five12(5, 12), one12(1, 12), quarter(1, 4);

  MSeries<Rational> out = pb * third;
  out += ms_substitute(pb, args(x1 - x2, x2, y1, y1 + y2)) * third;
  out -= ms_substitute(rh, args(x1 - x2, x2, y1, y1 + y2)) * five12;
  out -= ms_substitute(rh, args(-x2, x1, -y2, y1)) * one12;
  out += ms_substitute(rh, args(x2 - x1, x1, y2, y1 + y2)) * quarter;
  out -= rs * five12;
  out -= ms_substitute(rs, args(x2 - x1, x2, -y1, y1 + y2)) * one12;
  out += ms_substitute(rs, args(x1 - x2, x1, -y2, y1 + y2)) * quarter;
  return out;
}

namespace {

MSeries<QSeries> g1_series(int bound, std::size_t N) {
  MSeries<QSeries> g1(bound, QSeries(N));
  for (int deg = 0; deg <= bound; ++deg)
    for (int d = 0; d <= deg; ++d)
      g1.add({deg - d, 0, d, 0}, eval_bracket(bi(deg - d + 1, d), N) * ratio(1, factorial(d)));
  return g1;
}

}  // namespace

GSeries g_generating_series(int D, std::size_t N) {
  GSeries out{g1_series(D + 1, N), MSeries<QSeries>(D, QSeries(N))};
  for (int a1 = 0; a1 <= D; ++a1)
    for (int a2 = 0; a1 + a2 <= D; ++a2)
      for (int b1 = 0; a1 + a2 + b1 <= D; ++b1)
        for (int b2 = 0; a1 + a2 + b1 + b2 <= D; ++b2)
          out.g2.add({a1, a2, b1, b2},
                     eval_bracket(bi(a1 + 1, a2 + 1, b1, b2), N) * ratio(1, factorial(b1) * factorial(b2)));
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

namespace {

template <class C>
std::set<Monomial> support_union(const MSeries<C>& a, const MSeries<C>& b, int bound) {
  std::set<Monomial> out;
  for (const auto& [m, c] : a.terms())
    if (total_degree(m) <= bound) out.insert(m);
  for (const auto& [m, c] : b.terms())
    if (total_degree(m) <= bound) out.insert(m);
  return out;
}

}  // namespace

IdentityCheck compare_mseries(std::string name, const MSeries<Rational>& lhs, const MSeries<Rational>& rhs) {
  IdentityCheck check;
  check.name = std::move(name);
  check.degree_bound = std::min(lhs.degree_bound(), rhs.degree_bound());
  for (const auto& m : support_union(lhs, rhs, check.degree_bound)) {
    const Rational& a = lhs.coefficient(m);
    const Rational& b = rhs.coefficient(m);
    if (a != b) {
      check.first = Discrepancy{m, std::nullopt, a.get_str(), b.get_str()};
      break;
    }
  }
  return check;
}

IdentityCheck compare_mseries(std::string name, const MSeries<QSeries>& lhs, const MSeries<QSeries>& rhs) {
  IdentityCheck check;
  check.name = std::move(name);
  check.degree_bound = std::min(lhs.degree_bound(), rhs.degree_bound());
  check.q_order = std::min(lhs.zero().order(), rhs.zero().order());
  for (const auto& m : support_union(lhs, rhs, check.degree_bound)) {
    auto cmp = compare_series(lhs.coefficient(m), rhs.coefficient(m));
    if (!cmp.equal()) {
      check.first = Discrepancy{m, cmp.mismatch, cmp.lhs_value.get_str(), cmp.rhs_value.get_str()};
      break;
    }
  }
  return check;
}

namespace {

// Both double shuffle lines for a depth-one series f1 (bound D+1) and a
// depth-two series f2 (bound D).
template <class C>
VerificationReport double_shuffle_lines(const std::string& prefix, const MSeries<C>& f1, const MSeries<C>& f2) {
  const auto pf = split_product(f1);
  auto stuffle = f2 + ms_substitute(f2, args(x2, x1, y2, y1)) + stuffle_quotient(f1);
  auto shuffle = ms_substitute(f2, args(x1 + x2, x2, y1, y2 - y1)) +
                 ms_substitute(f2, args(x1 + x2, x1, y2, y1 - y2)) + shuffle_quotient(f1);
  VerificationReport report;
  report.checks.push_back(compare_mseries(prefix + " stuffle line", pf, stuffle));
  report.checks.push_back(compare_mseries(prefix + " shuffle line", pf, shuffle));
  return report;
}

}  // namespace

VerificationReport verify_betadsh(int D) {
  return double_shuffle_lines("bernoulli", b1_series(D + 1), b2_series(D));
}

VerificationReport verify_lemma_algstruct(int D, std::size_t N) {
  const auto gs = g_generating_series(D, N);
  const auto& g1 = gs.g1;
  const auto& g2 = gs.g2;
  const auto b1 = b1_series(D + 1);
  const Rational half(1, 2);
  VerificationReport report;
  const auto product = split_product(g1);

  {
    const auto u1 = ms_substitute(g1, args(x1, zero, y1 + y2, zero));
    const auto u2 = ms_substitute(g1, args(x2, zero, y1 + y2, zero));
    const auto corr = ms_substitute(b1, args(x2 - x1, zero, y1 + y2, zero)) -
                      ms_substitute(b1, args(x1 - x2, zero, y1 + y2, zero));
    auto rhs = g2 + ms_substitute(g2, args(x2, x1, y2, y1)) + stuffle_quotient(g1) + ms_mul(corr, u1 - u2) -
               (u1 + u2) * half;
    report.checks.push_back(compare_mseries("g stuffle", product, rhs));
  }
  report.checks.push_back(compare_mseries("g1 partition", g1, ms_substitute(g1, args(y1, zero, x1, zero))));
  report.checks.push_back(compare_mseries("g2 partition", g2, ms_substitute(g2, args(y1 + y2, y1, x2, x1 - x2))));
  {
    const auto v1 = ms_substitute(g1, args(x1 + x2, zero, y1, zero));
    const auto v2 = ms_substitute(g1, args(x1 + x2, zero, y2, zero));
    const auto corr = ms_substitute(b1, args(y2 - y1, zero, x1 + x2, zero)) -
                      ms_substitute(b1, args(y1 - y2, zero, x1 + x2, zero));
    auto rhs = ms_substitute(g2, args(x1 + x2, x1, y2, y1 - y2)) + ms_substitute(g2, args(x1 + x2, x2, y1, y2 - y1)) +
               shuffle_quotient(g1) + ms_mul(corr, v1 - v2) - (v1 + v2) * half;
    report.checks.push_back(compare_mseries("g shuffle", product, rhs));
  }
  return report;
}

MSeries<QSeries> e1_series(int bound, std::size_t N) { return promote(b1_series(bound), N) + g1_series(bound, N); }

RealizationTable e_series(int D, std::size_t N) {
  RealizationTable t;
  t.D = D;
  t.N = N;
  t.b1 = b1_series(D + 1);
  t.b2 = b2_series(D);
  const auto gs = g_generating_series(D, N);
  const auto& g1 = gs.g1;

  t.e1 = promote(t.b1, N) + g1;

  const auto g1_x1_y12 = ms_substitute(g1, args(x1, zero, y1 + y2, zero));
  MSeries<QSeries> e2 = promote(t.b2, N);
  e2 -= ms_mul(ms_substitute(t.b1, args(x1 - x2, zero, y2, zero)), g1_x1_y12);
  e2 -= g1_x1_y12 * Rational(1, 2);
  e2 += ms_mul(ms_substitute(t.b1, args(x2, zero, y2, zero)), g1);
  e2 += ms_mul(ms_substitute(t.b1, args(x1 - x2, zero, y1, zero)), ms_substitute(g1, args(x2, zero, y1 + y2, zero)));
  e2 += gs.g2;
  t.e2 = e2.truncated(D);
  return t;
}

VerificationReport verify_eisenstein_theorem(const RealizationTable& table) {
  return double_shuffle_lines("eisenstein", table.e1, table.e2);
}

VerificationReport verify_eisenstein_theorem(int D, std::size_t N) { return verify_eisenstein_theorem(e_series(D, N)); }

namespace {

template <class C, class Table1, class Table2>
C realize_with(const FormalVec& v, const Table1& t1, const Table2& t2, C acc) {
  const FormalVec de = dz_to_de(v);
  for (const auto& [s, c] : de.terms()) {
    const auto ks = s.ks();
    const auto ds = s.ds();
    switch (s.kind()) {
      case SymbolKind::G1: acc += ms_coefficient(t1, ks[0], ds[0]) * c; break;
      case SymbolKind::G2: acc += ms_coefficient(t2, ks[0], ks[1], ds[0], ds[1]) * c; break;
      case SymbolKind::P:
        acc += (ms_coefficient(t1, ks[0], ds[0]) * ms_coefficient(t1, ks[1], ds[1])) * c;
        break;
      default: throw std::logic_error("dz symbol survived dz_to_de");
    }
  }
  return acc;
}

}  // namespace

QSeries realize(const FormalVec& v, const RealizationTable& table) {
  return realize_with(v, table.e1, table.e2, QSeries(table.N));
}

Rational realize_bernoulli(const FormalVec& v, const RealizationTable& table) {
  return realize_with(v, table.b1, table.b2, Rational(0));
}

Rational realize_bernoulli(const FormalVec& v) {
  const int w = v.weight().value_or(2);
  RealizationTable t;
  t.D = std::max(w - 2, 0);
  t.b1 = b1_series(t.D + 1);
  t.b2 = b2_series(t.D);
  return realize_bernoulli(v, t);
}

namespace {

VerificationReport images_report(const MSeries<QSeries>& e1, std::size_t N, int kmax, int dmax) {
  if (kmax < 1 || dmax < 0) throw std::invalid_argument("kmax >= 1 and dmax >= 0 required");
  VerificationReport report;
  for (int k = 1; k <= kmax; ++k) {
    for (int d = 0; d < k && d <= dmax; ++d) {
      const QSeries lhs = ms_coefficient(e1, k, d);
      QSeries rhs = eisenstein_gtilde(k - d, N);
      for (int i = 0; i < d; ++i) rhs = qs_qderiv(rhs);
      rhs *= ratio(factorial(k - d - 1), factorial(k - 1));
      IdentityCheck check;
      check.name = "image G(" + std::to_string(k) + ";" + std::to_string(d) + ")";
      check.degree_bound = k - 1 + d;
      check.q_order = N;
      auto cmp = compare_series(lhs, rhs);
      if (!cmp.equal())
        check.first = Discrepancy{{k - 1, 0, d, 0}, cmp.mismatch, cmp.lhs_value.get_str(), cmp.rhs_value.get_str()};
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_realization_images(const RealizationTable& table, int kmax, int dmax) {
  return images_report(table.e1, table.N, kmax, dmax);
}

VerificationReport verify_realization_images(int kmax, int dmax, std::size_t N) {
  return images_report(e1_series(std::max(kmax - 1 + std::min(dmax, kmax - 1), 0), N), N, kmax, dmax);
}

}  // namespace qmzv
