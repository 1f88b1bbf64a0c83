#include "qmzv/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qmzv {

std::string monomial_to_string(const Monomial& m) {
  static const char* names[] = {"X1", "X2", "Y1", "Y2"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < 4; ++v) {
    if (m[v] == 0) continue;
    if (!first) os << '*';
    os << names[v];
    if (m[v] > 1) os << '^' << m[v];
    first = false;
  }
  return first ? "1" : os.str();
}

Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const SeriesComparison& c) {
  Json j{{"order", c.order}, {"equal", c.equal()}};
  if (c.mismatch) {
    j["first_mismatch"] = *c.mismatch;
    j["lhs"] = c.lhs_value.get_str();
    j["rhs"] = c.rhs_value.get_str();
  }
  return j;
}

Json to_json(const BiIndex& idx) { return Json{{"k", idx.k()}, {"d", idx.d()}}; }

Json to_json(const BracketCombo& combo) {
  Json terms = Json::array();
  for (const auto& [idx, c] : combo.terms())
    terms.push_back(Json{{"k", idx.k()}, {"d", idx.d()}, {"coeff", c.get_str()}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const FormalSymbol& s) {
  Json j = Json::array({std::string(s.kind_name())});
  for (int k : s.ks()) j.push_back(k);
  for (int d : s.ds()) j.push_back(d);
  return j;
}

Json to_json(const FormalVec& v) {
  Json j = Json::array();
  for (const auto& [s, c] : v.terms()) j.push_back(Json::array({to_json(s), c.get_str()}));
  return j;
}

Json to_json(const RelationSet& rs) {
  Json symbols = Json::array();
  for (const auto& s : rs.symbols()) symbols.push_back(to_json(s));
  Json gens = Json::array();
  for (const auto& g : rs.generators()) gens.push_back(to_json(g));
  return Json{{"weight", rs.weight()}, {"rank", rs.rank()}, {"symbols", std::move(symbols)},
              {"generators", std::move(gens)}};
}

Json to_json(const SpanResult& r) {
  Json cert = Json::array();
  for (const auto& [i, c] : r.certificate) cert.push_back(Json::array({i, c.get_str()}));
  return Json{{"in_span", r.in_span}, {"certificate", std::move(cert)}, {"residue", to_json(r.residue)}};
}

Json to_json(const WellDefinedReport& r) {
  Json failures = Json::array();
  for (const auto& [name, residue] : r.failures)
    failures.push_back(Json{{"relation", name}, {"residue", to_json(residue)}});
  return Json{{"weight", r.weight},
              {"relations_checked", r.relations_checked},
              {"passed", r.passed()},
              {"failures", std::move(failures)}};
}

Json to_json(const QdshReport& r) {
  return Json{{"weight", r.weight},
              {"extracted", r.extracted},
              {"extracted_rank", r.extracted_rank},
              {"defining_rank", r.defining_rank},
              {"spans_equal", r.spans_equal},
              {"exact_match", r.exact_match}};
}

namespace {

template <class C>
Json mseries_json(const MSeries<C>& m) {
  Json terms = Json::array();
  for (const auto& [mono, c] : m.terms())
    terms.push_back(Json{{"monomial", monomial_to_string(mono)}, {"coeff", to_json(c)}});
  return Json{{"degree_bound", m.degree_bound()}, {"terms", std::move(terms)}};
}

std::string format_float(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Le", x);
  return buf;
}

}  // namespace

Json to_json(const MSeries<Rational>& m) { return mseries_json(m); }
Json to_json(const MSeries<QSeries>& m) { return mseries_json(m); }

Json to_json(const IdentityCheck& c) {
  Json j{{"name", c.name}, {"degree_bound", c.degree_bound}};
  if (c.q_order) j["q_order"] = c.q_order;
  j["holds"] = c.holds();
  if (c.first) {
    Json d{{"monomial", monomial_to_string(c.first->monomial)}};
    if (c.first->q_degree) d["q_degree"] = *c.first->q_degree;
    d["lhs"] = c.first->lhs;
    d["rhs"] = c.first->rhs;
    j["first_discrepancy"] = std::move(d);
  }
  return j;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json to_json(const LimitReport& r) {
  Json eps = Json::array();
  Json samples = Json::array();
  for (auto e : r.epsilons) eps.push_back(format_float(e));
  for (auto s : r.samples) samples.push_back(format_float(s));
  return Json{{"index", to_json(r.index)},
              {"epsilons", std::move(eps)},
              {"samples", std::move(samples)},
              {"extrapolated", format_float(r.extrapolated)},
              {"reference", format_float(r.reference)},
              {"abs_error", format_float(r.abs_error)},
              {"tolerance", r.tolerance},
              {"passed", r.passed()}};
}

FormalSymbol symbol_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) throw std::invalid_argument("symbol must be [kind, ...]");
  const std::string kind = j[0].get<std::string>();
  std::vector<int> p;
  for (std::size_t i = 1; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument("symbol parameters must be integers");
    p.push_back(j[i].get<int>());
  }
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw std::invalid_argument("wrong parameter count for " + kind);
  };
  if (kind == "G1") return need(2), FormalSymbol::G1(p[0], p[1]);
  if (kind == "G2") return need(4), FormalSymbol::G2(p[0], p[1], p[2], p[3]);
  if (kind == "P") return need(4), FormalSymbol::P(p[0], p[1], p[2], p[3]);
  if (kind == "Z") return need(1), FormalSymbol::Z(p[0]);
  if (kind == "ZZ") return need(2), FormalSymbol::ZZ(p[0], p[1]);
  if (kind == "PZ") return need(2), FormalSymbol::PZ(p[0], p[1]);
  throw std::invalid_argument("unknown symbol kind " + kind);
}

FormalVec formal_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("formal vector must be an array");
  FormalVec v;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_string())
      throw std::invalid_argument("formal vector term must be [symbol, \"p/q\"]");
    v.add(symbol_from_json(term[0]), parse_rational(term[1].get<std::string>()));
  }
  return v;
}

QSeries qseries_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("q-series must have order and coeffs");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QSeries(j.at("order").get<std::size_t>(), std::move(coeffs));
}

}  // namespace qmzv
