#include "qmzv/formal_space.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "qmzv/multiseries.hpp"

namespace qmzv {

// ----------------------------------------------------------- FormalSymbol

FormalSymbol FormalSymbol::G1(int k, int d) {
  if (k < 1 || d < 0) throw std::invalid_argument("G(k;d) requires k >= 1, d >= 0");
  return {SymbolKind::G1, {k, d, 0, 0}};
}

FormalSymbol FormalSymbol::G2(int k1, int k2, int d1, int d2) {
  if (k1 < 1 || k2 < 1 || d1 < 0 || d2 < 0) throw std::invalid_argument("G(k1,k2;d1,d2) requires k >= 1, d >= 0");
  return {SymbolKind::G2, {k1, k2, d1, d2}};
}

FormalSymbol FormalSymbol::P(int k1, int k2, int d1, int d2) {
  if (k1 < 1 || k2 < 1 || d1 < 0 || d2 < 0) throw std::invalid_argument("P(k1,k2;d1,d2) requires k >= 1, d >= 0");
  return {SymbolKind::P, {k1, k2, d1, d2}};
}

FormalSymbol FormalSymbol::Z(int k) {
  if (k < 1) throw std::invalid_argument("Z_k requires k >= 1");
  return {SymbolKind::Z, {k, 0, 0, 0}};
}

FormalSymbol FormalSymbol::ZZ(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("Z_{k1,k2} requires k1, k2 >= 1");
  return {SymbolKind::ZZ, {k1, k2, 0, 0}};
}

FormalSymbol FormalSymbol::PZ(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("P_{k1,k2} requires k1, k2 >= 1");
  return {SymbolKind::PZ, {k1, k2, 0, 0}};
}

Space FormalSymbol::space() const {
  switch (kind_) {
    case SymbolKind::G1:
    case SymbolKind::G2:
    case SymbolKind::P: return Space::de;
    default: return Space::dz;
  }
}

int FormalSymbol::weight() const {
  switch (kind_) {
    case SymbolKind::G1: return params_[0] + params_[1];
    case SymbolKind::Z: return params_[0];
    case SymbolKind::ZZ:
    case SymbolKind::PZ: return params_[0] + params_[1];
    default: return params_[0] + params_[1] + params_[2] + params_[3];
  }
}

std::vector<int> FormalSymbol::ks() const {
  switch (kind_) {
    case SymbolKind::G1:
    case SymbolKind::Z: return {params_[0]};
    default: return {params_[0], params_[1]};
  }
}

std::vector<int> FormalSymbol::ds() const {
  switch (kind_) {
    case SymbolKind::G1: return {params_[1]};
    case SymbolKind::G2:
    case SymbolKind::P: return {params_[2], params_[3]};
    default: return {};
  }
}

std::string_view FormalSymbol::kind_name() const {
  switch (kind_) {
    case SymbolKind::G1: return "G1";
    case SymbolKind::G2: return "G2";
    case SymbolKind::P: return "P";
    case SymbolKind::Z: return "Z";
    case SymbolKind::ZZ: return "ZZ";
    case SymbolKind::PZ: return "PZ";
  }
  return "?";
}

std::string FormalSymbol::to_string() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  };
  switch (kind_) {
    case SymbolKind::G1:
    case SymbolKind::G2: os << "G("; break;
    case SymbolKind::P: os << "P("; break;
    case SymbolKind::Z:
    case SymbolKind::ZZ: os << "Z("; break;
    case SymbolKind::PZ: os << "PZ("; break;
  }
  list(ks());
  if (space() == Space::de) {
    os << ';';
    list(ds());
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const FormalSymbol& a, const FormalSymbol& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.ds() <=> b.ds(); c != 0) return c;
  return a.ks() <=> b.ks();
}

FormalSymbol parse_symbol(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw std::invalid_argument("malformed symbol: " + std::string(text));
  std::string_view name = text.substr(0, open);
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::vector<int> values;
  while (!body.empty()) {
    auto comma = body.find_first_of(",;");
    std::string_view tok = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed symbol: " + std::string(text));
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  auto need = [&](std::size_t n) {
    if (values.size() != n) throw std::invalid_argument("wrong parameter count in symbol: " + std::string(text));
  };
  if (name == "G1" || (name == "G" && values.size() == 2)) {
    need(2);
    return FormalSymbol::G1(values[0], values[1]);
  }
  if (name == "G2" || name == "G") {
    need(4);
    return FormalSymbol::G2(values[0], values[1], values[2], values[3]);
  }
  if (name == "P") {
    need(4);
    return FormalSymbol::P(values[0], values[1], values[2], values[3]);
  }
  if (name == "Z") {
    if (values.size() == 1) return FormalSymbol::Z(values[0]);
    need(2);
    return FormalSymbol::ZZ(values[0], values[1]);
  }
  if (name == "ZZ") {
    need(2);
    return FormalSymbol::ZZ(values[0], values[1]);
  }
  if (name == "PZ") {
    need(2);
    return FormalSymbol::PZ(values[0], values[1]);
  }
  throw std::invalid_argument("unknown symbol kind: " + std::string(text));
}

// -------------------------------------------------------------- FormalVec

FormalVec::FormalVec(std::initializer_list<std::pair<FormalSymbol, Rational>> terms) {
  for (const auto& [s, c] : terms) add(s, c);
}

void FormalVec::add(const FormalSymbol& s, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty()) {
    const FormalSymbol& first = terms_.begin()->first;
    if (first.weight() != s.weight())
      throw std::invalid_argument("inhomogeneous formal vector: " + first.to_string() + " vs " + s.to_string());
    if (first.space() != s.space())
      throw std::invalid_argument("formal vector mixes Dz and DE symbols");
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> FormalVec::weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

Rational FormalVec::coefficient(const FormalSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string FormalVec::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << '*';
    os << s.to_string();
    first = false;
  }
  return os.str();
}

FormalVec& FormalVec::operator+=(const FormalVec& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FormalVec& FormalVec::operator-=(const FormalVec& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FormalVec& FormalVec::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

// ------------------------------------------------------------ enumeration

std::vector<FormalSymbol> symbol_basis(int weight, Space space) {
  if (weight < 1) throw std::invalid_argument("weight must be >= 1");
  std::vector<FormalSymbol> out;
  if (space == Space::de) {
    for (int d = 0; d <= weight - 1; ++d) out.push_back(FormalSymbol::G1(weight - d, d));
    for (int k1 = 1; k1 < weight; ++k1)
      for (int k2 = 1; k1 + k2 <= weight; ++k2)
        for (int d1 = 0; k1 + k2 + d1 <= weight; ++d1) {
          const int d2 = weight - k1 - k2 - d1;
          out.push_back(FormalSymbol::G2(k1, k2, d1, d2));
          out.push_back(FormalSymbol::P(k1, k2, d1, d2));
        }
  } else {
    out.push_back(FormalSymbol::Z(weight));
    for (int k1 = 1; k1 < weight; ++k1) {
      out.push_back(FormalSymbol::ZZ(k1, weight - k1));
      out.push_back(FormalSymbol::PZ(k1, weight - k1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Rational sign(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

FormalVec de_relation(RelationKind kind, int k1, int k2, int d1, int d2) {
  FormalVec v;
  v.add(FormalSymbol::P(k1, k2, d1, d2), 1);
  if (kind == RelationKind::stuffle) {
    v.add(FormalSymbol::G2(k1, k2, d1, d2), -1);
    v.add(FormalSymbol::G2(k2, k1, d2, d1), -1);
    v.add(FormalSymbol::G1(k1 + k2, d1 + d2), -1);
    return v;
  }
  const int K = k1 + k2;
  const int D = d1 + d2;
  for (int l1 = 1; l1 <= K - 1; ++l1) {
    for (int e1 = 0; e1 <= D; ++e1) {
      Rational c = Rational(binomial(l1 - 1, k1 - 1) * binomial(d1, e1)) * sign(d1 - e1) +
                   Rational(binomial(l1 - 1, k2 - 1) * binomial(d2, e1)) * sign(d2 - e1);
      v.add(FormalSymbol::G2(l1, K - l1, e1, D - e1), -c);
    }
  }
  Rational last = ratio(factorial(d1) * factorial(d2) * binomial(K - 2, k1 - 1), factorial(D + 1));
  v.add(FormalSymbol::G1(K - 1, D + 1), -last);
  return v;
}

// ------------------------------------------------------------ RelationSet

RelationSet::RelationSet(int weight, std::vector<FormalSymbol> symbols, std::vector<FormalVec> generators)
    : weight_(weight), symbols_(std::move(symbols)), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].weight() != weight_) throw std::invalid_argument("basis symbol of the wrong weight");
    column_of_.emplace(symbols_[i], i);
  }
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    SparseRow v = to_columns(generators_[g]);
    auto subtracted = reduce(v);
    if (v.empty()) continue;
    Row row;
    row.combo.emplace(g, Rational(1));
    for (const auto& [i, c] : subtracted) {
      auto& slot = row.combo[i];
      slot -= c;
      if (slot == 0) row.combo.erase(i);
    }
    const Rational inv = 1 / v.begin()->second;
    for (auto& [col, c] : v) c *= inv;
    for (auto& [i, c] : row.combo) c *= inv;
    row.entries = std::move(v);
    const std::size_t pivot = row.entries.begin()->first;
    echelon_.emplace(pivot, std::move(row));
  }
}

std::vector<std::size_t> RelationSet::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : echelon_) out.push_back(p);
  return out;
}

RelationSet::SparseRow RelationSet::to_columns(const FormalVec& v) const {
  SparseRow row;
  for (const auto& [s, c] : v.terms()) {
    auto it = column_of_.find(s);
    if (it == column_of_.end()) throw std::invalid_argument("symbol " + s.to_string() + " is not in the basis");
    row.emplace(it->second, c);
  }
  return row;
}

FormalVec RelationSet::from_columns(const SparseRow& row) const {
  FormalVec v;
  for (const auto& [col, c] : row) v.add(symbols_[col], c);
  return v;
}

std::map<std::size_t, Rational> RelationSet::reduce(SparseRow& v) const {
  std::map<std::size_t, Rational> subtracted;
  Rational t;
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t col = it->first;
    auto pr = echelon_.find(col);
    if (pr == echelon_.end()) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    for (const auto& [c, x] : pr->second.entries) {
      t = f * x;
      auto [slot, inserted] = v.try_emplace(c, -t);
      if (!inserted) {
        slot->second -= t;
        if (slot->second == 0) v.erase(slot);
      }
    }
    for (const auto& [g, x] : pr->second.combo) {
      auto& slot = subtracted[g];
      slot += f * x;
      if (slot == 0) subtracted.erase(g);
    }
    it = v.upper_bound(col);
  }
  return subtracted;
}

SpanResult RelationSet::in_span(const FormalVec& v) const {
  if (auto w = v.weight(); w && *w != weight_)
    throw std::invalid_argument("vector weight " + std::to_string(*w) + " does not match relation weight " +
                                std::to_string(weight_));
  SparseRow row = to_columns(v);
  auto subtracted = reduce(row);
  SpanResult result;
  result.in_span = row.empty();
  result.residue = from_columns(row);
  if (result.in_span) {
    if (combine(subtracted) != v) throw std::logic_error("span certificate failed re-verification");
    result.certificate = std::move(subtracted);
  }
  return result;
}

FormalVec RelationSet::combine(const std::map<std::size_t, Rational>& coeffs) const {
  FormalVec out;
  for (const auto& [g, c] : coeffs) out += generators_.at(g) * c;
  return out;
}

RelationSet relation_set(int weight) {
  std::vector<FormalVec> gens;
  for (int k1 = 1; k1 < weight; ++k1)
    for (int k2 = 1; k1 + k2 <= weight; ++k2)
      for (int d1 = 0; k1 + k2 + d1 <= weight; ++d1) {
        const int d2 = weight - k1 - k2 - d1;
        gens.push_back(de_relation(RelationKind::stuffle, k1, k2, d1, d2));
        gens.push_back(de_relation(RelationKind::shuffle, k1, k2, d1, d2));
      }
  return RelationSet(weight, symbol_basis(weight, Space::de), std::move(gens));
}

// ------------------------------------------------------------- Dz and map

std::pair<FormalVec, FormalVec> dz_relation(int k1, int k2) {
  const int k = k1 + k2;
  FormalVec stuffle;
  stuffle.add(FormalSymbol::PZ(k1, k2), 1);
  stuffle.add(FormalSymbol::ZZ(k1, k2), -1);
  stuffle.add(FormalSymbol::ZZ(k2, k1), -1);
  stuffle.add(FormalSymbol::Z(k), -1);
  FormalVec shuffle;
  shuffle.add(FormalSymbol::PZ(k1, k2), 1);
  for (int j = 1; j <= k - 1; ++j)
    shuffle.add(FormalSymbol::ZZ(j, k - j), -Rational(binomial(j - 1, k1 - 1) + binomial(j - 1, k2 - 1)));
  return {stuffle, shuffle};
}

RelationSet dz_relation_set(int weight) {
  std::vector<FormalVec> gens;
  for (int k1 = 1; k1 < weight; ++k1) {
    auto [st, sh] = dz_relation(k1, weight - k1);
    gens.push_back(std::move(st));
    gens.push_back(std::move(sh));
  }
  return RelationSet(weight, symbol_basis(weight, Space::dz), std::move(gens));
}

namespace {

FormalVec dz_symbol_image(const FormalSymbol& s) {
  using FS = FormalSymbol;
  const Rational half(1, 2);
  FormalVec out;
  const auto ks = s.ks();
  switch (s.kind()) {
    case SymbolKind::Z: {
      const int k = ks[0];
      out.add(FS::G1(k, 0), 1);
      if (k == 2) out.add(FS::G1(2, 0), -1);
      break;
    }
    case SymbolKind::ZZ: {
      const int k1 = ks[0], k2 = ks[1];
      out.add(FS::G2(k1, k2, 0, 0), 1);
      if (k2 == 1) out.add(FS::G1(k1, 1), half);
      if (k1 == 1) out.add(FS::G1(k2, 1), -half);
      if (k1 == 2) out.add(FS::G1(k2 + 1, 1), half);
      break;
    }
    case SymbolKind::PZ: {
      const int k1 = ks[0], k2 = ks[1];
      out.add(FS::P(k1, k2, 0, 0), 1);
      if (k1 == 2) out.add(FS::G1(k2 + 1, 1), half);
      if (k2 == 2) out.add(FS::G1(k1 + 1, 1), half);
      if (k1 * k2 == 1) out.add(FS::G1(2, 0), -1);
      break;
    }
    default: out.add(s, 1);
  }
  return out;
}

}  // namespace

FormalVec dz_to_de(const FormalVec& v) {
  FormalVec out;
  for (const auto& [s, c] : v.terms()) out += dz_symbol_image(s) * c;
  return out;
}

WellDefinedReport welldefined_check(int weight) {
  WellDefinedReport report;
  report.weight = weight;
  const RelationSet rs = relation_set(weight);
  for (int k1 = 1; k1 < weight; ++k1) {
    const int k2 = weight - k1;
    auto [st, sh] = dz_relation(k1, k2);
    for (const auto& [name, rel] : {std::pair{"stuffle", st}, std::pair{"shuffle", sh}}) {
      ++report.relations_checked;
      auto res = rs.in_span(dz_to_de(rel));
      if (!res.in_span)
        report.failures.emplace_back(std::string(name) + "(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                                     res.residue);
    }
  }
  return report;
}

// --------------------------------------------------- derived identities

namespace {

void require_even_weight(int k, int min_k, const char* what) {
  if (k < min_k || k % 2 != 0)
    throw std::invalid_argument(std::string(what) + " requires an even weight >= " + std::to_string(min_k));
}

Rational theorem_lhs(int k1, int k2) {
  return Rational(binomial(k1 + k2, k2) - Integer(k1 % 2 == 0 ? 1 : -1)) / 2;
}

Rational theorem_p_coeff(int k, int k1, int k2, int j) {
  return Rational(binomial(k - j - 1, k1 - 1) + binomial(k - j - 1, k2 - 1) - delta(j, k1));
}

}  // namespace

FormalVec theorem41_vector(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("theorem relation requires k1, k2 >= 1");
  const int k = k1 + k2;
  require_even_weight(k, 4, "theorem relation");
  FormalVec v;
  v.add(FormalSymbol::G1(k, 0), theorem_lhs(k1, k2));
  for (int j = 2; j <= k - 2; j += 2) v.add(FormalSymbol::P(j, k - j, 0, 0), -theorem_p_coeff(k, k1, k2, j));
  Rational g = Rational(binomial(k - 3, k1 - 1) + binomial(k - 3, k2 - 1) + delta(k1, 1) + delta(k2, 1)) / 2;
  v.add(FormalSymbol::G1(k - 1, 1), -g);
  return v;
}

FormalVec theorem41_dz_vector(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("theorem relation requires k1, k2 >= 1");
  const int k = k1 + k2;
  require_even_weight(k, 4, "theorem relation");
  FormalVec v;
  v.add(FormalSymbol::Z(k), theorem_lhs(k1, k2));
  for (int j = 2; j <= k - 2; j += 2) v.add(FormalSymbol::PZ(j, k - j), -theorem_p_coeff(k, k1, k2, j));
  return v;
}

FormalVec corollary_i_vector(int k, bool printed_sign) {
  require_even_weight(k, 4, "k1 = 1 product relation");
  FormalVec v;
  v.add(FormalSymbol::G1(k - 1, 1), 1);
  v.add(FormalSymbol::G1(k, 0), -ratio(k + 1, 2));
  const Rational s = printed_sign ? Rational(-1) : Rational(1);
  for (int k1 = 2; k1 <= k - 2; k1 += 2) v.add(FormalSymbol::P(k1, k - k1, 0, 0), s);
  return v;
}

FormalVec corollary_ii_vector(int k) {
  require_even_weight(k, 6, "weight-k square relation");
  FormalVec v;
  v.add(FormalSymbol::G1(k, 0), ratio((k + 1) * (k - 1) * (k - 6), 12));
  for (int k1 = 4; k1 <= k - 4; k1 += 2) v.add(FormalSymbol::P(k1, k - k1, 0, 0), -Rational((k1 - 1) * (k - k1 - 1)));
  return v;
}

FormalVec named_identity(std::string_view name) {
  using FS = FormalSymbol;
  if (name == "ramanujan2")
    return FormalVec{{FS::G1(3, 1), 2}, {FS::G1(4, 0), -5}, {FS::P(2, 2, 0, 0), 2}};
  if (name == "ramanujan4")
    return FormalVec{{FS::G1(5, 1), 4}, {FS::G1(6, 0), -14}, {FS::P(2, 4, 0, 0), 8}};
  if (name == "ramanujan4-printed")
    return FormalVec{{FS::G1(5, 1), 4}, {FS::G1(6, 0), -8}, {FS::P(2, 4, 0, 0), 14}};
  if (name == "ramanujan6")
    return FormalVec{{FS::G1(7, 1), 6}, {FS::P(4, 4, 0, 0), Rational(-120, 7)}, {FS::P(2, 6, 0, 0), 12}};
  if (name == "g8") return FormalVec{{FS::G1(8, 0), 1}, {FS::P(4, 4, 0, 0), Rational(-6, 7)}};
  if (name == "g10") return FormalVec{{FS::G1(10, 0), 1}, {FS::P(4, 6, 0, 0), Rational(-10, 11)}};
  throw std::invalid_argument("unknown identity: " + std::string(name));
}

// ------------------------------------------- generating-series relations

QdshReport qdsh_consistency(int weight) {
  if (weight < 2) throw std::invalid_argument("qdsh_consistency requires weight >= 2");
  using FS = FormalSymbol;
  const int D = weight - 2;

  // Generating series with formal symbols as coefficients; G1 one degree higher
  // so that the divided differences are exact through degree D.
  MSeries<FormalVec> g1(D + 1);
  for (int deg = 0; deg <= D + 1; ++deg)
    for (int d = 0; d <= deg; ++d)
      g1.add({deg - d, 0, d, 0}, FormalVec{{FS::G1(deg - d + 1, d), ratio(1, factorial(d))}});
  MSeries<FormalVec> g2(D);
  MSeries<FormalVec> pp(D);
  for (int a1 = 0; a1 <= D; ++a1)
    for (int a2 = 0; a1 + a2 <= D; ++a2)
      for (int b1 = 0; a1 + a2 + b1 <= D; ++b1)
        for (int b2 = 0; a1 + a2 + b1 + b2 <= D; ++b2) {
          const Rational c = ratio(1, factorial(b1) * factorial(b2));
          g2.add({a1, a2, b1, b2}, FormalVec{{FS::G2(a1 + 1, a2 + 1, b1, b2), c}});
          pp.add({a1, a2, b1, b2}, FormalVec{{FS::P(a1 + 1, a2 + 1, b1, b2), c}});
        }

  using namespace lf;
  auto stuffle_dd = ms_divided_difference(
      ms_substitute(g1, args(x1, zero, y1 + y2, zero)) - ms_substitute(g1, args(x2, zero, y1 + y2, zero)),
      DividedPair::X);
  auto line1 = pp - g2 - ms_substitute(g2, args(x2, x1, y2, y1)) - stuffle_dd;

  auto shuffle_dd = ms_divided_difference(
      ms_substitute(g1, args(x1 + x2, zero, y1, zero)) - ms_substitute(g1, args(x1 + x2, zero, y2, zero)),
      DividedPair::Y);
  auto line2 = pp - ms_substitute(g2, args(x1 + x2, x2, y1, y2 - y1)) -
               ms_substitute(g2, args(x1 + x2, x1, y2, y1 - y2)) - shuffle_dd;

  std::vector<FormalVec> extracted;
  bool exact = true;
  for (int a1 = 0; a1 <= D; ++a1)
    for (int a2 = 0; a1 + a2 <= D; ++a2)
      for (int b1 = 0; a1 + a2 + b1 <= D; ++b1) {
        const int b2 = D - a1 - a2 - b1;
        for (int line = 0; line < 2; ++line) {
          const auto& series = line == 0 ? line1 : line2;
          FormalVec v = ms_coefficient(series, a1 + 1, a2 + 1, b1, b2);
          const auto kind = line == 0 ? RelationKind::stuffle : RelationKind::shuffle;
          if (v != de_relation(kind, a1 + 1, a2 + 1, b1, b2)) exact = false;
          if (!v.empty()) extracted.push_back(std::move(v));
        }
      }

  const RelationSet defining = relation_set(weight);
  const RelationSet from_series(weight, symbol_basis(weight, Space::de), extracted);

  QdshReport report;
  report.weight = weight;
  report.extracted = extracted.size();
  report.extracted_rank = from_series.rank();
  report.defining_rank = defining.rank();
  report.exact_match = exact;
  bool equal = report.extracted_rank == report.defining_rank;
  for (const auto& g : defining.generators()) equal = equal && from_series.in_span(g).in_span;
  for (const auto& g : extracted) equal = equal && defining.in_span(g).in_span;
  report.spans_equal = equal;
  return report;
}

}  // namespace qmzv
