#pragma once

// Formal double zeta space Dz_k and formal double Eisenstein space DE_K as
// exact rational vector spaces.
//
// Relations are stored as kernel vectors (LHS - RHS), so "an identity holds
// in the quotient" is the same as "its vector lies in the relation span".

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmzv/exact.hpp"

namespace qmzv {

/// G1 = G(k;d), G2 = G(k1,k2;d1,d2), P = P(k1,k2;d1,d2) span DE_K;
/// Z = Z_k, ZZ = Z_{k1,k2}, PZ = P_{k1,k2} span Dz_k.
enum class SymbolKind { G1, G2, P, Z, ZZ, PZ };

enum class Space { de, dz };

class FormalSymbol {
public:
  static FormalSymbol G1(int k, int d);
  static FormalSymbol G2(int k1, int k2, int d1, int d2);
  static FormalSymbol P(int k1, int k2, int d1, int d2);
  static FormalSymbol Z(int k);
  static FormalSymbol ZZ(int k1, int k2);
  static FormalSymbol PZ(int k1, int k2);

  [[nodiscard]] SymbolKind kind() const { return kind_; }
  [[nodiscard]] Space space() const;
  [[nodiscard]] int weight() const;
  /// k-parameters (1 or 2 entries) and d-parameters (0, 1 or 2 entries).
  [[nodiscard]] std::vector<int> ks() const;
  [[nodiscard]] std::vector<int> ds() const;

  /// Short name used in JSON: "G1", "G2", "P", "Z", "ZZ", "PZ".
  [[nodiscard]] std::string_view kind_name() const;
  /// Readable form, e.g. "G(3;1)", "P(2,2;0,0)", "Z(1,2)".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FormalSymbol&, const FormalSymbol&) = default;
  /// Kind first, then d-parameters, then k-parameters (all lexicographic).
  friend std::strong_ordering operator<=>(const FormalSymbol& a, const FormalSymbol& b);

private:
  FormalSymbol(SymbolKind kind, std::array<int, 4> params) : kind_(kind), params_(params) {}
  SymbolKind kind_;
  std::array<int, 4> params_;
};

/// Parses "G1(k,d)", "G2(k1,k2,d1,d2)", "P(k1,k2,d1,d2)", "Z(k)", "ZZ(k1,k2)", "PZ(k1,k2)".
FormalSymbol parse_symbol(std::string_view text);

/// Finitely supported rational combination of symbols of one weight and one space.
class FormalVec {
public:
  using Terms = std::map<FormalSymbol, Rational>;

  FormalVec() = default;
  FormalVec(std::initializer_list<std::pair<FormalSymbol, Rational>> terms);

  /// Throws std::invalid_argument if s breaks homogeneity (weight or space).
  void add(const FormalSymbol& s, const Rational& c);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] std::optional<int> weight() const;
  [[nodiscard]] Rational coefficient(const FormalSymbol& s) const;
  [[nodiscard]] std::string to_string() const;

  FormalVec& operator+=(const FormalVec& o);
  FormalVec& operator-=(const FormalVec& o);
  FormalVec& operator*=(const Rational& c);
  friend FormalVec operator+(FormalVec a, const FormalVec& b) { return a += b; }
  friend FormalVec operator-(FormalVec a, const FormalVec& b) { return a -= b; }
  friend FormalVec operator*(FormalVec a, const Rational& c) { return a *= c; }
  friend FormalVec operator*(const Rational& c, FormalVec a) { return a *= c; }

  friend bool operator==(const FormalVec&, const FormalVec&) = default;

private:
  Terms terms_;
};

/// Symbols spanning DE_K (space de) or Dz_k (space dz) in canonical order.
std::vector<FormalSymbol> symbol_basis(int weight, Space space);

enum class RelationKind { stuffle, shuffle };

/// P(k1,k2;d1,d2) minus the stuffle or shuffle right-hand side.
FormalVec de_relation(RelationKind kind, int k1, int k2, int d1, int d2);

/// Outcome of a span-membership query.
struct SpanResult {
  bool in_span = false;
  /// Generator index -> coefficient; sum_i c_i * generators()[i] == target exactly.
  std::map<std::size_t, Rational> certificate;
  /// Canonical reduction modulo the relation span (empty iff in_span).
  FormalVec residue;
};

/// Generators of a relation subspace together with an exact row-echelon basis.
/// Columns follow the order of `symbols`; rows are inserted in generator order
/// and each row's pivot is its first nonzero column.
class RelationSet {
public:
  RelationSet(int weight, std::vector<FormalSymbol> symbols, std::vector<FormalVec> generators);

  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] const std::vector<FormalSymbol>& symbols() const { return symbols_; }
  [[nodiscard]] const std::vector<FormalVec>& generators() const { return generators_; }
  [[nodiscard]] std::size_t rank() const { return echelon_.size(); }
  /// Pivot columns (indices into symbols()) in increasing order.
  [[nodiscard]] std::vector<std::size_t> pivots() const;

  /// Throws std::invalid_argument if v has a different weight or contains symbols
  /// outside symbols(). Certificates are re-verified before being returned.
  [[nodiscard]] SpanResult in_span(const FormalVec& v) const;

  /// sum_i c_i generators()[i].
  [[nodiscard]] FormalVec combine(const std::map<std::size_t, Rational>& coeffs) const;

private:
  using SparseRow = std::map<std::size_t, Rational>;
  struct Row {
    SparseRow entries;                       // leading entry is the pivot, equal to 1
    std::map<std::size_t, Rational> combo;   // row = sum combo_i * generator_i
  };

  SparseRow to_columns(const FormalVec& v) const;
  FormalVec from_columns(const SparseRow& row) const;
  // Eliminates all pivot columns from v; returns the multiples of generators subtracted.
  std::map<std::size_t, Rational> reduce(SparseRow& v) const;

  int weight_;
  std::vector<FormalSymbol> symbols_;
  std::map<FormalSymbol, std::size_t> column_of_;
  std::vector<FormalVec> generators_;
  std::map<std::size_t, Row> echelon_;
};

/// Both relation kinds for every admissible (k1,k2,d1,d2) of weight K.
RelationSet relation_set(int weight);

/// Stuffle and shuffle kernel vectors of Dz_k for (k1, k2).
std::pair<FormalVec, FormalVec> dz_relation(int k1, int k2);

/// All relations of Dz_k, k = k1 + k2.
RelationSet dz_relation_set(int weight);

/// Linear map Dz_k -> DE_k on symbols; de-space input is returned unchanged.
FormalVec dz_to_de(const FormalVec& v);

struct WellDefinedReport {
  int weight = 0;
  std::size_t relations_checked = 0;
  /// Relations whose image is not in the relation span: (description, residue).
  std::vector<std::pair<std::string, FormalVec>> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Checks dz_to_de(r) lies in span(relation_set(k)) for every Dz_k relation r.
WellDefinedReport welldefined_check(int weight);

/// LHS - RHS of the product/derivative relation for k = k1 + k2 >= 4 even.
/// Throws std::invalid_argument on parity or range violations.
FormalVec theorem41_vector(int k1, int k2);

/// The same relation as a Dz_k vector, before applying dz_to_de.
FormalVec theorem41_dz_vector(int k1, int k2);

/// G(k-1;1) - (k+1)/2 G(k;0) + sum_{k1+k2=k, k_i >= 2 even} P(k1,k2;0,0), k >= 4 even.
/// With printed_sign = true the sum enters with the opposite sign (not a valid relation).
FormalVec corollary_i_vector(int k, bool printed_sign = false);

/// (k+1)(k-1)(k-6)/12 G(k;0) - sum_{k1+k2=k, k_i >= 4 even} (k1-1)(k2-1) P(k1,k2;0,0), k >= 6 even.
FormalVec corollary_ii_vector(int k);

/// Named quasi-modular identities as kernel vectors:
/// "ramanujan2", "ramanujan4", "ramanujan6", "g8", "g10". "ramanujan4-printed" swaps
/// the 8 and 14 of ramanujan4 and is not a relation; it is kept for regression checks.
/// Throws std::invalid_argument for unknown names.
FormalVec named_identity(std::string_view name);

struct QdshReport {
  int weight = 0;
  std::size_t extracted = 0;        // nonzero coefficient vectors from both lines
  std::size_t extracted_rank = 0;
  std::size_t defining_rank = 0;
  bool spans_equal = false;
  /// Every extracted coefficient equals the matching defining relation exactly.
  bool exact_match = false;
};

/// Rebuilds the weight-K relations from the generating-series form of the
/// double shuffle equations and compares spans with relation_set(K).
QdshReport qdsh_consistency(int weight);

}  // namespace qmzv
