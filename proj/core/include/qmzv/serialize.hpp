#pragma once

// JSON views of library values. Rationals are always the string "p/q"
// (or "p" for integers) so that output is exact and byte-stable.

#include <nlohmann/json.hpp>

#include "qmzv/analytic.hpp"
#include "qmzv/brackets.hpp"
#include "qmzv/formal_space.hpp"
#include "qmzv/multiseries.hpp"
#include "qmzv/qseries.hpp"
#include "qmzv/realizations.hpp"

namespace qmzv {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// {"order": N, "coeffs": ["c0", "c1", ...]}
Json to_json(const QSeries& s);
Json to_json(const SeriesComparison& c);
Json to_json(const BiIndex& idx);
/// {"terms": [{"k": [..], "d": [..], "coeff": "p/q"}, ...]}
Json to_json(const BracketCombo& combo);

/// ["G1", k, d], ["G2", k1, k2, d1, d2], ...
Json to_json(const FormalSymbol& s);
/// [[symbol, "p/q"], ...] in symbol order.
Json to_json(const FormalVec& v);
/// {"weight", "rank", "symbols", "generators"}
Json to_json(const RelationSet& rs);
/// {"in_span", "certificate": [[generator index, "p/q"], ...], "residue"}
Json to_json(const SpanResult& r);
Json to_json(const WellDefinedReport& r);
Json to_json(const QdshReport& r);

/// {"degree_bound", "terms": [{"monomial": "X1^2*Y2", "coeff": ...}, ...]}
Json to_json(const MSeries<Rational>& m);
Json to_json(const MSeries<QSeries>& m);

Json to_json(const IdentityCheck& c);
Json to_json(const VerificationReport& r);
Json to_json(const LimitReport& r);

/// Inverse of to_json(FormalSymbol); throws std::invalid_argument on malformed input.
FormalSymbol symbol_from_json(const Json& j);
/// Inverse of to_json(FormalVec).
FormalVec formal_vec_from_json(const Json& j);
/// Inverse of to_json(QSeries).
QSeries qseries_from_json(const Json& j);

}  // namespace qmzv
