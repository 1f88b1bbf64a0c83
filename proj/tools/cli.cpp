#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qmzv/analytic.hpp"
#include "qmzv/brackets.hpp"
#include "qmzv/formal_space.hpp"
#include "qmzv/realizations.hpp"
#include "qmzv/serialize.hpp"

namespace qmzv::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::vector<int> k;
  std::vector<int> d;
  int k1 = 1, k2 = 1, d1 = 0, d2 = 0;
  std::size_t order = 40;
  int degree = 8;
  std::optional<int> weight;
  std::string target;
  std::string space = "de";
  std::vector<std::string> symbols;
  bool printed_sign = false;
  bool bernoulli = false;
  int kmax = 9;
  std::optional<int> dmax;
  double tolerance = 0;
  int jmax = 0;
  bool json = false;
  std::string out;
};

struct Outcome {
  Json body;
  bool ok = true;
};

// Raised for semantically invalid but well-formed input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json config_json(const RunConfig& c) {
  Json j{{"command", c.command}};
  if (!c.subcommand.empty()) j["subcommand"] = c.subcommand;
  if (!c.k.empty()) j["k"] = c.k;
  if (!c.d.empty()) j["d"] = c.d;
  if (c.command == "verify" && (c.subcommand == "stuffle" || c.subcommand == "shuffle")) {
    j["k1"] = c.k1;
    j["k2"] = c.k2;
    j["d1"] = c.d1;
    j["d2"] = c.d2;
  }
  if (c.weight) j["weight"] = *c.weight;
  if (!c.target.empty()) j["target"] = c.target;
  if (!c.symbols.empty()) j["symbols"] = c.symbols;
  j["order"] = c.order;
  j["degree"] = c.degree;
  return j;
}

BiIndex index_from(const RunConfig& c) {
  if (c.k.empty()) throw UsageError("--k is required");
  std::vector<int> d = c.d;
  if (d.empty()) d.assign(c.k.size(), 0);
  return BiIndex(c.k, d);
}

int require_weight(const RunConfig& c) {
  if (!c.weight) throw UsageError("--weight is required");
  if (*c.weight < 1) throw UsageError("--weight must be >= 1");
  return *c.weight;
}

// ----------------------------------------------------------------- bracket

Outcome cmd_bracket(const RunConfig& c) {
  const BiIndex idx = index_from(c);
  return {Json{{"index", to_json(idx)}, {"weight", idx.weight()}, {"series", to_json(eval_bracket(idx, c.order))}}};
}

// ------------------------------------------------------------------ verify

Outcome series_outcome(const SeriesComparison& cmp, Json extra) {
  extra["comparison"] = to_json(cmp);
  extra["verified"] = cmp.equal();
  return {std::move(extra), cmp.equal()};
}

Outcome report_outcome(const VerificationReport& r) { return {to_json(r), r.passed()}; }

Outcome cmd_verify(const RunConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "stuffle" || s == "shuffle") {
    const BracketCombo rhs =
        s == "stuffle" ? expand_stuffle(c.k1, c.d1, c.k2, c.d2) : expand_shuffle(c.k1, c.d1, c.k2, c.d2);
    const BracketProduct lhs{{bi(c.k1, c.d1), bi(c.k2, c.d2)}};
    return series_outcome(verify_bracket_identity(lhs, rhs, c.order), Json{{"expansion", to_json(rhs)}});
  }
  if (s == "partition") {
    const BiIndex idx = index_from(c);
    const BracketCombo rhs = expand_partition_relation(idx);
    return series_outcome(verify_bracket_identity(BracketCombo{{idx, Rational(1)}}, rhs, c.order),
                          Json{{"expansion", to_json(rhs)}});
  }
  if (s == "conjugation") {
    const BiIndex idx = index_from(c);
    return series_outcome(compare_series(eval_bracket(idx, c.order), bracket_via_conjugation(idx, c.order)),
                          Json::object());
  }
  if (s == "lemma") return report_outcome(verify_lemma_algstruct(c.degree, c.order));
  if (s == "betadsh") return report_outcome(verify_betadsh(c.degree));
  if (s == "eisenstein") return report_outcome(verify_eisenstein_theorem(c.degree, c.order));
  if (s == "images") {
    const int dmax = c.dmax.value_or(c.kmax - 1);
    return report_outcome(verify_realization_images(c.kmax, dmax, c.order));
  }
  throw UsageError("unknown verify subcommand " + s);
}

// ------------------------------------------------------------------ formal

Space space_from(const std::string& s) {
  if (s == "de") return Space::de;
  if (s == "dz") return Space::dz;
  throw UsageError("--space must be de or dz");
}

FormalVec target_vector(const RunConfig& c) {
  const std::string& t = c.target;
  if (t.empty()) {
    if (c.symbols.empty()) throw UsageError("--target or --symbol is required");
    FormalVec v;
    for (const auto& s : c.symbols) v.add(parse_symbol(s), 1);
    return v;
  }
  if (t == "theorem41") {
    if (c.weight && *c.weight != c.k1 + c.k2) throw UsageError("--weight must equal k1 + k2 for theorem41");
    return theorem41_vector(c.k1, c.k2);
  }
  if (t == "cor1") return corollary_i_vector(require_weight(c), c.printed_sign);
  if (t == "cor2") return corollary_ii_vector(require_weight(c));
  return named_identity(t);
}

Outcome cmd_formal(const RunConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "basis") {
    Json symbols = Json::array();
    for (const auto& sym : symbol_basis(require_weight(c), space_from(c.space))) symbols.push_back(to_json(sym));
    return {Json{{"space", c.space}, {"count", symbols.size()}, {"symbols", std::move(symbols)}}};
  }
  if (s == "relations") {
    const int w = require_weight(c);
    const RelationSet rs = space_from(c.space) == Space::de ? relation_set(w) : dz_relation_set(w);
    Json j = to_json(rs);
    j["space"] = c.space;
    j["quotient_dimension"] = rs.symbols().size() - rs.rank();
    return {std::move(j)};
  }
  if (s == "derive") {
    const FormalVec v = target_vector(c);
    const int w = v.weight().value_or(c.weight.value_or(0));
    if (c.weight && *c.weight != w)
      throw UsageError("target has weight " + std::to_string(w) + ", not " + std::to_string(*c.weight));
    if (w < 1) throw UsageError("cannot determine the weight of the target");
    const bool dz = !v.empty() && v.terms().begin()->first.space() == Space::dz;
    const RelationSet rs = dz ? dz_relation_set(w) : relation_set(w);
    const SpanResult res = rs.in_span(v);
    Json j{{"weight", w}, {"vector", to_json(v)}, {"derived", res.in_span}};
    Json cert = to_json(res);
    Json used = Json::array();
    for (const auto& [i, coeff] : res.certificate) used.push_back(Json{{"generator", i}, {"relation", to_json(rs.generators()[i])}});
    j["certificate"] = std::move(cert["certificate"]);
    j["generators_used"] = std::move(used);
    j["residue"] = std::move(cert["residue"]);
    return {std::move(j), res.in_span};
  }
  if (s == "welldefined") {
    const WellDefinedReport r = welldefined_check(require_weight(c));
    return {to_json(r), r.passed()};
  }
  if (s == "qdsh") {
    const QdshReport r = qdsh_consistency(require_weight(c));
    return {to_json(r), r.spans_equal};
  }
  throw UsageError("unknown formal subcommand " + s);
}

// ----------------------------------------------------------------- realize

Outcome cmd_realize(const RunConfig& c) {
  const FormalVec v = target_vector(c);
  const int w = v.weight().value_or(0);
  if (w > c.degree + 2)
    throw UsageError("weight " + std::to_string(w) + " needs --degree >= " + std::to_string(w - 2));
  const RealizationTable table = e_series(c.degree, c.order);
  const QSeries image = realize(v, table);
  Json j{{"vector", to_json(v)}, {"series", to_json(image)}, {"vanishes", image.is_zero()}};
  if (c.bernoulli) j["bernoulli"] = to_json(realize_bernoulli(v, table));
  return {std::move(j)};
}

// ------------------------------------------------------------------ limits

Outcome cmd_limits(const RunConfig& c) {
  const BiIndex idx = index_from(c);
  const double tol = c.tolerance > 0 ? c.tolerance : (idx.depth() >= 2 ? 1e-2 : 1e-3);
  const LimitReport r = limit_check(idx, tol, c.jmax);
  return {to_json(r), r.passed()};
}

// --------------------------------------------------------------- rendering

void render_text(std::ostream& os, const Json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      render_text(os, value, prefix + key + ".");
    } else {
      os << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bi-indexed q-series, formal double Eisenstein spaces and their realizations", "qmzv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto common = [&cfg](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Print JSON instead of text");
    sub->add_option("--out", cfg.out, "Write the result to FILE");
    sub->add_option("--order", cfg.order, "q-order N")->check(CLI::NonNegativeNumber);
    sub->add_option("--degree", cfg.degree, "Generating-series degree bound D")->check(CLI::NonNegativeNumber);
  };
  auto index_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Comma-separated k-tuple")->delimiter(',');
    sub->add_option("--d", cfg.d, "Comma-separated d-tuple (default all zero)")->delimiter(',');
  };
  auto pair_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--k1", cfg.k1, "k1");
    sub->add_option("--k2", cfg.k2, "k2");
    sub->add_option("--d1", cfg.d1, "d1");
    sub->add_option("--d2", cfg.d2, "d2");
  };
  auto target_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--target", cfg.target, "Identity to derive or realize")
        ->check(CLI::IsMember({"theorem41", "cor1", "cor2", "ramanujan2", "ramanujan4", "ramanujan6", "g8", "g10"}));
    sub->add_option("--symbol", cfg.symbols, "Formal symbol such as P(4,4,0,0); repeatable");
    sub->add_flag("--printed-sign", cfg.printed_sign, "Use the opposite sign in cor1");
  };
  auto weight_opt = [&cfg](CLI::App* sub) { sub->add_option("--weight", cfg.weight, "Weight K"); };

  auto* bracket = app.add_subcommand("bracket", "Expand g(k;d) to q-order N");
  common(bracket);
  index_opts(bracket);

  auto* verify = app.add_subcommand("verify", "Check an identity coefficientwise");
  verify->require_subcommand(1);
  for (const char* name : {"stuffle", "shuffle", "partition", "conjugation", "lemma", "betadsh", "eisenstein", "images"}) {
    auto* sub = verify->add_subcommand(name);
    common(sub);
    index_opts(sub);
    pair_opts(sub);
    sub->add_option("--kmax", cfg.kmax, "Largest k for images")->check(CLI::PositiveNumber);
    sub->add_option("--dmax", cfg.dmax, "Largest d for images")->check(CLI::NonNegativeNumber);
  }

  auto* formal = app.add_subcommand("formal", "Formal double Eisenstein / double zeta spaces");
  formal->require_subcommand(1);
  for (const char* name : {"basis", "relations", "derive", "welldefined", "qdsh"}) {
    auto* sub = formal->add_subcommand(name);
    common(sub);
    weight_opt(sub);
    pair_opts(sub);
    target_opts(sub);
    sub->add_option("--space", cfg.space, "de or dz")->check(CLI::IsMember({"de", "dz"}));
  }

  auto* realize_cmd = app.add_subcommand("realize", "Eisenstein realization of a formal vector");
  common(realize_cmd);
  weight_opt(realize_cmd);
  pair_opts(realize_cmd);
  target_opts(realize_cmd);
  realize_cmd->add_flag("--bernoulli", cfg.bernoulli, "Also print the Bernoulli realization");

  auto* limits = app.add_subcommand("limits", "Extrapolate (1-q)^w g(k) as q -> 1");
  common(limits);
  index_opts(limits);
  limits->add_option("--tolerance", cfg.tolerance, "Absolute tolerance (default 1e-3, depth >= 2: 1e-2)");
  limits->add_option("--jmax", cfg.jmax, "Last ladder step j (q = 1 - 2^-j)")->check(CLI::Range(5, 14));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (!chosen->get_subcommands().empty()) cfg.subcommand = chosen->get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    if (cfg.command == "bracket")
      outcome = cmd_bracket(cfg);
    else if (cfg.command == "verify")
      outcome = cmd_verify(cfg);
    else if (cfg.command == "formal")
      outcome = cmd_formal(cfg);
    else if (cfg.command == "realize")
      outcome = cmd_realize(cfg);
    else
      outcome = cmd_limits(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  Json doc{{"config", config_json(cfg)}};
  for (auto& [key, value] : outcome.body.items()) doc[key] = value;
  doc["status"] = outcome.ok ? "ok" : "failed";

  std::ostringstream text;
  if (cfg.json)
    text << doc.dump(2) << '\n';
  else
    render_text(text, doc, "");

  if (cfg.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out << '\n';
      return usage_error;
    }
    file << text.str();
  }
  return outcome.ok ? success : falsified;
}

}  // namespace qmzv::cli
