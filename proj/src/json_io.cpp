// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/json_io.hpp"

#include <sstream>

namespace relgt {

namespace {

json require(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

} // namespace

json to_json(const Tableau& t) {
  json rows = json::array();
  for (int k = t.n(); k >= 1; --k) {
    json row = json::array();
    for (const auto& e : t.row(k)) row.push_back(to_string(e));
    rows.push_back(std::move(row));
  }
  return json{{"n", t.n()}, {"rows", std::move(rows)}};
}

Tableau tableau_from_json(const json& j) {
  int n = require(j, "n").get<int>();
  auto rows = require(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw parse_error("tableau needs n rows, top row first");
  std::vector<std::vector<Rational>> top_first;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
    top_first.push_back(std::move(r));
  }
  try {
    return Tableau::from_top_rows(n, top_first);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

json to_json(const GTGraph& g) {
  json arrows = json::array();
  for (const auto& [a, b] : g.arrows())
    arrows.push_back(json::array({a.row, a.col, b.row, b.col}));
  return json{{"n", g.n()}, {"arrows", std::move(arrows)}};
}

GTGraph graph_from_json(const json& j) {
  int n = require(j, "n").get<int>();
  std::vector<Arrow> arrows;
  for (const auto& quad : require(j, "arrows")) {
    if (!quad.is_array() || quad.size() != 4) throw parse_error("arrow must be [i,j,r,s]");
    arrows.push_back({{quad[0].get<int>(), quad[1].get<int>()},
                      {quad[2].get<int>(), quad[3].get<int>()}});
  }
  try {
    return GTGraph(n, std::move(arrows));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

json to_json(const SigmaGraph& g) {
  json signs = json::array();
  for (int r = 2; r <= g.n(); ++r)
    for (int s = 1; s < r; ++s) signs.push_back(json::array({r, s, g.sign(r, s)}));
  return json{{"n", g.n()}, {"signs", std::move(signs)}};
}

SigmaGraph sigma_graph_from_json(const json& j) {
  int n = require(j, "n").get<int>();
  SigmaGraph g(n);
  auto signs = require(j, "signs");
  if (signs.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    throw parse_error("sign table must be total");
  for (const auto& triple : signs) {
    if (!triple.is_array() || triple.size() != 3) throw parse_error("sign must be [r,s,v]");
    try {
      g.set_sign(triple[0].get<int>(), triple[1].get<int>(), triple[2].get<int>());
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
  }
  return g;
}

json to_json(const ModuleContext& m, const ModuleVector& v) {
  json terms = json::array();
  for (const auto& [key, coeff] : v.terms()) {
    ShiftVector z = ShiftVector::from_key(m.seed.n(), key);
    terms.push_back(json{{"coeff", to_string(coeff)}, {"tableau", to_json(m.at(z))}});
  }
  return json{{"terms", std::move(terms)}};
}

json witness_report_json(const WitnessReport& report) {
  json lambda = json::array();
  for (const auto& x : report.lambda) lambda.push_back(to_string(x));
  json entries = json::array();
  for (const auto& e : report.entries) {
    json ent{{"sigma", e.sigma.image()},
             {"accepted", e.verdict == RelationVerdict::Relation}};
    if (e.verdict != RelationVerdict::Relation) ent["diagnostic"] = to_string(e.verdict);
    entries.push_back(std::move(ent));
  }
  return json{{"schema", "relgt-witnesses/1"},
              {"n", report.lambda.size()},
              {"lambda", std::move(lambda)},
              {"witness_count", report.witness_count()},
              {"entries", std::move(entries)}};
}

json lower_bound_json(const LowerBoundCertificate& cert) {
  json taus = json::array();
  for (const auto& t : cert.tau_witnesses) taus.push_back(t.image());
  return json{{"bound", cert.bound},
              {"subset", cert.subset},
              {"k", cert.k},
              {"p", cert.p},
              {"tau_witnesses", std::move(taus)},
              {"explanation", cert.explanation}};
}

std::string to_dot(const GTGraph& g) {
  std::ostringstream os;
  os << "digraph relation_graph {\n";
  for (int row = g.n(); row >= 1; --row)
    for (int col = 1; col <= row; ++col)
      os << "  \"(" << row << "," << col << ")\";\n";
  for (const auto& [a, b] : g.arrows())
    os << "  \"(" << a.row << "," << a.col << ")\" -> \"(" << b.row << "," << b.col
       << ")\";\n";
  os << "}\n";
  return os.str();
}

std::string render_tableau_text(const Tableau& t) {
  std::vector<std::vector<std::string>> cells(t.n());
  std::size_t width = 1;
  for (int k = 1; k <= t.n(); ++k) {
    for (const auto& e : t.row(k)) {
      cells[k - 1].push_back(to_string(e));
      width = std::max(width, cells[k - 1].back().size());
    }
  }
  std::ostringstream os;
  for (int k = t.n(); k >= 1; --k) {
    os << std::string(static_cast<std::size_t>(t.n() - k) * (width + 1) / 2, ' ');
    for (int i = 1; i <= k; ++i) {
      std::string s = cells[k - 1][i - 1];
      os << s << std::string(width + 1 - s.size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

} // namespace relgt
