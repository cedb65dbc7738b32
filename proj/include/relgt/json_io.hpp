// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "relgt/localization.hpp"

namespace relgt {

using json = nlohmann::ordered_json;

// {"n": n, "rows": [[...row n...], ..., [l_11]]}, rationals as "p/q" strings
json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

// {"n": n, "arrows": [[i,j,r,s], ...]} with (i,j) -> (r,s), lexicographic
json to_json(const GTGraph& g);
GTGraph graph_from_json(const json& j);

// {"n": n, "signs": [[r,s,+1|-1], ...]}
json to_json(const SigmaGraph& g);
SigmaGraph sigma_graph_from_json(const json& j);

json to_json(const ModuleContext& m, const ModuleVector& v);

json witness_report_json(const WitnessReport& report);
json lower_bound_json(const LowerBoundCertificate& cert);

/// One node per vertex labeled "(i,j)", stable edge ordering.
std::string to_dot(const GTGraph& g);

std::string render_tableau_text(const Tableau& t);

} // namespace relgt
