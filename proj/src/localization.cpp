// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/localization.hpp"

namespace relgt {

namespace {

void validate_spec(const Tableau& seed, const GTGraph& graph) {
  if (!is_realization(seed, graph))
    throw std::invalid_argument("seed tableau is not a realization of the graph");
  // decide on the row-normalized relabeling; the module itself is unchanged
  GTGraph twin = relabel_columns(graph, normalize_rows(seed).row_permutations);
  RelationVerdict v = classify_relation_graph(twin);
  if (v != RelationVerdict::Relation)
    throw std::invalid_argument(std::string("graph is not a relation graph: ") + to_string(v));
}

std::vector<Arrow> row12_arrows(const GTGraph& g) {
  std::vector<Arrow> out;
  for (const auto& a : g.arrows()) {
    int lo = std::min(a.first.row, a.second.row);
    int hi = std::max(a.first.row, a.second.row);
    if (lo == 1 && hi == 2) out.push_back(a);
  }
  return out;
}

} // namespace

ModuleSpec::ModuleSpec(Tableau s, GTGraph g, Permutation perm)
    : seed(std::move(s)), graph(std::move(g)), sigma(std::move(perm)) {
  if (seed.n() != graph.n() || seed.n() != sigma.n())
    throw std::invalid_argument("rank mismatch");
  if (seed.n() < 2) throw std::invalid_argument("localization needs rank >= 2");
  validate_spec(seed, graph);
}

ModuleSpec highest_weight_module(const Weight& lambda, const Permutation& sigma) {
  if (!is_sigma_relation(lambda, sigma))
    throw domain_error("weight is not a sigma-relation weight");
  Tableau seed = sigma_tableau(lambda, sigma);
  GTGraph g = graph_of(seed);
  return ModuleSpec(std::move(seed), std::move(g), sigma);
}

bool f_acts_injectively(const ModuleSpec& m) {
  const Rational& corner = m.seed.entry(1, 1);
  return !in_z_gt(corner - m.seed.entry(2, 1), 0) &&
         !in_z_gt(corner - m.seed.entry(2, 2), 0);
}

ModuleSpec localize(const ModuleSpec& m) {
  if (!f_acts_injectively(m))
    throw domain_error("f does not act injectively; localization refused");
  GTGraph surgered = m.graph.without_arrows(row12_arrows(m.graph));
  return ModuleSpec(m.seed, std::move(surgered), m.sigma);
}

ModuleSpec twisted_localize(const ModuleSpec& m, const Rational& z) {
  ModuleSpec base = localize(m);
  Tableau seed = shift_entry(base.seed, 1, 1, z);
  return ModuleSpec(std::move(seed), base.graph, m.sigma);
}

ModuleSpec twisting_functor(const ModuleSpec& m) {
  if (!f_acts_injectively(m))
    throw domain_error("f does not act injectively; twisting functor refused");
  bool wall_above = false;
  for (int j = 1; j <= 2; ++j)
    if (m.graph.has_arrow({2, j}, {1, 1})) wall_above = true;
  if (!wall_above)
    throw domain_error("f acts surjectively; the twisting functor vanishes");
  Tableau seed = shift_entry(m.seed, 1, 1, 1);
  GTGraph g = graph_of(seed);
  return ModuleSpec(std::move(seed), std::move(g), m.sigma);
}

bool is_simple(const ModuleSpec& m) { return is_simple_realization(m.graph, m.seed); }

} // namespace relgt
