// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "relgt/json_io.hpp"
#include "support/generators.hpp"

using namespace relgt;

TEST_CASE("tableau json round trip") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 4;
    Tableau t = twisted_tableau(Permutation::all(n)[trial % 2],
                                gen::generic_weight(rng, n));
    json j = to_json(t);
    CHECK(tableau_from_json(j) == t);
    CHECK(to_json(tableau_from_json(j)) == j);
  }
  CHECK_THROWS_AS(tableau_from_json(json{{"n", 3}, {"rows", json::array()}}), parse_error);
  CHECK_THROWS_AS(tableau_from_json(json{{"rows", json::array()}}), parse_error);
}

TEST_CASE("graph json round trip and determinism") {
  Weight lam{Rational(-1, 6), Rational(-2, 3), Rational(5, 6)};
  GTGraph g = graph_of(sigma_tableau(lam, Permutation::identity(3)));
  json j = to_json(g);
  CHECK(graph_from_json(j) == g);
  CHECK(to_json(graph_from_json(j)).dump() == j.dump());
  // arrows are emitted sorted by (source, target)
  auto arrows = j["arrows"];
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    auto prev = arrows[i - 1].get<std::vector<int>>();
    auto cur = arrows[i].get<std::vector<int>>();
    CHECK(prev < cur);
  }
  CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"arrows", json::array({json::array({3, 1, 1, 1})})}}),
                  parse_error);
}

TEST_CASE("sigma graph json round trip") {
  for (const auto& sigma : Permutation::all(4)) {
    SigmaGraph g = g_sigma(sigma);
    CHECK(sigma_graph_from_json(to_json(g)) == g);
  }
}

TEST_CASE("dot output is stable and complete") {
  GTGraph g = column_chain_graph(3);
  std::string dot = to_dot(g);
  CHECK(dot.find("\"(3,1)\" -> \"(2,1)\"") != std::string::npos);
  CHECK(dot.find("\"(1,1)\";") != std::string::npos);
  CHECK(dot == to_dot(g));
}

TEST_CASE("tableau pretty printer shows the triangle") {
  Tableau t = Tableau::from_top_rows(
      2, {{Rational(1), Rational(0)}, {Rational(1)}});
  std::string text = render_tableau_text(t);
  CHECK(text.find("1 0") != std::string::npos);
}
