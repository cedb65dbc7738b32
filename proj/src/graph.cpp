// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/graph.hpp"

#include <algorithm>
#include <numeric>

namespace relgt {

namespace {

void check_vertex(int n, Vertex v) {
  if (v.row < 1 || v.row > n || v.col < 1 || v.col > v.row)
    throw std::invalid_argument("vertex out of range");
}

} // namespace

int GTGraph::vertex_index(Vertex v) const {
  return (v.row - 1) * v.row / 2 + (v.col - 1);
}

GTGraph::GTGraph(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
  if (vertex_count() > 64) throw std::invalid_argument("rank too large for this build");
  for (const auto& [a, b] : arrows_) {
    check_vertex(n_, a);
    check_vertex(n_, b);
    bool consecutive = a.row == b.row + 1 || a.row + 1 == b.row;
    bool top = a.row == n_ && b.row == n_ && a.col != b.col;
    if (!consecutive && !top)
      throw std::invalid_argument("arrow must connect consecutive rows or row-n vertices");
  }
  std::sort(arrows_.begin(), arrows_.end());
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());

  // closure by iterated propagation; grids are tiny
  const std::size_t m = vertex_count();
  reach_.assign(m, 0);
  for (const auto& [a, b] : arrows_)
    reach_[vertex_index(a)] |= std::uint64_t{1} << vertex_index(b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < m; ++u) {
      std::uint64_t acc = reach_[u];
      std::uint64_t bits = reach_[u];
      while (bits) {
        int w = std::countr_zero(bits);
        bits &= bits - 1;
        acc |= reach_[w];
      }
      if (acc != reach_[u]) {
        reach_[u] = acc;
        changed = true;
      }
    }
  }
  for (std::size_t u = 0; u < m; ++u)
    if (reach_[u] & (std::uint64_t{1} << u))
      throw std::invalid_argument("oriented cycle detected");
}

bool GTGraph::has_arrow(Vertex a, Vertex b) const {
  return std::binary_search(arrows_.begin(), arrows_.end(), Arrow{a, b});
}

bool GTGraph::reaches(Vertex a, Vertex b) const {
  return (reach_[vertex_index(a)] >> vertex_index(b)) & 1;
}

GTGraph GTGraph::with_arrows(std::vector<Arrow> extra) const {
  std::vector<Arrow> all = arrows_;
  all.insert(all.end(), extra.begin(), extra.end());
  return GTGraph(n_, std::move(all));
}

GTGraph GTGraph::without_arrows(const std::vector<Arrow>& removed) const {
  std::vector<Arrow> kept;
  for (const auto& a : arrows_)
    if (std::find(removed.begin(), removed.end(), a) == removed.end()) kept.push_back(a);
  return GTGraph(n_, std::move(kept));
}

GTGraph column_chain_graph(int n) {
  std::vector<Arrow> arrows;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      arrows.push_back({{i, j}, {i - 1, j}});
  return GTGraph(n, std::move(arrows));
}

GTGraph transitive_reduction(const GTGraph& g) {
  // an arrow a->b is redundant iff some strict intermediate w has a->w->b
  std::vector<Arrow> kept;
  const int n = g.n();
  for (const auto& [a, b] : g.arrows()) {
    bool redundant = false;
    for (int row = 1; row <= n && !redundant; ++row)
      for (int col = 1; col <= row && !redundant; ++col) {
        Vertex w{row, col};
        if (w == a || w == b) continue;
        if (g.reaches(a, w) && g.reaches(w, b)) redundant = true;
      }
    if (!redundant) kept.push_back({a, b});
  }
  return GTGraph(n, std::move(kept));
}

std::vector<int> component_ids(const GTGraph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.arrows()) {
    int ra = find(g.vertex_index(a));
    int rb = find(g.vertex_index(b));
    if (ra != rb) parent[ra] = rb;
  }
  std::vector<int> id(m);
  for (std::size_t v = 0; v < m; ++v) id[v] = find(static_cast<int>(v));
  return id;
}

std::vector<std::vector<Vertex>> connected_components(const GTGraph& g) {
  auto ids = component_ids(g);
  std::vector<std::vector<Vertex>> out;
  std::vector<int> root_to_slot(ids.size(), -1);
  for (int row = 1; row <= g.n(); ++row)
    for (int col = 1; col <= row; ++col) {
      Vertex v{row, col};
      int r = ids[g.vertex_index(v)];
      if (root_to_slot[r] < 0) {
        root_to_slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[root_to_slot[r]].push_back(v);
    }
  return out;
}

bool is_noncritical(const GTGraph& g) {
  auto ids = component_ids(g);
  for (int k = 1; k < g.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        Vertex u{k, i}, v{k, j};
        if (ids[g.vertex_index(u)] != ids[g.vertex_index(v)]) continue;
        if (!g.reaches(u, v) && !g.reaches(v, u)) return false;
      }
  return true;
}

bool is_ordered(const GTGraph& g) {
  for (int k = 1; k <= g.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (g.reaches({k, j}, {k, i})) return false;
  return true;
}

bool has_crosses(const GTGraph& g) {
  const auto& arrows = g.arrows();
  for (const auto& [a1, b1] : arrows) {
    if (a1.row != b1.row + 1) continue; // down-arrows only
    for (const auto& [a2, b2] : arrows) {
      if (a2.row != a1.row || b2.row != b1.row) continue;
      if (a1.col < a2.col && b2.col < b1.col) return true;
    }
  }
  return false;
}

std::vector<AdjoiningPair> adjoining_pairs(const GTGraph& g) {
  std::vector<AdjoiningPair> out;
  for (int k = 1; k < g.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        if (!g.reaches({k, i}, {k, j})) continue;
        bool blocked = false;
        for (int t = i + 1; t < j && !blocked; ++t)
          if (g.reaches({k, i}, {k, t}) || g.reaches({k, t}, {k, j})) blocked = true;
        if (!blocked) out.push_back({k, i, j});
      }
  return out;
}

bool satisfies_diamond(const GTGraph& g) {
  for (const auto& [k, i, j] : adjoining_pairs(g)) {
    Vertex vi{k, i}, vj{k, j};
    bool upper = false, lower = false;
    for (int p = 1; p <= k + 1; ++p)
      if (g.has_arrow(vi, {k + 1, p}) && g.has_arrow({k + 1, p}, vj)) upper = true;
    for (int q = 1; q <= k - 1; ++q)
      if (g.has_arrow(vi, {k - 1, q}) && g.has_arrow({k - 1, q}, vj)) lower = true;
    if (upper && lower) continue; // diamond pattern

    bool pair_above = false;
    for (int s = 1; s <= k + 1 && !pair_above; ++s)
      for (int t = s + 1; t <= k + 1 && !pair_above; ++t)
        if (g.has_arrow(vi, {k + 1, s}) && g.has_arrow({k + 1, t}, vj)) pair_above = true;
    if (!pair_above) return false;
  }
  return true;
}

RelationVerdict classify_relation_graph(const GTGraph& g) {
  if (!is_ordered(g)) return RelationVerdict::NeedsNormalization;
  if (!is_noncritical(g)) return RelationVerdict::Critical;
  if (has_crosses(g)) return RelationVerdict::Cross;
  if (!satisfies_diamond(g)) return RelationVerdict::Diamond;
  return RelationVerdict::Relation;
}

const char* to_string(RelationVerdict v) {
  switch (v) {
    case RelationVerdict::Relation: return "relation";
    case RelationVerdict::NeedsNormalization: return "order";
    case RelationVerdict::Critical: return "critical";
    case RelationVerdict::Cross: return "cross";
    case RelationVerdict::Diamond: return "diamond";
  }
  return "?";
}

bool is_relation_graph(const GTGraph& g) {
  RelationVerdict v = classify_relation_graph(g);
  if (v == RelationVerdict::NeedsNormalization)
    throw domain_error("graph is not ordered; needs normalization");
  return v == RelationVerdict::Relation;
}

} // namespace relgt
