// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relgt/scalar.hpp"

namespace relgt {

/// Vertex (i,j) of the triangular grid, 1 <= j <= i <= n. Row n is the top row.
struct Vertex {
  int row = 0;
  int col = 0;
  auto operator<=>(const Vertex&) const = default;
};

using Arrow = std::pair<Vertex, Vertex>; // source -> target

struct AdjoiningPair {
  int row = 0; // k <= n-1
  int left = 0;  // i
  int right = 0; // j, i < j
  auto operator<=>(const AdjoiningPair&) const = default;
};

/// Directed graph on the triangular grid. Arrows may only connect vertices
/// in consecutive rows, or two distinct vertices of row n. Oriented cycles
/// and duplicate arrows are rejected at construction. Immutable afterwards;
/// the reachability closure is computed eagerly.
class GTGraph {
public:
  GTGraph(int n, std::vector<Arrow> arrows);

  static GTGraph empty(int n) { return GTGraph(n, {}); }

  int n() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_arrow(Vertex a, Vertex b) const;
  /// Directed path of length >= 1 from a to b.
  bool reaches(Vertex a, Vertex b) const;
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_) * (n_ + 1) / 2; }

  GTGraph with_arrows(std::vector<Arrow> extra) const;
  GTGraph without_arrows(const std::vector<Arrow>& removed) const;

  bool operator==(const GTGraph& other) const {
    return n_ == other.n_ && arrows_ == other.arrows_;
  }

  int vertex_index(Vertex v) const; // dense 0-based index

private:
  int n_;
  std::vector<Arrow> arrows_;               // sorted lexicographically
  std::vector<std::uint64_t> reach_;        // closure bitsets, one word per vertex (n <= 8)
};

/// Column chains (i,j) -> (i-1,j); the standard graph whose realizations are
/// highest weight tableaux for the standard Cartan subalgebra.
GTGraph column_chain_graph(int n);

/// Unique minimal graph with the same reachability relation (input acyclic).
GTGraph transitive_reduction(const GTGraph& g);

/// Every two same-row (row < n) vertices of a common unoriented component
/// are joined by a directed path in one direction or the other.
bool is_noncritical(const GTGraph& g);

/// No directed path from a vertex to a same-row vertex strictly to its left.
bool is_ordered(const GTGraph& g);

/// Two down-arrows (k+1,r)->(k,j), (k+1,s)->(k,i) with r < s and i < j.
bool has_crosses(const GTGraph& g);

/// Pairs ((k,i),(k,j)), k <= n-1, joined by a directed path with no
/// intermediate same-row vertex reachable in between. Sorted by (row, i, j).
std::vector<AdjoiningPair> adjoining_pairs(const GTGraph& g);

/// Every adjoining pair is bridged by the diamond pattern (an upper and a
/// lower bridge vertex) or by a pair of arrows into/out of the row above.
bool satisfies_diamond(const GTGraph& g);

enum class RelationVerdict {
  Relation,
  NeedsNormalization, // not ordered; decide on a row-normalized representative
  Critical,
  Cross,
  Diamond,
};

RelationVerdict classify_relation_graph(const GTGraph& g);

const char* to_string(RelationVerdict v);

/// True iff ordered, non-critical, cross-less and diamond-satisfying.
/// Throws domain_error on non-ordered input (normalize the tableau first).
bool is_relation_graph(const GTGraph& g);

/// Partition of the full vertex set by unoriented connectivity; components
/// and their members in deterministic order.
std::vector<std::vector<Vertex>> connected_components(const GTGraph& g);

/// Component id per vertex, indexed by GTGraph::vertex_index.
std::vector<int> component_ids(const GTGraph& g);

} // namespace relgt
