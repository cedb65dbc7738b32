// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <vector>

#include "relgt/graph.hpp"
#include "relgt/scalar.hpp"

namespace relgt {

/// Root alpha_{ij} = e_i - e_j, i != j; negation swaps the indices.
struct Root {
  int i = 0;
  int j = 0;
  auto operator<=>(const Root&) const = default;
  Root negated() const { return {j, i}; }
};

/// Element of S_n stored as the one-line image (1-based). Permutations
/// compose left-to-right as functions: (sigma*tau)(i) = sigma(tau(i)).
/// On coordinate vectors the action reads positions through the permutation,
/// (sigma.v)_t = v_{sigma(t)}; on roots it maps indices forward.
class Permutation {
public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static Permutation simple_reflection(int n, int k); // s_k, 1 <= k <= n-1
  static Permutation longest(int n);                  // w_0: i -> n-i+1
  static std::vector<Permutation> all(int n);         // lexicographic

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }
  const std::vector<int>& image() const { return image_; }

  Permutation compose(const Permutation& tau) const; // this after tau
  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;

  template <typename T>
  std::vector<T> permute_entries(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (int t = 1; t <= n(); ++t) out[t - 1] = v[image_[t - 1] - 1];
    return out;
  }

  Root apply(Root r) const { return {image_[r.i - 1], image_[r.j - 1]}; }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> image_;
};

/// All reduced words for sigma in terms of simple reflections; each word
/// w = (k_1,...,k_L) satisfies sigma = s_{k_1} ∘ ... ∘ s_{k_L}.
std::vector<std::vector<int>> reduced_words(const Permutation& sigma);

/// Total sign assignment on column pairs: one arrow between (r,s) and
/// (r-1,s) per pair 1 <= s < r <= n, oriented by the sign.
class SigmaGraph {
public:
  explicit SigmaGraph(int n, int fill = +1);
  int n() const { return n_; }
  int sign(int r, int s) const;           // A_{(r,s)}, s < r
  void set_sign(int r, int s, int value); // +1 or -1
  bool operator==(const SigmaGraph&) const = default;

private:
  int index(int r, int s) const;
  int n_;
  std::vector<signed char> signs_;
};

/// One root out of each pair {alpha, -alpha}; sorted set representation.
using QuasiPartition = std::vector<Root>;

QuasiPartition positive_roots(int n);
QuasiPartition apply_to_roots(const Permutation& sigma, const QuasiPartition& q);

/// G -> Q_G: alpha_{sr} for A_{(r,s)} = +1, alpha_{rs} for A_{(r,s)} = -1.
QuasiPartition to_quasipartition(const SigmaGraph& g);
SigmaGraph from_quasipartition(int n, const QuasiPartition& q);

bool is_quasipartition(int n, const QuasiPartition& q);

/// Closed under root addition inside the root system.
bool is_closed_partition(int n, const QuasiPartition& q);

/// The unique graph with Q_{G_sigma} = sigma(Delta+):
/// A_{(r,s)} = +1 iff sigma^{-1}(r) > sigma^{-1}(s).
SigmaGraph g_sigma(const Permutation& sigma);

/// Step rules (i)-(vi) for s_k acting on the orbit of the standard graph.
SigmaGraph apply_simple_reflection(int k, const SigmaGraph& g);

/// Signed disagreement counts (m_k, M_k); they satisfy
/// M_k + m_k + A_{(k+1,k)} = sigma^{-1}(k+1) - sigma^{-1}(k).
std::pair<int, int> mk_and_Mk(const SigmaGraph& g, int k);

/// Arrows (r,s)->(r-1,s) for +1 and (r-1,s)->(r,s) for -1.
GTGraph to_gtgraph(const SigmaGraph& g);

/// The standard graph G_h (all signs +1).
SigmaGraph standard_sigma_graph(int n);

} // namespace relgt
