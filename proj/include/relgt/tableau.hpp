// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "relgt/graph.hpp"
#include "relgt/scalar.hpp"
#include "relgt/sigma.hpp"

namespace relgt {

/// Triangular array of rationals; rows 1..n, row n is the top row.
class Tableau {
public:
  explicit Tableau(std::vector<std::vector<Rational>> rows); // rows[k-1] = row k
  static Tableau from_top_rows(int n, const std::vector<std::vector<Rational>>& top_first);

  int n() const { return static_cast<int>(rows_.size()); }
  const Rational& entry(int row, int col) const;
  Rational& entry(int row, int col);
  const std::vector<Rational>& row(int k) const { return rows_[k - 1]; }

  bool operator==(const Tableau&) const = default;

private:
  std::vector<std::vector<Rational>> rows_;
};

/// Integer shift of the grid entries with the top row pinned to zero.
class ShiftVector {
public:
  explicit ShiftVector(int n); // zero shift
  int n() const { return n_; }
  int at(int row, int col) const;
  void set(int row, int col, int value); // row < n only
  /// Flat key, rows n-1 down to 1, columns ascending inside each row.
  const std::vector<int>& key() const { return flat_; }
  static ShiftVector from_key(int n, const std::vector<int>& key);

  ShiftVector plus_delta(int row, int col, int amount) const;

  bool operator==(const ShiftVector&) const = default;
  auto operator<=>(const ShiftVector&) const = default;

private:
  int offset(int row, int col) const;
  int n_;
  std::vector<int> flat_;
};

/// eps_{lm} = delta^{l,1} + ... + delta^{m-1,1} for l < m.
ShiftVector epsilon_shift(int n, int l, int m);

struct BasisWindow {
  int bound = 0; // |z_{ij}| <= bound
  std::map<std::pair<int, int>, std::pair<int, int>> cell_bounds; // optional per-cell [lo, hi]
};

/// Weak integer inequality along down and horizontal arrows, strict along
/// up arrows.
bool satisfies(const Tableau& t, const GTGraph& g);

/// Satisfaction plus: same-row integer differences (rows 1..n-1) occur only
/// inside unoriented components of g.
bool is_realization(const Tableau& t, const GTGraph& g);

/// Transitive reduction of the maximal arrow set a tableau supports. Equal
/// top-row entries emit only the left-to-right arrow.
GTGraph graph_of(const Tableau& t);

/// Row n is x itself; each lower entry copies the one above or adds one,
/// following the arrows of G_sigma.
Tableau twisted_tableau(const Permutation& sigma, const std::vector<Rational>& x);

Rational row_sum(const Tableau& t, int k);

struct NormalizedTableau {
  Tableau tableau;
  /// perms[k-1][new_col-1] = old column the entry came from.
  std::vector<std::vector<int>> row_permutations;
};

/// Reorders each row so that integer-comparable entries appear weakly
/// decreasing left to right. Comparability classes (equal fractional part)
/// are kept contiguous in a fixed class order across all rows, so chains of
/// comparable entries never cross between rows.
NormalizedTableau normalize_rows(const Tableau& t);

/// Carries a graph along a per-row column relabeling (same shape as the
/// permutations normalize_rows reports).
GTGraph relabel_columns(const GTGraph& g, const std::vector<std::vector<int>>& row_perms);

Tableau shift(const Tableau& t, const ShiftVector& z);
Tableau shift_entry(const Tableau& t, int row, int col, const Rational& amount);

struct BasisEnumeration {
  std::vector<ShiftVector> shifts; // sorted by key, lexicographically
  bool complete = false;           // no realization touches the window boundary
};

/// All G-realizations seed+z with |z| inside the window. When no realization
/// touches the boundary the window provably holds the entire basis.
BasisEnumeration enumerate_basis(const Tableau& seed, const GTGraph& g, const BasisWindow& w);

} // namespace relgt
