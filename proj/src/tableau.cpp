// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace relgt {

Tableau::Tableau(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("empty tableau");
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k].size() != k + 1) throw std::invalid_argument("row k must have k entries");
}

Tableau Tableau::from_top_rows(int n, const std::vector<std::vector<Rational>>& top_first) {
  if (static_cast<int>(top_first.size()) != n)
    throw std::invalid_argument("expected n rows");
  std::vector<std::vector<Rational>> rows(top_first.rbegin(), top_first.rend());
  return Tableau(std::move(rows));
}

const Rational& Tableau::entry(int row, int col) const {
  if (row < 1 || row > n() || col < 1 || col > row)
    throw std::invalid_argument("tableau index out of range");
  return rows_[row - 1][col - 1];
}

Rational& Tableau::entry(int row, int col) {
  return const_cast<Rational&>(static_cast<const Tableau&>(*this).entry(row, col));
}

ShiftVector::ShiftVector(int n) : n_(n) {
  if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
  flat_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 0);
}

int ShiftVector::offset(int row, int col) const {
  if (row < 1 || row >= n_ || col < 1 || col > row)
    throw std::invalid_argument("shift index out of range");
  // rows n-1 down to 1, columns ascending
  int skipped = 0;
  for (int r = n_ - 1; r > row; --r) skipped += r;
  return skipped + (col - 1);
}

int ShiftVector::at(int row, int col) const {
  if (row == n_) return 0;
  return flat_[offset(row, col)];
}

void ShiftVector::set(int row, int col, int value) { flat_[offset(row, col)] = value; }

ShiftVector ShiftVector::from_key(int n, const std::vector<int>& key) {
  ShiftVector z(n);
  if (key.size() != z.flat_.size()) throw std::invalid_argument("bad shift key length");
  z.flat_ = key;
  return z;
}

ShiftVector ShiftVector::plus_delta(int row, int col, int amount) const {
  ShiftVector z = *this;
  z.set(row, col, z.at(row, col) + amount);
  return z;
}

ShiftVector epsilon_shift(int n, int l, int m) {
  if (l >= m) throw std::invalid_argument("epsilon shift needs l < m");
  ShiftVector z(n);
  for (int t = l; t < m; ++t) z.set(t, 1, 1);
  return z;
}

namespace {

// arrow condition: source - target in Z_{>=0} for down/horizontal arrows,
// Z_{>0} for up arrows
bool arrow_holds(const Tableau& t, const Arrow& a) {
  const auto& [src, dst] = a;
  auto d = integer_difference(t.entry(src.row, src.col), t.entry(dst.row, dst.col));
  if (!d) return false;
  bool up = src.row + 1 == dst.row;
  return up ? *d > 0 : *d >= 0;
}

} // namespace

bool satisfies(const Tableau& t, const GTGraph& g) {
  if (t.n() != g.n()) throw std::invalid_argument("rank mismatch");
  for (const auto& a : g.arrows())
    if (!arrow_holds(t, a)) return false;
  return true;
}

bool is_realization(const Tableau& t, const GTGraph& g) {
  if (!satisfies(t, g)) return false;
  auto ids = component_ids(g);
  for (int k = 1; k < t.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        if (!integer_difference(t.entry(k, i), t.entry(k, j))) continue;
        Vertex u{k, i}, v{k, j};
        if (ids[g.vertex_index(u)] != ids[g.vertex_index(v)]) return false;
      }
  return true;
}

GTGraph graph_of(const Tableau& t) {
  const int n = t.n();
  std::vector<Arrow> arrows;
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k + 1; ++i)
      for (int j = 1; j <= k; ++j) {
        auto d = integer_difference(t.entry(k + 1, i), t.entry(k, j));
        if (!d) continue;
        if (*d >= 0)
          arrows.push_back({{k + 1, i}, {k, j}});
        else
          arrows.push_back({{k, j}, {k + 1, i}}); // target - source in Z_{>0}
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto d = integer_difference(t.entry(n, i), t.entry(n, j));
      if (!d || *d < 0) continue;
      if (*d == 0 && i > j) continue; // equal entries: left-to-right only
      arrows.push_back({{n, i}, {n, j}});
    }
  return transitive_reduction(GTGraph(n, std::move(arrows)));
}

Tableau twisted_tableau(const Permutation& sigma, const std::vector<Rational>& x) {
  const int n = sigma.n();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("rank mismatch");
  SigmaGraph g = g_sigma(sigma);
  std::vector<std::vector<Rational>> rows(n);
  rows[n - 1] = x;
  for (int k = n; k >= 2; --k) {
    rows[k - 2].resize(k - 1);
    for (int i = 1; i <= k - 1; ++i) {
      rows[k - 2][i - 1] = rows[k - 1][i - 1];
      if (g.sign(k, i) == -1) rows[k - 2][i - 1] += 1;
    }
  }
  return Tableau(std::move(rows));
}

Rational row_sum(const Tableau& t, int k) {
  Rational s = 0;
  for (const auto& e : t.row(k)) s += e;
  return s;
}

NormalizedTableau normalize_rows(const Tableau& t) {
  const int n = t.n();
  // fixed class order shared by all rows: ascending canonical fractional part
  std::vector<Rational> class_keys;
  for (int k = 1; k <= n; ++k)
    for (const auto& e : t.row(k)) class_keys.push_back(fractional_part(e));
  std::sort(class_keys.begin(), class_keys.end());
  class_keys.erase(std::unique(class_keys.begin(), class_keys.end()), class_keys.end());
  auto class_of = [&](const Rational& e) {
    return static_cast<int>(std::lower_bound(class_keys.begin(), class_keys.end(),
                                             fractional_part(e)) -
                            class_keys.begin());
  };

  std::vector<std::vector<Rational>> rows(n);
  std::vector<std::vector<int>> perms(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int ca = class_of(t.entry(k, a));
      int cb = class_of(t.entry(k, b));
      if (ca != cb) return ca < cb;
      return t.entry(k, a) > t.entry(k, b); // descending inside a class
    });
    rows[k - 1].reserve(k);
    for (int col : order) rows[k - 1].push_back(t.entry(k, col));
    perms[k - 1] = std::move(order);
  }
  return {Tableau(std::move(rows)), std::move(perms)};
}

GTGraph relabel_columns(const GTGraph& g, const std::vector<std::vector<int>>& row_perms) {
  if (static_cast<int>(row_perms.size()) != g.n())
    throw std::invalid_argument("need one permutation per row");
  auto new_col = [&](Vertex v) {
    const auto& perm = row_perms[v.row - 1];
    for (int pos = 1; pos <= static_cast<int>(perm.size()); ++pos)
      if (perm[pos - 1] == v.col) return Vertex{v.row, pos};
    throw std::invalid_argument("column missing from row permutation");
  };
  std::vector<Arrow> arrows;
  for (const auto& [a, b] : g.arrows()) arrows.push_back({new_col(a), new_col(b)});
  return GTGraph(g.n(), std::move(arrows));
}

Tableau shift(const Tableau& t, const ShiftVector& z) {
  if (t.n() != z.n()) throw std::invalid_argument("rank mismatch");
  Tableau out = t;
  for (int k = 1; k < t.n(); ++k)
    for (int i = 1; i <= k; ++i) out.entry(k, i) += z.at(k, i);
  return out;
}

Tableau shift_entry(const Tableau& t, int row, int col, const Rational& amount) {
  Tableau out = t;
  out.entry(row, col) += amount;
  return out;
}

namespace {

struct Cell {
  int row, col;
};

// cells in shift-key order: rows n-1 down to 1, columns ascending
std::vector<Cell> cell_order(int n) {
  std::vector<Cell> cells;
  for (int r = n - 1; r >= 1; --r)
    for (int c = 1; c <= r; ++c) cells.push_back({r, c});
  return cells;
}

} // namespace

BasisEnumeration enumerate_basis(const Tableau& seed, const GTGraph& g, const BasisWindow& w) {
  if (!is_realization(seed, g))
    throw std::invalid_argument("seed tableau is not a realization of the graph");
  if (w.bound < 0) throw std::invalid_argument("window bound must be >= 0");
  const int n = seed.n();

  // z-shifts keep comparability classes, so condition (ii)(b) transfers from
  // the seed; only arrow inequalities need checking. Arrows between rows k+1
  // and k become difference bounds on z once the upper row is fixed.
  auto cells = cell_order(n);
  BasisEnumeration result;
  ShiftVector z(n);

  auto cell_window = [&](int row, int col) {
    int lo = -w.bound, hi = w.bound;
    auto it = w.cell_bounds.find({row, col});
    if (it != w.cell_bounds.end()) {
      lo = std::max(lo, it->second.first);
      hi = std::min(hi, it->second.second);
    }
    return std::pair<int, int>{lo, hi};
  };

  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      result.shifts.push_back(z);
      return;
    }
    auto [row, col] = cells[idx];
    auto [lo_i, hi_i] = cell_window(row, col);
    Integer lo = lo_i, hi = hi_i;
    for (const auto& [src, dst] : g.arrows()) {
      // constraints between this cell and the (already fixed) row above
      if (src.row == row + 1 && dst.row == row && dst.col == col) {
        // down arrow: value(src) - (seed+z) >= 0
        Rational d = seed.entry(src.row, src.col) + z.at(src.row, src.col) -
                     seed.entry(row, col);
        hi = std::min(hi, numerator(Rational(d))); // d is an integer by satisfaction
      } else if (src.row == row && src.col == col && dst.row == row + 1) {
        // up arrow: (seed+z) - value(dst) >= 1
        Rational d = seed.entry(dst.row, dst.col) + z.at(dst.row, dst.col) -
                     seed.entry(row, col) + 1;
        lo = std::max(lo, numerator(Rational(d)));
      }
    }
    for (Integer v = lo; v <= hi; ++v) {
      z.set(row, col, static_cast<int>(v));
      self(self, idx + 1);
    }
    z.set(row, col, 0);
  };
  recurse(recurse, 0);

  std::sort(result.shifts.begin(), result.shifts.end(),
            [](const ShiftVector& a, const ShiftVector& b) { return a.key() < b.key(); });

  result.complete = true;
  for (const auto& s : result.shifts)
    for (int v : s.key())
      if (v == w.bound || v == -w.bound) result.complete = false;
  return result;
}

} // namespace relgt
