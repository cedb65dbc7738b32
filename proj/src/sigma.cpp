// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/sigma.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace relgt {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation image");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple_reflection(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("simple reflection index out of range");
  Permutation p = identity(n);
  std::swap(p.image_[k - 1], p.image_[k]);
  return p;
}

Permutation Permutation::longest(int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = n - i + 1;
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (n() != tau.n()) throw std::invalid_argument("rank mismatch");
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) img[i - 1] = image_[tau.image_[i - 1] - 1];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) img[image_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (image_[i - 1] != i) return false;
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (image_[i] > image_[j]) ++count;
  return count;
}

std::vector<std::vector<int>> reduced_words(const Permutation& sigma) {
  if (sigma.is_identity()) return {{}};
  const int n = sigma.n();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[sigma(i)] = i;
  std::vector<std::vector<int>> out;
  for (int k = 1; k < n; ++k) {
    // left-multiplying by s_k shortens sigma iff value k+1 precedes value k
    if (pos[k + 1] < pos[k]) {
      Permutation shorter = Permutation::simple_reflection(n, k).compose(sigma);
      for (auto& w : reduced_words(shorter)) {
        w.insert(w.begin(), k);
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

SigmaGraph::SigmaGraph(int n, int fill) : n_(n) {
  if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
  if (fill != 1 && fill != -1) throw std::invalid_argument("sign must be +1 or -1");
  signs_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, static_cast<signed char>(fill));
}

int SigmaGraph::index(int r, int s) const {
  if (!(1 <= s && s < r && r <= n_)) throw std::invalid_argument("sign index out of range");
  return (r - 1) * (r - 2) / 2 + (s - 1);
}

int SigmaGraph::sign(int r, int s) const { return signs_[index(r, s)]; }

void SigmaGraph::set_sign(int r, int s, int value) {
  if (value != 1 && value != -1) throw std::invalid_argument("sign must be +1 or -1");
  signs_[index(r, s)] = static_cast<signed char>(value);
}

SigmaGraph standard_sigma_graph(int n) { return SigmaGraph(n, +1); }

QuasiPartition positive_roots(int n) {
  QuasiPartition q;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) q.push_back({i, j});
  std::sort(q.begin(), q.end());
  return q;
}

QuasiPartition apply_to_roots(const Permutation& sigma, const QuasiPartition& q) {
  QuasiPartition out;
  out.reserve(q.size());
  for (Root r : q) out.push_back(sigma.apply(r));
  std::sort(out.begin(), out.end());
  return out;
}

QuasiPartition to_quasipartition(const SigmaGraph& g) {
  QuasiPartition q;
  for (int r = 2; r <= g.n(); ++r)
    for (int s = 1; s < r; ++s)
      q.push_back(g.sign(r, s) == 1 ? Root{s, r} : Root{r, s});
  std::sort(q.begin(), q.end());
  return q;
}

SigmaGraph from_quasipartition(int n, const QuasiPartition& q) {
  if (!is_quasipartition(n, q)) throw std::invalid_argument("not a quasi-partition");
  SigmaGraph g(n);
  for (Root root : q) {
    if (root.i < root.j)
      g.set_sign(root.j, root.i, +1);
    else
      g.set_sign(root.i, root.j, -1);
  }
  return g;
}

bool is_quasipartition(int n, const QuasiPartition& q) {
  if (q.size() != static_cast<std::size_t>(n) * (n - 1) / 2) return false;
  auto in = [&](Root r) { return std::binary_search(q.begin(), q.end(), r); };
  for (Root r : q) {
    if (r.i < 1 || r.i > n || r.j < 1 || r.j > n || r.i == r.j) return false;
    if (in(r.negated())) return false;
  }
  return true;
}

bool is_closed_partition(int n, const QuasiPartition& q) {
  if (!is_quasipartition(n, q)) return false;
  auto in = [&](Root r) { return std::binary_search(q.begin(), q.end(), r); };
  for (Root a : q)
    for (Root b : q) {
      // alpha_{ij} + alpha_{kl} is a root iff j == k (i != l) or l == i (k != j)
      if (a.j == b.i && a.i != b.j && !in({a.i, b.j})) return false;
    }
  return true;
}

SigmaGraph g_sigma(const Permutation& sigma) {
  Permutation inv = sigma.inverse();
  SigmaGraph g(sigma.n());
  for (int r = 2; r <= sigma.n(); ++r)
    for (int s = 1; s < r; ++s) g.set_sign(r, s, inv(r) > inv(s) ? +1 : -1);
  return g;
}

SigmaGraph apply_simple_reflection(int k, const SigmaGraph& g) {
  const int n = g.n();
  if (k < 1 || k >= n) throw std::invalid_argument("simple reflection index out of range");
  SigmaGraph out = g;
  out.set_sign(k + 1, k, -g.sign(k + 1, k));
  for (int r = k + 2; r <= n; ++r) {
    out.set_sign(r, k, g.sign(r, k + 1));
    out.set_sign(r, k + 1, g.sign(r, k));
  }
  for (int r = 1; r <= k - 1; ++r) {
    out.set_sign(k + 1, r, g.sign(k, r));
    out.set_sign(k, r, g.sign(k + 1, r));
  }
  return out;
}

std::pair<int, int> mk_and_Mk(const SigmaGraph& g, int k) {
  const int n = g.n();
  if (k < 1 || k >= n) throw std::invalid_argument("k out of range");
  int upper = 0;
  for (int l = k + 2; l <= n; ++l)
    if (g.sign(l, k) != g.sign(l, k + 1)) ++upper;
  int lower = 0;
  for (int l = 1; l <= k - 1; ++l)
    if (g.sign(k + 1, l) != g.sign(k, l)) ++lower;
  int a = g.sign(k + 1, k);
  return {a * lower, a * upper}; // (m_k, M_k)
}

GTGraph to_gtgraph(const SigmaGraph& g) {
  std::vector<Arrow> arrows;
  for (int r = 2; r <= g.n(); ++r)
    for (int s = 1; s < r; ++s) {
      Vertex hi{r, s}, lo{r - 1, s};
      if (g.sign(r, s) == 1)
        arrows.push_back({hi, lo});
      else
        arrows.push_back({lo, hi});
    }
  return GTGraph(g.n(), std::move(arrows));
}

} // namespace relgt
