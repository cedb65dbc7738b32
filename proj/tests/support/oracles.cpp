// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

namespace {

std::uint64_t count_below(const std::vector<long long>& upper) {
  if (upper.size() == 1) return 1;
  const std::size_t k = upper.size() - 1;
  std::vector<long long> row(k);
  std::uint64_t total = 0;
  // row entry i ranges over [upper[i+1] + 1, upper[i]]
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      total += count_below(row);
      return;
    }
    for (long long v = upper[i + 1] + 1; v <= upper[i]; ++v) {
      row[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return total;
}

} // namespace

std::uint64_t gt_pattern_count(const std::vector<long long>& top) {
  if (top.empty()) throw std::invalid_argument("empty top row");
  for (std::size_t i = 0; i + 1 < top.size(); ++i)
    if (top[i] <= top[i + 1]) throw std::invalid_argument("top row must strictly decrease");
  return count_below(top);
}

std::uint64_t weyl_dimension(const std::vector<long long>& lambda) {
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("weight must be dominant");
  long long num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + static_cast<long long>(j - i);
      den *= static_cast<long long>(j - i);
    }
  return static_cast<std::uint64_t>(num / den);
}

bool path_exists(int vertex_count, const std::vector<std::pair<int, int>>& edges, int from,
                 int to) {
  std::vector<bool> seen(vertex_count, false);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges) {
      if (a != v || seen[b]) continue;
      if (b == to) return true;
      seen[b] = true;
      stack.push_back(b);
    }
  }
  return false;
}

std::vector<std::vector<bool>> closure_matrix(int vertex_count,
                                              const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> m(vertex_count, std::vector<bool>(vertex_count, false));
  for (int a = 0; a < vertex_count; ++a)
    for (int b = 0; b < vertex_count; ++b)
      m[a][b] = path_exists(vertex_count, edges, a, b);
  return m;
}

} // namespace oracles
