// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "relgt/sigma.hpp"

using namespace relgt;

TEST_CASE("permutation basics and the composition convention") {
  auto s1 = Permutation::simple_reflection(3, 1);
  auto s2 = Permutation::simple_reflection(3, 2);
  auto w = s1.compose(s2).compose(s1); // s1 ∘ s2 ∘ s1 = (1 3)
  CHECK(w(1) == 3);
  CHECK(w(2) == 2);
  CHECK(w(3) == 1);
  CHECK(w == Permutation::longest(3));
  CHECK(w.compose(w).is_identity());
  CHECK(Permutation::all(4).size() == 24);

  std::vector<Rational> v{Rational(10), Rational(20), Rational(30)};
  auto moved = s2.permute_entries(v); // entry at position t becomes v[s2(t)]
  CHECK(moved == std::vector<Rational>{Rational(10), Rational(30), Rational(20)});
}

TEST_CASE("reduced words multiply back to sigma") {
  for (const auto& sigma : Permutation::all(4)) {
    auto words = reduced_words(sigma);
    CHECK(!words.empty());
    for (const auto& word : words) {
      CHECK(static_cast<int>(word.size()) == sigma.inversions());
      // word composes right-to-left onto the identity
      Permutation direct = Permutation::identity(4);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        direct = Permutation::simple_reflection(4, *it).compose(direct);
      CHECK(direct == sigma);
    }
  }
  // the longest element of S_3 admits both reduced words
  CHECK(reduced_words(Permutation::longest(3)).size() == 2);
}

TEST_CASE("quasi-partition bijection") {
  CHECK(to_quasipartition(standard_sigma_graph(4)) == positive_roots(4));

  SigmaGraph all_neg(4, -1);
  QuasiPartition negatives;
  for (Root r : positive_roots(4)) negatives.push_back(r.negated());
  std::sort(negatives.begin(), negatives.end());
  CHECK(to_quasipartition(all_neg) == negatives);

  // every sign table round-trips (n = 4, all 64 tables)
  for (unsigned mask = 0; mask < 64; ++mask) {
    SigmaGraph g(4);
    int bit = 0;
    for (int r = 2; r <= 4; ++r)
      for (int s = 1; s < r; ++s, ++bit) g.set_sign(r, s, (mask >> bit) & 1 ? 1 : -1);
    CHECK(from_quasipartition(4, to_quasipartition(g)) == g);
  }
}

TEST_CASE("closed partitions") {
  CHECK(is_closed_partition(3, positive_roots(3)));
  CHECK(!is_closed_partition(3, QuasiPartition{{1, 2}, {2, 3}, {3, 1}}));
  for (const auto& sigma : Permutation::all(4))
    CHECK(is_closed_partition(4, apply_to_roots(sigma, positive_roots(4))));
}

TEST_CASE("g_sigma against the sign rule and the orbit") {
  CHECK(g_sigma(Permutation::identity(4)) == standard_sigma_graph(4));
  CHECK(g_sigma(Permutation::longest(4)) == SigmaGraph(4, -1));

  auto s2 = Permutation::simple_reflection(3, 2);
  SigmaGraph g = g_sigma(s2);
  CHECK(g.sign(2, 1) == 1);
  CHECK(g.sign(3, 1) == 1);
  CHECK(g.sign(3, 2) == -1);

  for (const auto& sigma : Permutation::all(5))
    CHECK(to_quasipartition(g_sigma(sigma)) == apply_to_roots(sigma, positive_roots(5)));
}

TEST_CASE("simple reflection rules") {
  for (int n : {3, 4, 5}) {
    for (const auto& sigma : Permutation::all(n)) {
      SigmaGraph g = g_sigma(sigma);
      for (int k = 1; k < n; ++k) {
        // involution
        CHECK(apply_simple_reflection(k, apply_simple_reflection(k, g)) == g);
        // coherence with the closed-form rule
        CHECK(apply_simple_reflection(k, g) ==
              g_sigma(Permutation::simple_reflection(n, k).compose(sigma)));
      }
    }
  }
  // on the standard graph only the (k+1,k) sign flips
  SigmaGraph gh = standard_sigma_graph(4);
  for (int k = 1; k < 4; ++k) {
    SigmaGraph flipped = apply_simple_reflection(k, gh);
    for (int r = 2; r <= 4; ++r)
      for (int s = 1; s < r; ++s)
        CHECK(flipped.sign(r, s) == ((r == k + 1 && s == k) ? -1 : 1));
  }
}

TEST_CASE("g_sigma equals the fold over every reduced word") {
  for (const auto& sigma : Permutation::all(4)) {
    SigmaGraph expect = g_sigma(sigma);
    for (const auto& word : reduced_words(sigma)) {
      SigmaGraph acc = standard_sigma_graph(4);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = apply_simple_reflection(*it, acc);
      CHECK(acc == expect);
    }
  }
}

TEST_CASE("m_k and M_k") {
  SigmaGraph gh = standard_sigma_graph(4);
  for (int k = 1; k < 4; ++k) CHECK(mk_and_Mk(gh, k) == std::pair<int, int>{0, 0});
  SigmaGraph w0 = g_sigma(Permutation::longest(4));
  for (int k = 1; k < 4; ++k) CHECK(mk_and_Mk(w0, k) == std::pair<int, int>{0, 0});

  for (const auto& sigma : Permutation::all(5)) {
    SigmaGraph g = g_sigma(sigma);
    Permutation inv = sigma.inverse();
    for (int k = 1; k < 5; ++k) {
      auto [mk, Mk] = mk_and_Mk(g, k);
      CHECK(Mk + mk + g.sign(k + 1, k) == inv(k + 1) - inv(k));
    }
  }
}

TEST_CASE("sign propagation along closed partitions") {
  for (const auto& sigma : Permutation::all(5)) {
    SigmaGraph g = g_sigma(sigma);
    for (int r = 1; r <= 5; ++r)
      for (int j = r + 1; j <= 5; ++j)
        for (int i = j + 1; i <= 5; ++i) {
          if (g.sign(j, r) == 1 && g.sign(i, r) == -1) CHECK(g.sign(i, j) == -1);
          if (g.sign(j, r) == -1 && g.sign(i, r) == 1) CHECK(g.sign(i, j) == 1);
          if (g.sign(i, r) == 1 && g.sign(i, j) == -1) CHECK(g.sign(j, r) == 1);
          if (g.sign(i, r) == -1 && g.sign(i, j) == 1) CHECK(g.sign(j, r) == -1);
        }
  }
}

TEST_CASE("sign differences locate the in-between preimages") {
  for (const auto& sigma : Permutation::all(5)) {
    SigmaGraph g = g_sigma(sigma);
    Permutation inv = sigma.inverse();
    for (int k = 1; k < 5; ++k) {
      if (g.sign(k + 1, k) == 1) {
        for (int l = 1; l < k; ++l)
          CHECK((g.sign(k + 1, l) != g.sign(k, l)) ==
                (inv(k) < inv(l) && inv(l) < inv(k + 1)));
        for (int l = k + 2; l <= 5; ++l)
          CHECK((g.sign(l, k) != g.sign(l, k + 1)) ==
                (inv(k) < inv(l) && inv(l) < inv(k + 1)));
      } else {
        for (int l = 1; l < k; ++l)
          CHECK((g.sign(k + 1, l) != g.sign(k, l)) ==
                (inv(k + 1) < inv(l) && inv(l) < inv(k)));
        for (int l = k + 2; l <= 5; ++l)
          CHECK((g.sign(l, k) != g.sign(l, k + 1)) ==
                (inv(k + 1) < inv(l) && inv(l) < inv(k)));
      }
    }
  }
}

TEST_CASE("sign table to grid graph") {
  GTGraph gh = to_gtgraph(standard_sigma_graph(4));
  CHECK(gh == column_chain_graph(4));
  GTGraph flipped = to_gtgraph(g_sigma(Permutation::simple_reflection(3, 2)));
  CHECK(flipped.has_arrow({2, 2}, {3, 2}));
  CHECK(flipped.has_arrow({2, 1}, {1, 1}));
}
