// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relgt/action.hpp"
#include "relgt/tableau.hpp"

namespace relgt {

using Weight = std::vector<Rational>;

/// The staircase (0, -1, ..., -n+1) converting highest weights to top rows.
Weight staircase(int n);

Weight weight_plus_staircase(const Weight& lambda);

/// X = sigma^{-1}(lambda + staircase) in the entry-reading convention.
std::vector<Rational> twist_argument(const Weight& lambda, const Permutation& sigma);

/// The tableau T_sigma(sigma^{-1}(lambda + staircase)) in native coordinates.
Tableau sigma_tableau(const Weight& lambda, const Permutation& sigma);

/// Decision pipeline: build the twisted tableau, normalize rows, take the
/// graph of the result and classify it.
RelationVerdict sigma_relation_verdict(const Weight& lambda, const Permutation& sigma);
bool is_sigma_relation(const Weight& lambda, const Permutation& sigma);

/// Module context with the normalized twisted tableau as seed and its own
/// graph; refuses non-sigma-relation weights.
ModuleContext sigma_relation_module(const Weight& lambda, const Permutation& sigma);

/// Closed-form id-relation test: either every pair (i,j) with j < n has
/// lambda_i - lambda_j outside Z_{<= i-j}, or a unique pivot pair exists with
/// a dominant integral tail and the matching escape conditions.
bool is_id_relation_closed_form(const Weight& lambda);

struct WitnessEntry {
  Permutation sigma;
  RelationVerdict verdict;
};

struct WitnessReport {
  Weight lambda;
  std::vector<WitnessEntry> entries; // all of S_n, lexicographic
  std::vector<Permutation> witnesses() const;
  std::size_t witness_count() const;
};

/// Exact witness set by exhaustive sweep; refuses n above the cap. The sweep
/// is pure per permutation and fans out across jobs workers when jobs > 1,
/// with a deterministic merge.
WitnessReport sigma_relation_witnesses(const Weight& lambda, int cap = 7, int jobs = 1);

struct LowerBoundCertificate {
  std::uint64_t bound = 0;
  std::vector<int> subset; // A, ascending; empty when no integral pairs exist
  int k = 0;
  std::uint64_t p = 0;
  std::vector<Permutation> tau_witnesses; // the tau with mu_A a tau-relation weight
  std::string explanation;
};

/// Constructive bound p * (n-k)! from the smallest index subset that contains
/// every integrally linked index and admits a relation witness.
LowerBoundCertificate lower_bound_n_lambda(const Weight& lambda);

enum class VermaVerdict { True, False, NotCovered };

/// Criterion for the Verma module M(lambda): only the (1,n) difference may be
/// integral and it must avoid Z_{>= 1-n}; outside that hypothesis the test is
/// not applicable.
VermaVerdict verma_is_sigma_relation(const Weight& lambda, const Permutation& sigma);

/// V_G(T) is simple exactly when G is the full graph of its seed tableau.
bool is_simple_realization(const GTGraph& g, const Tableau& t);

/// Dominant integral test: successive differences in Z_{>=0}.
bool is_dominant_integral(const Weight& lambda);

/// Dimension of the finite-dimensional module by windowed enumeration
/// (empty when lambda is not dominant integral).
std::optional<std::uint64_t> finite_dimension(const Weight& lambda);

} // namespace relgt
