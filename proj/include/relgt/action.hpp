// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "relgt/tableau.hpp"

namespace relgt {

/// Seed realization plus relation graph; basis elements are integer shifts
/// of the seed with the top row fixed.
struct ModuleContext {
  Tableau seed;
  GTGraph graph;

  ModuleContext(Tableau s, GTGraph g);
  Tableau at(const ShiftVector& z) const { return shift(seed, z); }
};

/// Finite formal linear combination of basis tableaux, keyed by their shift
/// relative to the seed. Zero coefficients are never stored.
class ModuleVector {
public:
  ModuleVector() = default;
  static ModuleVector basis(const ShiftVector& z) {
    ModuleVector v;
    v.terms_[z.key()] = 1;
    return v;
  }

  void add(const std::vector<int>& key, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  ModuleVector operator+(const ModuleVector& other) const;
  ModuleVector operator-(const ModuleVector& other) const;
  ModuleVector scaled(const Rational& c) const;

  bool operator==(const ModuleVector&) const = default;

private:
  std::map<std::vector<int>, Rational> terms_;
};

enum class GeneratorKind { Raise, Lower, Diagonal };

/// The Gelfand-Tsetlin formulas for E_{k,k+1}, E_{k+1,k}, E_{kk}. Summands
/// whose shifted tableau is not a realization of the module graph are
/// dropped; that test is structural, never coefficient vanishing.
ModuleVector act_generator(const ModuleContext& m, GeneratorKind kind, int k,
                           const ModuleVector& v);
ModuleVector act_generator_on_seed(const ModuleContext& m, GeneratorKind kind, int k);

/// E_{lm} for |l-m| >= 1 via nested commutators with the canonical
/// intermediate index next to m.
ModuleVector act_composite(const ModuleContext& m, int l, int mm, const ModuleVector& v);

/// Action twisted by E_{ij} -> E_{sigma(i)sigma(j)}.
ModuleVector twisted_act(const ModuleContext& m, const Permutation& sigma, int l, int mm,
                         const ModuleVector& v);

using WeightVector = std::vector<Rational>;

/// omega_t = t - 1 + (row-t sum) - (row-(t-1) sum); the E_{tt} eigenvalue.
WeightVector weight_of(const Tableau& t);

/// Per-row sorted multisets of entries; separates basis vectors of relation
/// modules (multiplicity one).
using GTCharacterSignature = std::vector<std::vector<Rational>>;
GTCharacterSignature gt_signature(const Tableau& t);

/// For every r > s, the root vector singled out by the sign A_{(r,s)}(G_sigma)
/// annihilates the seed (A = +1 picks E_{s,r}, A = -1 picks E_{r,s}), and the
/// twisted diagonal eigenvalues recover lambda. Rejects non-sigma-relation
/// weights before acting.
bool verify_highest_weight(const Permutation& sigma, const std::vector<Rational>& lambda);

struct BracketReport {
  long long pair_count = 0;
  long long vectors_checked = 0;
  long long skipped_boundary = 0;
  long long violations = 0;
  std::vector<std::string> failures; // first few, for diagnostics
  bool ok() const { return violations == 0; }
};

/// Verifies [E_ab, E_cd] = delta_{bc} E_ad - delta_{da} E_cb exactly on every
/// enumerated basis vector whose one- and two-step images stay inside the
/// window (all vectors when the enumeration is complete).
BracketReport check_brackets(const ModuleContext& m, const BasisWindow& w);

} // namespace relgt
