// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "relgt/weights.hpp"

namespace relgt {

/// Seed realization, relation graph and twist permutation. The lowering
/// element f = E_{sigma^{-1}(2),sigma^{-1}(1)} acts on basis tableaux by
/// decrementing the corner entry.
struct ModuleSpec {
  Tableau seed;
  GTGraph graph;
  Permutation sigma;

  ModuleSpec(Tableau s, GTGraph g, Permutation perm);
};

/// Module spec for the highest weight module of a sigma-relation weight, in
/// native tableau coordinates.
ModuleSpec highest_weight_module(const Weight& lambda, const Permutation& sigma);

/// f is injective exactly when the corner entry can always step down: neither
/// corner-over-row-2 difference lies in Z_{>0}.
bool f_acts_injectively(const ModuleSpec& m);

/// Graph surgery of the localization: every arrow between rows 1 and 2 is
/// removed; the seed is unchanged.
ModuleSpec localize(const ModuleSpec& m);

/// Localize, then shift the corner entry by z. The graph stays the surgered
/// one; simplicity is decided by comparing it with the full graph of the
/// shifted seed.
ModuleSpec twisted_localize(const ModuleSpec& m, const Rational& z);

/// The twisting functor: corner entry up by one, graph recomputed from the
/// shifted seed. Requires f injective but not surjective.
ModuleSpec twisting_functor(const ModuleSpec& m);

/// is_simple_realization of the spec's own graph and seed.
bool is_simple(const ModuleSpec& m);

} // namespace relgt
