// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/action.hpp"

#include <algorithm>
#include <sstream>

#include "relgt/weights.hpp"

namespace relgt {

ModuleContext::ModuleContext(Tableau s, GTGraph g) : seed(std::move(s)), graph(std::move(g)) {
  if (seed.n() != graph.n()) throw std::invalid_argument("rank mismatch");
  if (!is_realization(seed, graph))
    throw std::invalid_argument("seed tableau is not a realization of the graph");
}

void ModuleVector::add(const std::vector<int>& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

ModuleVector ModuleVector::operator+(const ModuleVector& other) const {
  ModuleVector out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k, c);
  return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& other) const {
  ModuleVector out = *this;
  for (const auto& [k, c] : other.terms_) out.add(k, -c);
  return out;
}

ModuleVector ModuleVector::scaled(const Rational& c) const {
  ModuleVector out;
  if (c == 0) return out;
  for (const auto& [k, coeff] : terms_) out.terms_[k] = coeff * c;
  return out;
}

namespace {

Rational entry_at(const ModuleContext& m, const ShiftVector& z, int row, int col) {
  return m.seed.entry(row, col) + z.at(row, col);
}

// single-tableau Gelfand-Tsetlin formulas
void act_generator_term(const ModuleContext& m, GeneratorKind kind, int k,
                        const ShiftVector& z, const Rational& coeff, ModuleVector& out) {
  const int n = m.seed.n();
  if (kind == GeneratorKind::Diagonal) {
    if (k < 1 || k > n) throw std::invalid_argument("diagonal index out of range");
    Rational eig = k - 1;
    for (int i = 1; i <= k; ++i) eig += entry_at(m, z, k, i);
    for (int i = 1; i <= k - 1; ++i) eig -= entry_at(m, z, k - 1, i);
    out.add(z.key(), coeff * eig);
    return;
  }
  if (k < 1 || k >= n) throw std::invalid_argument("generator index out of range");
  for (int i = 1; i <= k; ++i) {
    int step = kind == GeneratorKind::Raise ? +1 : -1;
    ShiftVector target = z.plus_delta(k, i, step);
    if (!is_realization(m.at(target), m.graph)) continue; // dropped summand

    Rational lki = entry_at(m, z, k, i);
    Rational numer = 1;
    if (kind == GeneratorKind::Raise) {
      for (int j = 1; j <= k + 1; ++j) numer *= lki - entry_at(m, z, k + 1, j);
    } else {
      for (int j = 1; j <= k - 1; ++j) numer *= lki - entry_at(m, z, k - 1, j);
    }
    Rational denom = 1;
    for (int j = 1; j <= k; ++j) {
      if (j == i) continue;
      denom *= lki - entry_at(m, z, k, j);
    }
    if (denom == 0)
      throw std::logic_error("vanishing denominator in Gelfand-Tsetlin formula");
    Rational c = numer / denom;
    if (kind == GeneratorKind::Raise) c = -c;
    out.add(target.key(), coeff * c);
  }
}

} // namespace

ModuleVector act_generator(const ModuleContext& m, GeneratorKind kind, int k,
                           const ModuleVector& v) {
  ModuleVector out;
  const int n = m.seed.n();
  for (const auto& [key, coeff] : v.terms())
    act_generator_term(m, kind, k, ShiftVector::from_key(n, key), coeff, out);
  return out;
}

ModuleVector act_generator_on_seed(const ModuleContext& m, GeneratorKind kind, int k) {
  return act_generator(m, kind, k, ModuleVector::basis(ShiftVector(m.seed.n())));
}

ModuleVector act_composite(const ModuleContext& m, int l, int mm, const ModuleVector& v) {
  if (l == mm) throw std::invalid_argument("composite action needs l != m");
  if (l + 1 == mm) return act_generator(m, GeneratorKind::Raise, l, v);
  if (l == mm + 1) return act_generator(m, GeneratorKind::Lower, mm, v);
  int mid = l < mm ? mm - 1 : mm + 1; // E_lm = [E_{l,mid}, E_{mid,m}]
  return act_composite(m, l, mid, act_composite(m, mid, mm, v)) -
         act_composite(m, mid, mm, act_composite(m, l, mid, v));
}

ModuleVector twisted_act(const ModuleContext& m, const Permutation& sigma, int l, int mm,
                         const ModuleVector& v) {
  if (l == mm) return act_generator(m, GeneratorKind::Diagonal, sigma(l), v);
  return act_composite(m, sigma(l), sigma(mm), v);
}

WeightVector weight_of(const Tableau& t) {
  WeightVector w(t.n());
  Rational prev = 0;
  for (int k = 1; k <= t.n(); ++k) {
    Rational cur = row_sum(t, k);
    w[k - 1] = Rational(k - 1) + cur - prev;
    prev = cur;
  }
  return w;
}

GTCharacterSignature gt_signature(const Tableau& t) {
  GTCharacterSignature sig;
  for (int k = 1; k <= t.n(); ++k) {
    auto row = t.row(k);
    std::sort(row.begin(), row.end());
    sig.push_back(std::move(row));
  }
  return sig;
}

bool verify_highest_weight(const Permutation& sigma, const std::vector<Rational>& lambda) {
  if (!is_sigma_relation(lambda, sigma))
    throw domain_error("weight is not a sigma-relation weight");
  ModuleContext m = sigma_relation_module(lambda, sigma);
  const int n = sigma.n();
  SigmaGraph gs = g_sigma(sigma);
  ModuleVector seed = ModuleVector::basis(ShiftVector(n));
  for (int r = 2; r <= n; ++r)
    for (int s = 1; s < r; ++s) {
      // A = +1: the raising vector E_{s,r} annihilates; A = -1: E_{r,s} does
      ModuleVector image = gs.sign(r, s) == 1 ? act_composite(m, s, r, seed)
                                              : act_composite(m, r, s, seed);
      if (!image.is_zero()) return false;
    }
  WeightVector omega = weight_of(m.seed);
  for (int k = 1; k <= n; ++k)
    if (omega[sigma(k) - 1] != lambda[k - 1]) return false;
  return true;
}

namespace {

struct Generator {
  int a, b; // E_{ab}
};

ModuleVector act_unit(const ModuleContext& m, int a, int b, const ModuleVector& v) {
  if (a == b) return act_generator(m, GeneratorKind::Diagonal, a, v);
  return act_composite(m, a, b, v);
}

} // namespace

BracketReport check_brackets(const ModuleContext& m, const BasisWindow& w) {
  const int n = m.seed.n();
  BracketReport report;
  auto basis = enumerate_basis(m.seed, m.graph, w);

  std::vector<Generator> gens;
  for (int k = 1; k < n; ++k) gens.push_back({k, k + 1});
  for (int k = 1; k < n; ++k) gens.push_back({k + 1, k});
  for (int k = 1; k <= n; ++k) gens.push_back({k, k});
  report.pair_count = static_cast<long long>(gens.size()) * gens.size();

  const int margin = w.bound - 2; // one- and two-step images stay interior
  for (const auto& z : basis.shifts) {
    bool interior = basis.complete;
    if (!interior) {
      interior = true;
      for (int v : z.key())
        if (v < -margin || v > margin) interior = false;
    }
    if (!interior) {
      ++report.skipped_boundary;
      continue;
    }
    ++report.vectors_checked;
    ModuleVector e = ModuleVector::basis(z);
    for (const auto& g1 : gens)
      for (const auto& g2 : gens) {
        ModuleVector lhs = act_unit(m, g1.a, g1.b, act_unit(m, g2.a, g2.b, e)) -
                           act_unit(m, g2.a, g2.b, act_unit(m, g1.a, g1.b, e));
        ModuleVector rhs;
        if (g1.b == g2.a) rhs = rhs + act_unit(m, g1.a, g2.b, e);
        if (g2.b == g1.a) rhs = rhs - act_unit(m, g2.a, g1.b, e);
        if (lhs == rhs) continue;
        ++report.violations;
        if (report.failures.size() < 8) {
          std::ostringstream os;
          os << "[E_" << g1.a << g1.b << ", E_" << g2.a << g2.b << "] mismatch at shift (";
          for (std::size_t i = 0; i < z.key().size(); ++i)
            os << (i ? "," : "") << z.key()[i];
          os << ")";
          report.failures.push_back(os.str());
        }
      }
  }
  return report;
}

} // namespace relgt
