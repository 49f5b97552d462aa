#pragma once

// Formula-based merging: maximal consistent subsets of the profile's formula
// union, and the C1/C3/C4/C5 operators with their hatted variants.

#include <algorithm>
#include <vector>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/formula.hpp"

namespace mergeforge {

// Set of formulas under structural equality; first-occurrence order.
using FormulaSet = std::vector<Formula>;

inline bool formula_set_contains(const FormulaSet& s, const Formula& f) {
  for (const Formula& g : s)
    if (equal(f, g)) return true;
  return false;
}

// Set union across all bases. Duplicates collapse: this is the union of
// Definition 4 and the root of the syntax sensitivity of these operators.
inline FormulaSet profile_formula_union(const Profile& e) {
  FormulaSet out;
  for (const Base& k : e.bases)
    for (const Formula& f : k.formulas())
      if (!formula_set_contains(out, f)) out.push_back(f);
  return out;
}

enum class MaxconsMode { inclusion, cardinality };

// A maximal consistent subset of the ambient set. The constraint is always a
// member and sits at subset.front().
struct Maxcons {
  FormulaSet subset;
  ModelSet mods;
};

// All maximal consistent subsets of s ∪ {mu} containing mu. Inclusion mode
// returns every ⊆-maximal one; cardinality mode keeps only those of maximum
// size. Enumeration explores formulas in ambient order (mu first, then s in
// iteration order) and verifies maximality by the single-extension test.
inline std::vector<Maxcons> maxcons(const FormulaSet& s, const Formula& mu, MaxconsMode mode,
                                    const Signature& sig) {
  ModelSet mu_models = models(mu, sig);
  if (mu_models.empty()) throw domain_error("constraint mu is inconsistent");

  FormulaSet ambient;
  ambient.push_back(mu);
  for (const Formula& f : s)
    if (!equal(f, mu)) ambient.push_back(f);

  std::vector<ModelSet> member_models;
  member_models.reserve(ambient.size());
  for (const Formula& f : ambient) member_models.push_back(models(f, sig));

  std::vector<Maxcons> out;
  std::vector<std::size_t> chosen{0};  // mu always in

  auto dfs = [&](auto&& self, std::size_t i, ModelSet inter) -> void {
    if (i == ambient.size()) {
      // Keep only subsets no remaining formula extends consistently.
      for (std::size_t j = 1; j < ambient.size(); ++j) {
        if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
        if (inter.intersects(member_models[j])) return;
      }
      Maxcons m;
      for (std::size_t j : chosen) m.subset.push_back(ambient[j]);
      m.mods = inter;
      out.push_back(std::move(m));
      return;
    }
    if (inter.intersects(member_models[i])) {
      chosen.push_back(i);
      self(self, i + 1, inter & member_models[i]);
      chosen.pop_back();
    }
    self(self, i + 1, inter);
  };
  dfs(dfs, 1, mu_models);

  if (mode == MaxconsMode::cardinality) {
    std::size_t best = 0;
    for (const Maxcons& m : out) best = std::max(best, m.subset.size());
    std::erase_if(out, [&](const Maxcons& m) { return m.subset.size() != best; });
  }
  return out;
}

enum class CVariant { c1, c3, c4, c5 };

// Definition 5 semantics. C1 and C4 work with MAXCONS(E, mu); C3 and C5 work
// with MAXCONS(E, ⊤) filtered to subsets consistent with mu. C3 disjoins the
// kept subsets as they are, so its result can violate mu and can be empty;
// C5 conjoins each kept subset with mu before disjoining (the easy-to-misread
// asymmetry of the definition) and falls back to mu when nothing survives.
inline ModelSet merge_c(const Profile& e, const Formula& mu, CVariant v, const Signature& sig) {
  ModelSet mu_models = models(mu, sig);
  if (mu_models.empty()) throw domain_error("constraint mu is inconsistent");
  FormulaSet uni = profile_formula_union(e);

  if (v == CVariant::c1 || v == CVariant::c4) {
    auto ms = maxcons(uni, mu, v == CVariant::c1 ? MaxconsMode::inclusion : MaxconsMode::cardinality, sig);
    ModelSet out(sig.size());
    for (const Maxcons& m : ms) out |= m.mods;
    return out;  // mu itself is a member of every subset, so out ⊆ [mu]
  }

  auto ms = maxcons(uni, f_true(), MaxconsMode::inclusion, sig);
  ModelSet out(sig.size());
  bool kept = false;
  for (const Maxcons& m : ms) {
    if (!m.mods.intersects(mu_models)) continue;
    kept = true;
    out |= v == CVariant::c3 ? m.mods : (m.mods & mu_models);
  }
  if (v == CVariant::c5 && !kept) return mu_models;
  return out;
}

inline ModelSet merge_c_hat(const Profile& e, const Formula& mu, CVariant v, const Signature& sig) {
  Profile hatted;
  for (const Base& k : e.bases) hatted.bases.push_back(base_hat(k, sig));
  return merge_c(hatted, mu, v, sig);
}

} // namespace mergeforge
