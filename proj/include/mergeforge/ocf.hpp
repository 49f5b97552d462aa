#pragma once

// Ordinal conditional functions: rank maps over W, the four merging rules,
// Bel extraction, the derived flat propositional operators, and the pointwise
// (IP) entailment check.

#include <algorithm>
#include <vector>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/formula.hpp"

namespace mergeforge {

// Total rank map over all interpretations; lower is more plausible.
struct OCF {
  std::vector<unsigned> rank;  // indexed by world

  unsigned min_rank() const { return *std::min_element(rank.begin(), rank.end()); }

  bool two_strata() const {
    bool has_zero = false;
    for (unsigned r : rank) {
      if (r > 1) return false;
      if (r == 0) has_zero = true;
    }
    return has_zero;
  }
};

// Two-strata embedding of a propositional base: models rank 0, countermodels
// rank 1.
inline OCF ocf_from_base(const Base& k, const Signature& sig) {
  OCF o;
  o.rank.resize(sig.world_count());
  for (World w = 0; w < sig.world_count(); ++w) o.rank[w] = k.models().contains(w) ? 0 : 1;
  return o;
}

inline OCF ocf_from_models(const ModelSet& s, const Signature& sig) {
  if (s.empty()) throw domain_error("cannot embed an empty model set as an OCF");
  OCF o;
  o.rank.resize(sig.world_count());
  for (World w = 0; w < sig.world_count(); ++w) o.rank[w] = s.contains(w) ? 0 : 1;
  return o;
}

enum class OcfRule { max, min1, min2, sigma };

// Pointwise merging rules. min1 and min2 use their agreement branch when all
// profile ranks coincide at the world; otherwise 2*min+1 resp. min+1.
inline OCF merge_ocf(const std::vector<OCF>& es, OcfRule rule) {
  if (es.empty()) throw domain_error("empty OCF profile");
  std::size_t n = es.front().rank.size();
  for (const OCF& k : es)
    if (k.rank.size() != n) throw domain_error("OCF signature mismatch");

  OCF out;
  out.rank.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    unsigned mn = es[0].rank[w], mx = es[0].rank[w];
    std::uint64_t sum = 0;
    bool agree = true;
    for (const OCF& k : es) {
      unsigned r = k.rank[w];
      mn = std::min(mn, r);
      mx = std::max(mx, r);
      sum += r;
      agree = agree && r == es[0].rank[w];
    }
    switch (rule) {
      case OcfRule::max: out.rank[w] = mx; break;
      case OcfRule::sigma: out.rank[w] = static_cast<unsigned>(sum); break;
      case OcfRule::min1: out.rank[w] = agree ? 2 * mn : 2 * mn + 1; break;
      case OcfRule::min2: out.rank[w] = agree ? mn : mn + 1; break;
    }
  }
  return out;
}

// Minimal-rank stratum; never empty.
inline ModelSet bel(const OCF& k, const Signature& sig) {
  unsigned mn = k.min_rank();
  ModelSet out(sig.size());
  for (World w = 0; w < sig.world_count(); ++w)
    if (k.rank[w] == mn) out.insert(w);
  return out;
}

// The flat propositional operators: embed every base as a two-strata OCF,
// merge, extract Bel. Defined without integrity constraints.
inline ModelSet flat_merge(const Profile& e, OcfRule rule, const Signature& sig) {
  std::vector<OCF> es;
  es.reserve(e.size());
  for (const Base& k : e.bases) es.push_back(ocf_from_base(k, sig));
  return bel(merge_ocf(es, rule), sig);
}

// Pointwise non-improvement check for a merging operator: with Delta1 the
// merge of e_rest ⊔ {k} and Delta2 the merge of e_rest ⊔ {k2}, both
//   k ∧ ¬Delta1 ⊨ ¬Delta2   and   ¬k ∧ Delta1 ⊨ Delta2
// must hold. Op is any callable (Profile, Formula, Signature) -> ModelSet.
template <class Op>
bool check_ip_pair(Op&& op, const Profile& e_rest, const Base& k, const Base& k2,
                   const Formula& mu, const Signature& sig) {
  ModelSet d1 = op(e_rest.with(k), mu, sig);
  ModelSet d2 = op(e_rest.with(k2), mu, sig);
  const ModelSet& km = k.models();
  if (!(km & d1.complement()).subset_of(d2.complement())) return false;
  if (!(km.complement() & d1).subset_of(d2)) return false;
  return true;
}

// Summed rank gap between the two-strata embeddings of a base and of a merged
// model set: the cardinality of their symmetric difference. This is the
// quantity whose non-increase characterizes the summed variant of the
// pointwise property, and 1/(gap+1) is exactly the wip index.
inline std::size_t embedded_rank_gap_sum(const ModelSet& k_models, const ModelSet& merged) {
  return (k_models ^ merged).count();
}

} // namespace mergeforge
