#pragma once

// The manipulability oracle: does some reported base in a strategy space
// strictly improve the agent's satisfaction with the merged result?

#include <optional>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/operators.hpp"
#include "mergeforge/satisfaction.hpp"
#include "mergeforge/strategy.hpp"

namespace mergeforge {

struct ManipulationWitness {
  Base candidate;
  Rational index_truthful;
  Rational index_lying;
  ModelSet merged_truthful;
  ModelSet merged_lying;
};

// First candidate (in the space's canonical order) whose reported merge
// strictly raises the agent's index; equality is never a witness. The
// returned witness is re-evaluated from scratch before being handed back.
inline std::optional<ManipulationWitness> find_manipulation(
    const Profile& e_rest, const Base& k, const OperatorHandle& op, const Formula& mu,
    IndexId id, const StrategySpace& space, const Signature& sig) {
  ModelSet truthful = op.merge(e_rest.with(k), mu, sig);
  Rational truth_val = index_value(id, k, truthful, sig);

  for (const Base& cand : enumerate_strategies(space, k, sig)) {
    ModelSet lying = op.merge(e_rest.with(cand), mu, sig);
    Rational lie_val = index_value(id, k, lying, sig);
    if (lie_val > truth_val) {
      ManipulationWitness w{cand, truth_val, lie_val, truthful, lying};
      // Self-check: recompute both sides fresh; a witness that does not
      // revalidate indicates operator nondeterminism and must not escape.
      ModelSet t2 = op.merge(e_rest.with(k), mu, sig);
      ModelSet l2 = op.merge(e_rest.with(cand), mu, sig);
      if (t2 != truthful || l2 != lying ||
          !(index_value(id, k, l2, sig) > index_value(id, k, t2, sig)))
        throw domain_error("manipulation witness failed revalidation");
      return w;
    }
  }
  return std::nullopt;
}

// Recomputes a witness's merges and index values from scratch.
inline bool revalidate(const ManipulationWitness& w, const Profile& e_rest, const Base& k,
                       const OperatorHandle& op, const Formula& mu, IndexId id,
                       const Signature& sig) {
  ModelSet truthful = op.merge(e_rest.with(k), mu, sig);
  ModelSet lying = op.merge(e_rest.with(w.candidate), mu, sig);
  if (truthful != w.merged_truthful || lying != w.merged_lying) return false;
  Rational tv = index_value(id, k, truthful, sig);
  Rational lv = index_value(id, k, lying, sig);
  return tv == w.index_truthful && lv == w.index_lying && lv > tv;
}

} // namespace mergeforge
