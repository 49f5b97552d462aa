#pragma once

// Distance-based merging: rank every interpretation by the aggregate of its
// per-base distances, then keep the constraint models with minimal aggregate.

#include <vector>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/formula.hpp"
#include "mergeforge/metric.hpp"

namespace mergeforge {

struct RankingRow {
  World w;
  std::vector<unsigned> dists;  // one entry per base, profile order
  AggValue agg;
  bool sat_mu;
};

// One row per interpretation, ascending. The merged set is the sat_mu rows
// whose aggregate is minimal.
struct MergeRanking {
  std::vector<RankingRow> rows;
};

inline MergeRanking ranking(const Profile& e, const Formula& mu, const PseudoDistance& d,
                            const AggregationFunction& f, const Signature& sig) {
  ModelSet mu_models = models(mu, sig);
  if (mu_models.empty()) throw domain_error("constraint mu is inconsistent");
  MergeRanking r;
  r.rows.reserve(sig.world_count());
  for (World w = 0; w < sig.world_count(); ++w) {
    RankingRow row;
    row.w = w;
    row.dists.reserve(e.size());
    for (const Base& k : e.bases) row.dists.push_back(dist_to_base(w, k, d, sig));
    row.agg = f(row.dists);
    row.sat_mu = mu_models.contains(w);
    r.rows.push_back(std::move(row));
  }
  return r;
}

inline ModelSet merged_from_ranking(const MergeRanking& r, const Signature& sig) {
  const AggValue* best = nullptr;
  for (const RankingRow& row : r.rows)
    if (row.sat_mu && (!best || compare(row.agg, *best) < 0)) best = &row.agg;
  ModelSet out(sig.size());
  for (const RankingRow& row : r.rows)
    if (row.sat_mu && compare(row.agg, *best) == 0) out.insert(row.w);
  return out;
}

inline ModelSet merge_model_based(const Profile& e, const Formula& mu, const PseudoDistance& d,
                                  const AggregationFunction& f, const Signature& sig) {
  return merged_from_ranking(ranking(e, mu, d, f, sig), sig);
}

inline ModelSet merge_model_based(const Profile& e, const Formula& mu, DistanceId d, AggId f,
                                  const Signature& sig) {
  return merge_model_based(e, mu, builtin_distance(d), builtin_aggregation(f), sig);
}

} // namespace mergeforge
