#pragma once

// The five satisfaction indexes: exact rationals scoring how pleased an agent
// with base K is with a merged model set.

#include <algorithm>
#include <string>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/metric.hpp"

namespace mergeforge {

enum class IndexId { dw, ds, p, dalal, wip };

inline const char* index_name(IndexId id) {
  switch (id) {
    case IndexId::dw: return "dw";
    case IndexId::ds: return "ds";
    case IndexId::p: return "p";
    case IndexId::dalal: return "dalal";
    case IndexId::wip: return "wip";
  }
  return "?";
}

inline IndexId index_by_name(const std::string& s) {
  if (s == "dw") return IndexId::dw;
  if (s == "ds") return IndexId::ds;
  if (s == "p") return IndexId::p;
  if (s == "dalal") return IndexId::dalal;
  if (s == "wip") return IndexId::wip;
  throw domain_error("unknown index '" + s + "'");
}

// True for the one case whose value is a convention rather than a reading of
// the definitions: the dalal index over an empty merged set (its minimum over
// an empty set is undefined; we return 0). Callers may surface a notice.
inline bool dalal_empty_convention(IndexId id, const ModelSet& merged) {
  return id == IndexId::dalal && merged.empty();
}

inline Rational index_value(IndexId id, const Base& k, const ModelSet& merged,
                            const Signature& sig) {
  const ModelSet& km = k.models();
  switch (id) {
    case IndexId::dw:
      // Weak drastic: 1 iff the agent keeps at least one model.
      return km.intersects(merged) ? Rational(1, 1) : Rational(0, 1);
    case IndexId::ds:
      // Strong drastic: 1 iff the merged base entails K. An empty merged set
      // entails everything, so it scores 1 (the literal reading).
      return merged.subset_of(km) ? Rational(1, 1) : Rational(0, 1);
    case IndexId::p: {
      // Probability of drawing a model of K uniformly from the merged set.
      if (merged.empty()) return Rational(0, 1);
      return Rational(static_cast<std::int64_t>((km & merged).count()),
                      static_cast<std::int64_t>(merged.count()));
    }
    case IndexId::dalal: {
      // 1 - (min Hamming distance from K to the merged set) / #(P). Always
      // the Hamming distance, whatever the merging operator used.
      if (merged.empty()) return Rational(0, 1);
      unsigned best = ~0u;
      for (World a : km.members())
        for (World b : merged.members())
          best = std::min(best, hamming_distance(a, b, sig));
      return Rational(static_cast<std::int64_t>(sig.size()) - best, sig.size());
    }
    case IndexId::wip:
      // 1 / (|[K] ⊕ merged| + 1); symmetric in its two arguments.
      return Rational(1, static_cast<std::int64_t>((km ^ merged).count()) + 1);
  }
  throw domain_error("unreachable index id");
}

} // namespace mergeforge
