#pragma once

// Pseudo-distances between interpretations, distance to a base, and
// aggregation into comparable values. Everything is exact integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"

namespace mergeforge {

enum class DistanceId { drastic, hamming };
enum class AggId { sum, max, gmax };

// Scalar for sum/max, non-increasing vector for gmax. Mixing shapes in one
// comparison is a contract violation, as is comparing vectors of different
// length.
struct AggValue {
  bool is_vector = false;
  std::uint64_t scalar = 0;
  std::vector<unsigned> vec;

  static AggValue of(std::uint64_t s) { return {false, s, {}}; }
  static AggValue of_vec(std::vector<unsigned> v) { return {true, 0, std::move(v)}; }

  std::string str() const {
    if (!is_vector) return std::to_string(scalar);
    std::string s = "(";
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vec[i]);
    }
    return s + ")";
  }

  bool operator==(const AggValue& o) const {
    return is_vector == o.is_vector && scalar == o.scalar && vec == o.vec;
  }
};

inline int compare(const AggValue& a, const AggValue& b) {
  if (a.is_vector != b.is_vector)
    throw domain_error("comparing aggregate values of different shapes");
  if (!a.is_vector) return a.scalar < b.scalar ? -1 : a.scalar > b.scalar ? 1 : 0;
  if (a.vec.size() != b.vec.size())
    throw domain_error("comparing aggregate vectors of different lengths");
  return a.vec < b.vec ? -1 : a.vec > b.vec ? 1 : 0;
}

// A named distance evaluation rule. Extensions are admitted through
// make_distance, which checks the axioms before handing out a usable object.
struct PseudoDistance {
  std::string id;
  std::function<unsigned(World, World, const Signature&)> fn;

  unsigned operator()(World a, World b, const Signature& sig) const { return fn(a, b, sig); }
};

struct AggregationFunction {
  std::string id;
  bool vector_valued = false;
  std::function<AggValue(const std::vector<unsigned>&)> fn;

  AggValue operator()(const std::vector<unsigned>& xs) const {
    if (xs.empty()) throw domain_error("aggregation over an empty multiset");
    return fn(xs);
  }
};

inline unsigned hamming_distance(World a, World b, const Signature& sig) {
  (void)sig;
  return static_cast<unsigned>(__builtin_popcount(a ^ b));
}

inline unsigned drastic_distance(World a, World b, const Signature& sig) {
  (void)sig;
  return a == b ? 0u : 1u;
}

// Checked variant for externally supplied bit strings; interpretations from
// different signatures have no distance.
inline unsigned distance(DistanceId d, const std::string& bits1, const std::string& bits2) {
  if (bits1.size() != bits2.size())
    throw domain_error("interpretation length mismatch: '" + bits1 + "' vs '" + bits2 + "'");
  unsigned diff = 0;
  for (std::size_t i = 0; i < bits1.size(); ++i) diff += bits1[i] != bits2[i];
  return d == DistanceId::hamming ? diff : (diff ? 1u : 0u);
}

inline const PseudoDistance& builtin_distance(DistanceId d) {
  static const PseudoDistance dd{"dD", drastic_distance};
  static const PseudoDistance dh{"dH", hamming_distance};
  return d == DistanceId::drastic ? dd : dh;
}

inline AggValue aggregate(AggId f, const std::vector<unsigned>& xs) {
  if (xs.empty()) throw domain_error("aggregation over an empty multiset");
  switch (f) {
    case AggId::sum: {
      std::uint64_t s = 0;
      for (unsigned x : xs) s += x;
      return AggValue::of(s);
    }
    case AggId::max:
      return AggValue::of(*std::max_element(xs.begin(), xs.end()));
    case AggId::gmax: {
      std::vector<unsigned> v = xs;  // keeps zeros: vectors always have length #(E)
      std::sort(v.begin(), v.end(), std::greater<unsigned>());
      return AggValue::of_vec(std::move(v));
    }
  }
  throw domain_error("unreachable aggregation id");
}

inline const AggregationFunction& builtin_aggregation(AggId f) {
  static const AggregationFunction s{"sum", false,
                                     [](const std::vector<unsigned>& xs) { return aggregate(AggId::sum, xs); }};
  static const AggregationFunction m{"max", false,
                                     [](const std::vector<unsigned>& xs) { return aggregate(AggId::max, xs); }};
  static const AggregationFunction g{"gmax", true,
                                     [](const std::vector<unsigned>& xs) { return aggregate(AggId::gmax, xs); }};
  switch (f) {
    case AggId::sum: return s;
    case AggId::max: return m;
    default: return g;
  }
}

// min over the base's models of d(w, .); zero exactly on models of the base.
inline unsigned dist_to_base(World w, const Base& k, const PseudoDistance& d,
                             const Signature& sig) {
  unsigned best = ~0u;
  for (World m : k.models().members()) best = std::min(best, d(m, w, sig));
  return best;
}

inline unsigned dist_to_base(World w, const Base& k, DistanceId d, const Signature& sig) {
  return dist_to_base(w, k, builtin_distance(d), sig);
}

// ---------------------------------------------------------------------------
// Extension hooks. Registration runs an exhaustive axiom check at small
// signature sizes and refuses rule sets that break them.
// ---------------------------------------------------------------------------

// Symmetry and zero-iff-equal, exhaustively over 1..max_vars variables.
inline void validate_distance_axioms(
    const std::function<unsigned(World, World, const Signature&)>& fn, int max_vars = 3) {
  for (int n = 1; n <= max_vars; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    Signature sig(names);
    for (World a = 0; a < sig.world_count(); ++a)
      for (World b = 0; b < sig.world_count(); ++b) {
        if (fn(a, b, sig) != fn(b, a, sig))
          throw domain_error("distance violates symmetry at " + sig.render(a) + "," + sig.render(b));
        if ((fn(a, b, sig) == 0) != (a == b))
          throw domain_error("distance violates zero-iff-equal at " + sig.render(a) + "," +
                             sig.render(b));
      }
  }
}

// Non-decreasingness in each argument, zero-iff-all-zero, and (for scalar
// rules) identity on singleton input. Checked over small input multisets.
inline void validate_aggregation_axioms(
    const std::function<AggValue(const std::vector<unsigned>&)>& fn, bool vector_valued,
    unsigned max_value = 4, std::size_t max_arity = 3) {
  std::vector<std::vector<unsigned>> inputs;
  std::vector<unsigned> cur;
  auto gen = [&](auto&& self, std::size_t arity) -> void {
    if (cur.size() == arity) {
      inputs.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= max_value; ++v) {
      cur.push_back(v);
      self(self, arity);
      cur.pop_back();
    }
  };
  for (std::size_t a = 1; a <= max_arity; ++a) gen(gen, a);

  for (const auto& xs : inputs) {
    AggValue v = fn(xs);
    bool all_zero = std::all_of(xs.begin(), xs.end(), [](unsigned x) { return x == 0; });
    AggValue zero = fn(std::vector<unsigned>(xs.size(), 0));
    if (all_zero != (compare(v, zero) == 0))
      throw domain_error("aggregation violates minimality");
    if (!vector_valued && xs.size() == 1 && (v.is_vector || v.scalar != xs[0]))
      throw domain_error("aggregation violates singleton identity");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto ys = xs;
      ys[i] += 1;
      if (compare(fn(ys), v) < 0)
        throw domain_error("aggregation violates non-decreasingness");
    }
  }
}

inline PseudoDistance make_distance(std::string id,
                                    std::function<unsigned(World, World, const Signature&)> fn,
                                    int max_check_vars = 3) {
  validate_distance_axioms(fn, max_check_vars);
  return PseudoDistance{std::move(id), std::move(fn)};
}

inline AggregationFunction make_aggregation(
    std::string id, bool vector_valued,
    std::function<AggValue(const std::vector<unsigned>&)> fn) {
  validate_aggregation_axioms(fn, vector_valued);
  return AggregationFunction{std::move(id), vector_valued, std::move(fn)};
}

} // namespace mergeforge
