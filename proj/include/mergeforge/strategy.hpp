#pragma once

// Strategy spaces: the sets of bases an agent may report instead of its true
// one. Candidates enumerate in canonical order: ascending model-set size,
// then member list, then presentation rank for syntactic variants.

#include <algorithm>
#include <string>
#include <vector>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/formula.hpp"

namespace mergeforge {

enum class SpaceKind { semantic_all, erosion, dilation, complete, complete_in_k, explicit_list };

inline const char* space_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::semantic_all: return "semantic-all";
    case SpaceKind::erosion: return "erosion";
    case SpaceKind::dilation: return "dilation";
    case SpaceKind::complete: return "complete";
    case SpaceKind::complete_in_k: return "complete-in-K";
    case SpaceKind::explicit_list: return "explicit";
  }
  return "?";
}

inline SpaceKind space_by_name(const std::string& s) {
  if (s == "semantic-all") return SpaceKind::semantic_all;
  if (s == "erosion") return SpaceKind::erosion;
  if (s == "dilation") return SpaceKind::dilation;
  if (s == "complete") return SpaceKind::complete;
  if (s == "complete-in-K") return SpaceKind::complete_in_k;
  if (s == "explicit") return SpaceKind::explicit_list;
  throw domain_error("unknown strategy space '" + s + "'");
}

struct StrategySpace {
  SpaceKind kind = SpaceKind::semantic_all;
  std::vector<Base> explicit_bases;

  static StrategySpace of(SpaceKind k) { return {k, {}}; }
  static StrategySpace explicit_list(std::vector<Base> bases) {
    return {SpaceKind::explicit_list, std::move(bases)};
  }
};

// The canonical single-formula realization of a model set: its ascending
// canonical DNF.
inline Base canonical_base(const ModelSet& s, const Signature& sig,
                           const std::string& label = "S") {
  return Base(label, {canonical_dnf(s, sig)}, sig);
}

// One literal per variable; only complete sets have this presentation.
inline Base split_base(World w, const Signature& sig, const std::string& label = "S") {
  std::vector<Formula> fs;
  for (int i = 0; i < sig.size(); ++i)
    fs.push_back(sig.bit(w, i) ? f_atom(i) : f_not(f_atom(i)));
  return Base(label, fs, sig);
}

// Two-element presentation {f, f & true} of the canonical DNF: logically the
// same base with one more set member.
inline Base padded_base(const ModelSet& s, const Signature& sig,
                        const std::string& label = "S") {
  Formula f = canonical_dnf(s, sig);
  return Base(label, {f, f_and(f, f_true())}, sig);
}

// Syntactic presentations of a model set used when sweeping the
// syntax-sensitive operators: the canonical DNF, plus its conjunct split when
// that set of conjuncts is a consistent base (exactly the complete sets).
// Padded forms are added on request, mirroring the registered proof-style
// strategies.
inline std::vector<Base> presentation_family(const ModelSet& s, const Signature& sig,
                                             bool include_padded = false,
                                             const std::string& label = "S") {
  std::vector<Base> out;
  out.push_back(canonical_base(s, sig, label));
  if (s.count() == 1) out.push_back(split_base(s.members().front(), sig, label));
  if (include_padded) out.push_back(padded_base(s, sig, label));
  return out;
}

// All non-empty subsets of the given universe in canonical order.
inline std::vector<ModelSet> subsets_canonical(const ModelSet& universe, const Signature& sig) {
  std::vector<World> ws = universe.members();
  std::vector<ModelSet> out;
  out.reserve((std::size_t{1} << ws.size()) - 1);
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ws.size()); ++pick) {
    ModelSet s(sig.size());
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (pick >> i & 1) s.insert(ws[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::vector<ModelSet> subsets_canonical(const Signature& sig) {
  return subsets_canonical(ModelSet::all(sig), sig);
}

// Candidate bases of a strategy space in canonical order.
inline std::vector<Base> enumerate_strategies(const StrategySpace& space, const Base& k,
                                              const Signature& sig) {
  auto realize = [&](const std::vector<ModelSet>& sets) {
    std::vector<Base> out;
    out.reserve(sets.size());
    for (const ModelSet& s : sets) out.push_back(canonical_base(s, sig, "K'"));
    return out;
  };
  switch (space.kind) {
    case SpaceKind::semantic_all:
      return realize(subsets_canonical(sig));
    case SpaceKind::erosion:
      // Reported base entails the true one: non-empty subsets of [K].
      return realize(subsets_canonical(k.models(), sig));
    case SpaceKind::dilation: {
      // True base entails the reported one: supersets of [K].
      std::vector<ModelSet> sets;
      ModelSet outside = k.models().complement();
      std::vector<World> ws = outside.members();
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << ws.size()); ++pick) {
        ModelSet s = k.models();
        for (std::size_t i = 0; i < ws.size(); ++i)
          if (pick >> i & 1) s.insert(ws[i]);
        sets.push_back(std::move(s));
      }
      std::sort(sets.begin(), sets.end(), canonical_less);
      return realize(sets);
    }
    case SpaceKind::complete: {
      std::vector<ModelSet> sets;
      for (World w = 0; w < sig.world_count(); ++w) sets.push_back(ModelSet::of(sig, {w}));
      return realize(sets);
    }
    case SpaceKind::complete_in_k: {
      std::vector<ModelSet> sets;
      for (World w : k.models().members()) sets.push_back(ModelSet::of(sig, {w}));
      return realize(sets);
    }
    case SpaceKind::explicit_list:
      for (const Base& b : space.explicit_bases)
        if (b.models().empty()) throw domain_error("explicit strategy base is inconsistent");
      return space.explicit_bases;
  }
  throw domain_error("unreachable space kind");
}

} // namespace mergeforge
