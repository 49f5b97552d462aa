#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "base.hpp"
#include "core.hpp"
#include "formula.hpp"
#include "manipulation.hpp"
#include "operators.hpp"
#include "parse.hpp"
#include "satisfaction.hpp"
#include "strategy.hpp"

namespace mergeforge {

// A claim is a named statement about which operators can or cannot be gamed,
// audited by exhaustive sweeps over small signatures. Each claim splits into
// legs; a leg either sweeps a region expecting no witness (a safety leg),
// sweeps expecting to find one (a gameability leg), or pairs two strategy
// spaces and checks an implication or equivalence between their witnesses.
// Legs may also carry pinned instances: concrete profiles with frozen index
// values that must reproduce exactly, independent of the sweep.

enum class MuMode { top_only, nontop_only, all };
enum class KMode { any, complete, incomplete };
enum class LegKind { sweep, implication, equivalence };

struct PinnedInstance {
  std::string op;
  IndexId index = IndexId::dw;
  std::vector<std::string> vars;
  // Each base is a list of formulas; an entry written "{...}" is a model list
  // realized as its canonical DNF.
  std::vector<std::vector<std::string>> e_rest;
  std::vector<std::string> k;
  std::string mu;  // empty means no constraint
  std::vector<std::string> candidate;
  std::string expect_truthful;
  std::string expect_lying;
};

struct AuditLeg {
  std::string label;
  LegKind kind = LegKind::sweep;
  std::vector<std::string> ops;
  IndexId index = IndexId::dw;
  MuMode mu_mode = MuMode::all;
  std::vector<int> e_sizes{1, 2};
  KMode k_mode = KMode::any;
  bool profile_complete = false;      // swept profile bases restricted to complete sets
  bool syntactic_profile = false;     // profile slots range over presentation variants
  SpaceKind space = SpaceKind::semantic_all;
  bool syntactic_candidates = false;  // candidate slot ranges over presentation variants
  bool padded_candidates = false;     // padded presentations join the candidate pool
  int vars = 2;
  bool expect_witness = false;
  bool sweep_enabled = true;          // off for legs carried by pinned instances alone
  bool dedup_note = false;            // informational rerun over duplicate-free instances
  SpaceKind space_b = SpaceKind::erosion;  // counterpart space for paired legs
  int sample_vars = 0;                // extra randomized pass for equivalence legs
  int sample_count = 0;
  std::uint32_t sample_seed = 0;
  std::vector<PinnedInstance> pinned;
};

struct ClaimSpec {
  std::string id;
  std::string statement;
  std::vector<AuditLeg> legs;
};

struct SweepCounterexample {
  std::string op;
  std::vector<std::string> e_rest;
  std::string mu;
  std::string k;
  std::string candidate;
  std::string index_change;
};

struct PinnedOutcome {
  std::string note;
  bool ok = false;
  std::string detail;
};

struct LegResult {
  std::string label;
  LegKind kind = LegKind::sweep;
  bool expect_witness = false;
  bool sweep_ran = false;
  std::uint64_t instances = 0;
  std::uint64_t counterexamples = 0;
  std::vector<SweepCounterexample> examples;
  bool dedup_ran = false;
  std::uint64_t dedup_instances = 0;
  std::uint64_t dedup_counterexamples = 0;
  std::uint64_t sampled_instances = 0;
  std::vector<PinnedOutcome> pins;
  bool as_expected = true;
  std::string verdict;
};

struct AuditReport {
  std::string id;
  std::string statement;
  std::vector<LegResult> legs;
  bool as_expected = true;
  double seconds = 0.0;
};

// Optional overrides applied to every sweep leg of a claim. Pinned instances
// carry their own signatures and are never rescaled.
struct AuditOptions {
  int vars_override = 0;  // replaces the leg sweep width when positive
  int max_agents = 0;     // caps profile size (other agents + reporter) when positive
};

namespace detail {

inline Signature audit_signature(int vars) {
  static const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g", "h"};
  if (vars < 1 || vars > static_cast<int>(names.size()))
    throw domain_error("audit sweeps support 1 to 8 variables");
  return Signature(std::vector<std::string>(names.begin(), names.begin() + vars));
}

inline bool k_mode_admits(KMode m, const ModelSet& s) {
  switch (m) {
    case KMode::any: return true;
    case KMode::complete: return s.count() == 1;
    case KMode::incomplete: return s.count() >= 2;
  }
  return true;
}

// Constraint choices in canonical order. Proper subsets come first as
// canonical DNFs; the unconstrained case is the plain truth constant and is
// listed last.
inline std::vector<Formula> mu_choices(const Signature& sig, MuMode mode) {
  std::vector<Formula> out;
  if (mode == MuMode::top_only) {
    out.push_back(f_true());
    return out;
  }
  for (const ModelSet& s : subsets_canonical(sig))
    if (s.count() < sig.world_count()) out.push_back(canonical_dnf(s, sig));
  if (mode == MuMode::all) out.push_back(f_true());
  return out;
}

inline std::vector<Base> slot_pool(const std::vector<ModelSet>& sets, const Signature& sig,
                                   bool syntactic, bool padded, const std::string& label) {
  std::vector<Base> out;
  for (const ModelSet& s : sets) {
    if (!syntactic && !padded) {
      out.push_back(canonical_base(s, sig, label));
      continue;
    }
    std::vector<Base> fam = presentation_family(s, sig, padded, label);
    if (!syntactic) fam.erase(fam.begin() + 1, fam.end());  // keep the canonical form
    for (Base& b : fam) out.push_back(std::move(b));
    if (!syntactic && padded) out.push_back(padded_base(s, sig, label));
  }
  return out;
}

// Size-k multisets of pool indices as non-decreasing index tuples, in
// lexicographic order. The callback returns false to stop the enumeration.
template <typename Fn>
inline bool multisets_from(std::size_t pool, int size, std::vector<std::size_t>& idx,
                           std::size_t from, Fn&& fn) {
  if (static_cast<int>(idx.size()) == size) return fn(idx);
  for (std::size_t i = from; i < pool; ++i) {
    idx.push_back(i);
    bool keep = multisets_from(pool, size, idx, i, fn);
    idx.pop_back();
    if (!keep) return false;
  }
  return true;
}

// Bases built from canonical DNFs print as their model sets; anything else
// prints its formula list.
inline std::string describe_base(const Base& b, const Signature& sig) {
  if (b.formulas().size() == 1 &&
      equal(b.formulas().front(), canonical_dnf(b.models(), sig)))
    return b.models().render(sig);
  std::string out = "<";
  for (std::size_t i = 0; i < b.formulas().size(); ++i) {
    if (i) out += "; ";
    out += render(b.formulas()[i], sig);
  }
  return out + ">";
}

inline ModelSet parse_world_list(const std::string& text, const Signature& sig) {
  std::size_t begin = text.find('{');
  std::size_t end = text.rfind('}');
  if (begin == std::string::npos || end == std::string::npos || end < begin)
    throw parse_error("expected a braced model list: " + text);
  ModelSet out = ModelSet::none(sig);
  std::string body = text.substr(begin + 1, end - begin - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    std::size_t a = tok.find_first_not_of(" \t");
    if (a != std::string::npos) {
      std::size_t z = tok.find_last_not_of(" \t");
      out.insert(sig.parse_world(tok.substr(a, z - a + 1)));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw domain_error("empty model list in pinned instance");
  return out;
}

inline Base pinned_base(const std::string& label, const std::vector<std::string>& src,
                        const Signature& sig) {
  std::vector<Formula> fs;
  for (const std::string& s : src) {
    if (!s.empty() && s.front() == '{')
      fs.push_back(canonical_dnf(parse_world_list(s, sig), sig));
    else
      fs.push_back(parse_formula(s, sig));
  }
  return Base(label, fs, sig);
}

inline void record_example(LegResult& res, const OperatorHandle& op, const Profile& e,
                           const Formula& mu, const Base& k, const Base& candidate,
                           const std::string& change, const Signature& sig) {
  if (res.examples.size() >= 3) return;
  SweepCounterexample ce;
  ce.op = op.name();
  for (const Base& b : e.bases) ce.e_rest.push_back(describe_base(b, sig));
  ce.mu = render(mu, sig);
  ce.k = describe_base(k, sig);
  ce.candidate = describe_base(candidate, sig);
  ce.index_change = change;
  res.examples.push_back(std::move(ce));
}

// Iterates every swept instance of a leg: profile choices come first (sizes
// in the order listed, multisets over the realized pool), then constraints,
// then reporter bases. The callback returns false to stop early.
template <typename Fn>
inline void leg_instances(const AuditLeg& leg, const Signature& sig, Fn&& fn) {
  std::vector<ModelSet> sets;
  for (const ModelSet& s : subsets_canonical(sig))
    if (!leg.profile_complete || s.count() == 1) sets.push_back(s);

  std::vector<Base> pool = slot_pool(sets, sig, leg.syntactic_profile, false, "E");
  std::vector<ModelSet> k_sets;
  for (const ModelSet& s : sets)
    if (k_mode_admits(leg.k_mode, s)) k_sets.push_back(s);
  std::vector<Base> k_pool = slot_pool(k_sets, sig, leg.syntactic_profile, false, "K");
  std::vector<Formula> mus = mu_choices(sig, leg.mu_mode);

  std::vector<std::size_t> idx;
  for (int size : leg.e_sizes) {
    bool keep = multisets_from(pool.size(), size, idx, 0, [&](const std::vector<std::size_t>& chosen) {
      Profile e;
      for (std::size_t i : chosen) e.bases.push_back(pool[i]);
      for (const Formula& mu : mus)
        for (const Base& k : k_pool)
          if (!fn(e, mu, k)) return false;
      return true;
    });
    if (!keep) return;
  }
}

inline StrategySpace leg_space(const AuditLeg& leg, const Signature& sig) {
  if (!leg.syntactic_candidates && !leg.padded_candidates)
    return StrategySpace::of(leg.space);
  std::vector<ModelSet> range;
  switch (leg.space) {
    case SpaceKind::semantic_all:
      range = subsets_canonical(sig);
      break;
    case SpaceKind::complete:
      for (World w = 0; w < sig.world_count(); ++w) range.push_back(ModelSet::of(sig, {w}));
      break;
    default:
      throw domain_error("presentation variants need an absolute strategy space");
  }
  std::vector<Base> cands;
  for (const ModelSet& s : range) {
    std::vector<Base> fam = presentation_family(s, sig, leg.padded_candidates, "K'");
    if (!leg.syntactic_candidates) {
      cands.push_back(fam.front());
      if (leg.padded_candidates) cands.push_back(fam.back());
    } else {
      for (Base& b : fam) cands.push_back(std::move(b));
    }
  }
  return StrategySpace::explicit_list(std::move(cands));
}

inline void run_sweep(const AuditLeg& leg, const Signature& sig, LegResult& res) {
  StrategySpace space = leg_space(leg, sig);
  res.sweep_ran = true;
  for (const std::string& opname : leg.ops) {
    const OperatorHandle& op = OperatorHandle::by_name(opname);
    bool stop = false;
    leg_instances(leg, sig, [&](const Profile& e, const Formula& mu, const Base& k) {
      ++res.instances;
      std::optional<ManipulationWitness> w =
          find_manipulation(e, k, op, mu, leg.index, space, sig);
      if (w) {
        ++res.counterexamples;
        record_example(res, op, e, mu, k, w->candidate,
                       std::string("i_") + index_name(leg.index) + " " +
                           w->index_truthful.str() + " -> " + w->index_lying.str(),
                       sig);
        if (leg.expect_witness) {
          stop = true;
          return false;
        }
      }
      return true;
    });
    if (stop) break;
  }
}

// Informational rerun restricted to duplicate-free instances: profile
// members and the reporter denote pairwise distinct sets, and no candidate
// duplicates a profile member's set.
inline void run_dedup_pass(const AuditLeg& leg, const Signature& sig, LegResult& res) {
  std::vector<ModelSet> sets;
  for (const ModelSet& s : subsets_canonical(sig))
    if (!leg.profile_complete || s.count() == 1) sets.push_back(s);
  std::vector<Formula> mus = mu_choices(sig, leg.mu_mode);
  res.dedup_ran = true;

  for (const std::string& opname : leg.ops) {
    const OperatorHandle& op = OperatorHandle::by_name(opname);
    for (int size : leg.e_sizes) {
      std::vector<std::size_t> idx;
      // Strictly increasing index tuples: profile members are distinct sets.
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(idx.size()) == size) {
          Profile e;
          for (std::size_t i : idx) e.bases.push_back(canonical_base(sets[i], sig, "E"));
          std::vector<Base> cands;
          for (std::size_t i = 0; i < sets.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
              cands.push_back(canonical_base(sets[i], sig, "K'"));
          StrategySpace space = StrategySpace::explicit_list(cands);
          for (const Formula& mu : mus) {
            for (std::size_t ki = 0; ki < sets.size(); ++ki) {
              if (!k_mode_admits(leg.k_mode, sets[ki])) continue;
              if (std::find(idx.begin(), idx.end(), ki) != idx.end()) continue;
              ++res.dedup_instances;
              Base k = canonical_base(sets[ki], sig, "K");
              if (find_manipulation(e, k, op, mu, leg.index, space, sig))
                ++res.dedup_counterexamples;
            }
          }
          return;
        }
        for (std::size_t i = from; i < sets.size(); ++i) {
          idx.push_back(i);
          rec(i + 1);
          idx.pop_back();
        }
      };
      rec(0);
    }
  }
}

inline void run_paired(const AuditLeg& leg, const Signature& sig, LegResult& res) {
  StrategySpace space_a = StrategySpace::of(leg.space);
  StrategySpace space_b = StrategySpace::of(leg.space_b);
  res.sweep_ran = true;
  for (const std::string& opname : leg.ops) {
    const OperatorHandle& op = OperatorHandle::by_name(opname);
    leg_instances(leg, sig, [&](const Profile& e, const Formula& mu, const Base& k) {
      ++res.instances;
      std::optional<ManipulationWitness> wa =
          find_manipulation(e, k, op, mu, leg.index, space_a, sig);
      if (leg.kind == LegKind::implication) {
        if (wa && !find_manipulation(e, k, op, mu, leg.index, space_b, sig)) {
          ++res.counterexamples;
          record_example(res, op, e, mu, k, wa->candidate,
                         std::string("no witness in the ") + space_name(leg.space_b) +
                             " space",
                         sig);
        }
      } else {
        std::optional<ManipulationWitness> wb =
            find_manipulation(e, k, op, mu, leg.index, space_b, sig);
        if (wa.has_value() != wb.has_value()) {
          ++res.counterexamples;
          const Base& shown = wa ? wa->candidate : wb->candidate;
          record_example(res, op, e, mu, k, shown,
                         std::string("witness only in the ") +
                             space_name(wa ? leg.space : leg.space_b) + " space",
                         sig);
        }
      }
      return true;
    });
  }
}

inline void run_sampled_equivalence(const AuditLeg& leg, LegResult& res) {
  if (leg.sample_vars <= 0 || leg.sample_count <= 0) return;
  Signature sig = audit_signature(leg.sample_vars);
  const OperatorHandle& op = OperatorHandle::by_name(leg.ops.front());
  StrategySpace space_a = StrategySpace::of(leg.space);
  StrategySpace space_b = StrategySpace::of(leg.space_b);
  std::mt19937 rng(leg.sample_seed);
  const std::uint32_t full = (std::uint32_t{1} << sig.world_count()) - 1;

  auto random_set = [&]() {
    std::uint32_t mask = 0;
    while (mask == 0) mask = rng() & full;
    ModelSet s(sig.size());
    for (World w = 0; w < sig.world_count(); ++w)
      if (mask >> w & 1) s.insert(w);
    return s;
  };

  for (int i = 0; i < leg.sample_count; ++i) {
    int size = leg.e_sizes[rng() % leg.e_sizes.size()];
    Profile e;
    for (int j = 0; j < size; ++j)
      e.bases.push_back(canonical_base(random_set(), sig, "E" + std::to_string(j + 1)));
    Base k = canonical_base(random_set(), sig, "K");
    std::uint32_t mu_mask = 0;
    while (mu_mask == 0) mu_mask = rng() & full;
    ModelSet mu_set(sig.size());
    for (World w = 0; w < sig.world_count(); ++w)
      if (mu_mask >> w & 1) mu_set.insert(w);
    Formula mu = mu_mask == full ? f_true() : canonical_dnf(mu_set, sig);

    ++res.sampled_instances;
    bool wa = find_manipulation(e, k, op, mu, leg.index, space_a, sig).has_value();
    bool wb = find_manipulation(e, k, op, mu, leg.index, space_b, sig).has_value();
    if (wa != wb) {
      ++res.counterexamples;
      if (res.examples.size() < 3) {
        SweepCounterexample ce;
        ce.op = op.name();
        for (const Base& b : e.bases) ce.e_rest.push_back(describe_base(b, sig));
        ce.mu = render(mu, sig);
        ce.k = describe_base(k, sig);
        ce.candidate = "(sampled)";
        ce.index_change = std::string("witness only in the ") +
                          space_name(wa ? leg.space : leg.space_b) + " space";
        res.examples.push_back(std::move(ce));
      }
    }
  }
}

inline PinnedOutcome run_pinned(const PinnedInstance& pin) {
  PinnedOutcome out;
  try {
    Signature sig(pin.vars);
    Profile e;
    for (std::size_t i = 0; i < pin.e_rest.size(); ++i)
      e.bases.push_back(pinned_base("E" + std::to_string(i + 1), pin.e_rest[i], sig));
    Base k = pinned_base("K", pin.k, sig);
    Base cand = pinned_base("K'", pin.candidate, sig);
    Formula mu = pin.mu.empty() ? f_true() : parse_formula(pin.mu, sig);
    const OperatorHandle& op = OperatorHandle::by_name(pin.op);

    out.note = pin.op;
    out.note += ", e=(";
    for (std::size_t i = 0; i < e.bases.size(); ++i) {
      if (i) out.note += ", ";
      out.note += describe_base(e.bases[i], sig);
    }
    out.note += "), K=" + describe_base(k, sig);
    if (!pin.mu.empty()) out.note += ", mu=" + render(mu, sig);
    out.note += ", K'=" + describe_base(cand, sig);

    ModelSet truthful = op.merge(e.with(k), mu, sig);
    ModelSet lying = op.merge(e.with(cand), mu, sig);
    Rational tv = index_value(pin.index, k, truthful, sig);
    Rational lv = index_value(pin.index, k, lying, sig);
    Rational et = parse_rational(pin.expect_truthful);
    Rational el = parse_rational(pin.expect_lying);
    out.ok = tv == et && lv == el && lv > tv;
    out.detail = std::string("i_") + index_name(pin.index) + " " + tv.str() + " -> " +
                 lv.str();
    if (!out.ok)
      out.detail += " (expected " + et.str() + " -> " + el.str() + ", strictly rising)";
  } catch (const std::exception& ex) {
    out.ok = false;
    out.detail = std::string("error: ") + ex.what();
  }
  return out;
}

inline bool leg_mentions_formula_op(const AuditLeg& leg) {
  for (const std::string& opname : leg.ops)
    if (OperatorHandle::by_name(opname).family() == OperatorFamily::formula_based)
      return true;
  return false;
}

inline std::string leg_verdict(const AuditLeg& leg, const LegResult& res, bool sweep_ok) {
  std::string text;
  if (leg.kind == LegKind::implication) {
    text = sweep_ok ? "confirmed: every witness survives the space restriction"
                    : "REFUTED: " + std::to_string(res.counterexamples) +
                          " witnesses escape the restricted space";
  } else if (leg.kind == LegKind::equivalence) {
    text = sweep_ok ? "confirmed: both spaces witness the same instances"
                    : "REFUTED: " + std::to_string(res.counterexamples) +
                          " instances witnessed in only one space";
  } else if (leg.expect_witness) {
    if (!res.sweep_ran)
      text = "confirmed-manipulable (pinned instance only)";
    else if (sweep_ok)
      text = "confirmed-manipulable";
    else
      text = "NOT FOUND: expected a counterexample in this region";
  } else if (sweep_ok) {
    text = "confirmed-SP";
    if (leg_mentions_formula_op(leg)) text += " (semantic strategies only)";
  } else {
    text = "REFUTED: " + std::to_string(res.counterexamples) + " counterexamples";
  }
  for (const PinnedOutcome& p : res.pins)
    if (!p.ok) {
      text += "; pinned instance check FAILED";
      break;
    }
  return text;
}

}  // namespace detail

inline LegResult run_leg(AuditLeg leg, const AuditOptions& opt = {}) {
  if (opt.vars_override > 0) leg.vars = opt.vars_override;
  if (opt.max_agents > 0) {
    std::vector<int> sizes;
    for (int s : leg.e_sizes)
      if (s + 1 <= opt.max_agents) sizes.push_back(s);
    leg.e_sizes = sizes;
  }

  LegResult res;
  res.label = leg.label;
  res.kind = leg.kind;
  res.expect_witness = leg.expect_witness;

  if (leg.kind == LegKind::sweep) {
    if (leg.sweep_enabled && !leg.e_sizes.empty()) {
      Signature sig = detail::audit_signature(leg.vars);
      detail::run_sweep(leg, sig, res);
      if (leg.dedup_note && res.counterexamples > 0) detail::run_dedup_pass(leg, sig, res);
    }
  } else {
    if (!leg.e_sizes.empty()) {
      Signature sig = detail::audit_signature(leg.vars);
      detail::run_paired(leg, sig, res);
      if (leg.kind == LegKind::equivalence) detail::run_sampled_equivalence(leg, res);
    }
  }

  for (const PinnedInstance& pin : leg.pinned) res.pins.push_back(detail::run_pinned(pin));

  bool sweep_ok = true;
  if (res.sweep_ran || res.sampled_instances > 0) {
    if (leg.kind != LegKind::sweep)
      sweep_ok = res.counterexamples == 0;
    else if (leg.expect_witness)
      sweep_ok = res.counterexamples > 0;
    else
      sweep_ok = res.counterexamples == 0;
  }
  bool pins_ok = true;
  for (const PinnedOutcome& p : res.pins) pins_ok = pins_ok && p.ok;
  res.as_expected = sweep_ok && pins_ok;
  res.verdict = detail::leg_verdict(leg, res, sweep_ok);
  return res;
}

inline AuditReport audit_claim(const ClaimSpec& claim, const AuditOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.id = claim.id;
  report.statement = claim.statement;
  for (const AuditLeg& leg : claim.legs) {
    report.legs.push_back(run_leg(leg, opt));
    report.as_expected = report.as_expected && report.legs.back().as_expected;
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Claim registry.

namespace detail {

inline PinnedInstance pin(std::string op, IndexId idx, std::vector<std::string> vars,
                          std::vector<std::vector<std::string>> e_rest,
                          std::vector<std::string> k, std::string mu,
                          std::vector<std::string> candidate, std::string truthful,
                          std::string lying) {
  PinnedInstance p;
  p.op = std::move(op);
  p.index = idx;
  p.vars = std::move(vars);
  p.e_rest = std::move(e_rest);
  p.k = std::move(k);
  p.mu = std::move(mu);
  p.candidate = std::move(candidate);
  p.expect_truthful = std::move(truthful);
  p.expect_lying = std::move(lying);
  return p;
}

inline const std::vector<std::string> V2{"a", "b"};
inline const std::vector<std::string> V3{"a", "b", "c"};
inline const std::vector<std::string> V4{"a", "b", "c", "d"};

// Legs are written with designated initializers and deliberately omit the
// fields that keep their defaults.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wmissing-field-initializers"

inline std::vector<ClaimSpec> build_claim_registry() {
  using enum IndexId;
  using enum MuMode;
  using enum KMode;
  using enum LegKind;
  std::vector<ClaimSpec> reg;

  // Shared pinned instances.
  const PinnedInstance maxcons_p_pin_c1 =
      pin("c1", p, V2, {{"!(a & b)"}}, {"a & b"}, "", {"a", "b"}, "1/4", "1/3");
  const PinnedInstance hat_p_pin_hc1 =
      pin("hc1", p, V2, {{"a & b"}, {"!a"}}, {"a & b"}, "", {"!a & b"}, "1/3", "1/2");

  reg.push_back(ClaimSpec{
      "T2.1",
      "The drastic-distance operators cannot be gamed for any of the three core indexes.",
      {
          AuditLeg{.label = "drastic ops, i_p",
                   .ops = {"dD-sum", "dD-max", "dD-gmax"},
                   .index = p},
          AuditLeg{.label = "drastic ops, i_dw",
                   .ops = {"dD-sum", "dD-max", "dD-gmax"},
                   .index = dw},
          AuditLeg{.label = "drastic ops, i_ds",
                   .ops = {"dD-sum", "dD-max", "dD-gmax"},
                   .index = ds},
      }});

  reg.push_back(ClaimSpec{
      "T2.2",
      "Sum merging cannot be gamed for the drastic indexes when exactly one other "
      "agent reports and no constraint is imposed.",
      {
          AuditLeg{.label = "sum ops, i_dw, no constraint, one other agent",
                   .ops = {"dD-sum", "dH-sum"},
                   .index = dw,
                   .mu_mode = top_only,
                   .e_sizes = {1}},
          AuditLeg{.label = "sum ops, i_ds, no constraint, one other agent",
                   .ops = {"dD-sum", "dH-sum"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {1}},
      }});

  reg.push_back(ClaimSpec{
      "T2.3",
      "Sum merging cannot be gamed by an agent whose own base is complete.",
      {
          AuditLeg{.label = "sum ops, i_p, complete reporter",
                   .ops = {"dD-sum", "dH-sum"},
                   .index = p,
                   .k_mode = complete},
          AuditLeg{.label = "sum ops, i_dw, complete reporter",
                   .ops = {"dD-sum", "dH-sum"},
                   .index = dw,
                   .k_mode = complete},
          AuditLeg{.label = "sum ops, i_ds, complete reporter",
                   .ops = {"dD-sum", "dH-sum"},
                   .index = ds,
                   .k_mode = complete},
      }});

  reg.push_back(ClaimSpec{
      "T3.dw",
      "Hamming-sum merging resists gaming for the drastic indexes exactly in the safe "
      "region: no constraint with two agents, or a complete reporter. Outside it, "
      "counterexamples exist.",
      {
          AuditLeg{.label = "i_dw safe: no constraint, two agents",
                   .ops = {"dH-sum"},
                   .index = dw,
                   .mu_mode = top_only,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_ds safe: no constraint, two agents",
                   .ops = {"dH-sum"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_dw safe: complete reporter",
                   .ops = {"dH-sum"},
                   .index = dw,
                   .k_mode = complete},
          AuditLeg{.label = "i_ds safe: complete reporter",
                   .ops = {"dH-sum"},
                   .index = ds,
                   .k_mode = complete},
          AuditLeg{.label = "i_dw gameable: no constraint, three agents, incomplete reporter",
                   .ops = {"dH-sum"},
                   .index = dw,
                   .mu_mode = top_only,
                   .e_sizes = {2},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("dH-sum", dw, V2, {{"{01, 10, 11}"}, {"{01}"}},
                                  {"{00, 10}"}, "", {"{10}"}, "0", "1")}},
          AuditLeg{.label = "i_ds gameable: no constraint, three agents, incomplete reporter",
                   .ops = {"dH-sum"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {2},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("dH-sum", ds, V3, {{"{001, 110}"}, {"{000, 110}"}},
                                  {"{000, 001, 111}"}, "", {"{000, 001}"}, "0", "1")}},
          AuditLeg{.label = "i_dw gameable: constrained, two agents, incomplete reporter",
                   .ops = {"dH-sum"},
                   .index = dw,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("dH-sum", dw, V2, {{"{10}"}}, {"{00, 01}"}, "a | b",
                                  {"{01}"}, "0", "1")}},
          AuditLeg{.label = "i_ds gameable: constrained, two agents, incomplete reporter",
                   .ops = {"dH-sum"},
                   .index = ds,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("dH-sum", ds, V3, {{"{000, 001}"}}, {"{000, 111}"},
                                  "a & b | a & !b & !c", {"{111}"}, "0", "1")}},
      }});

  reg.push_back(ClaimSpec{
      "T3.p",
      "Hamming-sum merging resists proportion gaming exactly when the reporter's base "
      "is complete; otherwise counterexamples exist even unconstrained with two agents.",
      {
          AuditLeg{.label = "i_p safe: complete reporter",
                   .ops = {"dH-sum"},
                   .index = p,
                   .k_mode = complete},
          AuditLeg{.label = "i_p gameable: incomplete reporter, no constraint, two agents",
                   .ops = {"dH-sum"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("dH-sum", p, V3, {{"{011, 101, 110, 111}"}},
                                  {"{000, 001, 010, 100}"}, "", {"{000}"}, "1/2", "4/7")}},
      }});

  reg.push_back(ClaimSpec{
      "T4.dw",
      "Hamming-leximax merging can be gamed for the overlap and proportion indexes "
      "even in the most favorable setting: no constraint, two agents, complete bases.",
      {
          AuditLeg{.label = "i_dw gameable in the favorable setting",
                   .ops = {"dH-gmax"},
                   .index = dw,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .vars = 3,
                   .expect_witness = true,
                   .pinned = {pin("dH-gmax", dw, V3, {{"{111}"}}, {"{001}"}, "",
                                  {"{000}"}, "0", "1")}},
          AuditLeg{.label = "i_p gameable in the favorable setting",
                   .ops = {"dH-gmax"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .vars = 3,
                   .expect_witness = true,
                   .pinned = {pin("dH-gmax", p, V3, {{"{111}"}}, {"{001}"}, "",
                                  {"{000}"}, "0", "1/6")}},
      }});

  reg.push_back(ClaimSpec{
      "T4.ds",
      "Hamming-leximax merging resists containment gaming exactly when all three "
      "hold: no constraint, two agents, complete reporter. Dropping any one "
      "reopens counterexamples.",
      {
          AuditLeg{.label = "i_ds safe: no constraint, two agents, complete reporter",
                   .ops = {"dH-gmax"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete},
          AuditLeg{.label = "i_ds gameable with three agents",
                   .ops = {"dH-gmax"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {2},
                   .k_mode = complete,
                   .expect_witness = true,
                   .pinned = {pin("dH-gmax", ds, V2, {{"{11}"}, {"{00, 01, 11}"}},
                                  {"{01}"}, "", {"{00}"}, "0", "1")}},
          AuditLeg{.label = "i_ds gameable with an incomplete reporter",
                   .ops = {"dH-gmax"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("dH-gmax", ds, V2, {{"{11}"}}, {"{01, 10}"}, "",
                                  {"{00}"}, "0", "1")}},
          AuditLeg{.label = "i_ds gameable under a constraint",
                   .ops = {"dH-gmax"},
                   .index = ds,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .expect_witness = true,
                   .pinned = {pin("dH-gmax", ds, V2, {{"{11}"}}, {"{01}"}, "!a | b",
                                  {"{00}"}, "0", "1")}},
      }});

  reg.push_back(ClaimSpec{
      "T5.C1",
      "Inclusion-maximal subbase merging can be gamed for the proportion index even "
      "in the favorable setting, but resists both drastic indexes.",
      {
          AuditLeg{.label = "i_p gameable in the favorable setting",
                   .ops = {"c1"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {maxcons_p_pin_c1}},
          AuditLeg{.label = "i_dw safe across presentations",
                   .ops = {"c1"},
                   .index = dw,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
          AuditLeg{.label = "i_ds safe across presentations",
                   .ops = {"c1"},
                   .index = ds,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
      }});

  reg.push_back(ClaimSpec{
      "T5.C3",
      "Unconstrained-maximal subbase merging resists drastic-index gaming exactly "
      "when no constraint is imposed; any constraint reopens counterexamples, and "
      "the proportion index is gameable regardless.",
      {
          AuditLeg{.label = "i_p gameable in the favorable setting",
                   .ops = {"c3"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c3", p, V2, {{"!(a & b)"}}, {"a & b"}, "",
                                  {"a", "b"}, "1/4", "1/3")}},
          AuditLeg{.label = "i_dw safe when unconstrained",
                   .ops = {"c3"},
                   .index = dw,
                   .mu_mode = top_only,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
          AuditLeg{.label = "i_ds safe when unconstrained",
                   .ops = {"c3"},
                   .index = ds,
                   .mu_mode = top_only,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
          AuditLeg{.label = "i_dw gameable under a constraint",
                   .ops = {"c3"},
                   .index = dw,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c3", dw, V2, {{"!a"}}, {"a & b"}, "!b", {"a"},
                                  "0", "1")}},
          AuditLeg{.label = "i_ds gameable under a constraint",
                   .ops = {"c3"},
                   .index = ds,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c3", ds, V2, {{"!a"}}, {"a & b"}, "!a & !b",
                                  {"!a & b"}, "0", "1")}},
      }});

  reg.push_back(ClaimSpec{
      "T5.C4",
      "Cardinality-maximal subbase merging can be gamed for all three core indexes "
      "even in the favorable setting, using padded presentations of the same beliefs.",
      {
          AuditLeg{.label = "i_p gameable in the favorable setting",
                   .ops = {"c4"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c4", p, V2, {{"!(a & b)"}}, {"a & b"}, "",
                                  {"a", "b"}, "1/4", "1/3")}},
          AuditLeg{.label = "i_dw gameable via padding",
                   .ops = {"c4"},
                   .index = dw,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c4", dw, V2, {{"!a", "!a & true"}}, {"a"}, "",
                                  {"a", "a & true"}, "0", "1")}},
          AuditLeg{.label = "i_ds gameable via padding",
                   .ops = {"c4"},
                   .index = ds,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c4", ds, V2, {{"!a"}}, {"a"}, "", {"a", "a & true"},
                                  "0", "1")}},
      }});

  reg.push_back(ClaimSpec{
      "T5.C5",
      "Constraint-repaired subbase merging resists overlap gaming when unconstrained "
      "or facing a complete reporter, and containment gaming exactly when "
      "unconstrained; the proportion index stays gameable.",
      {
          AuditLeg{.label = "i_p gameable in the favorable setting",
                   .ops = {"c5"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c5", p, V2, {{"!(a & b)"}}, {"a & b"}, "",
                                  {"a", "b"}, "1/4", "1/3")}},
          AuditLeg{.label = "i_dw safe when unconstrained",
                   .ops = {"c5"},
                   .index = dw,
                   .mu_mode = top_only,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
          AuditLeg{.label = "i_dw safe with a complete reporter",
                   .ops = {"c5"},
                   .index = dw,
                   .k_mode = complete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
          AuditLeg{.label = "i_dw gameable: constrained, incomplete reporter",
                   .ops = {"c5"},
                   .index = dw,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .k_mode = incomplete,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c5", dw, V2, {{"b", "!a"}}, {"a"}, "!a | !b",
                                  {"a & !b"}, "0", "1")}},
          AuditLeg{.label = "i_ds safe when unconstrained",
                   .ops = {"c5"},
                   .index = ds,
                   .mu_mode = top_only,
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .padded_candidates = true},
          AuditLeg{.label = "i_ds gameable under a constraint",
                   .ops = {"c5"},
                   .index = ds,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .syntactic_profile = true,
                   .syntactic_candidates = true,
                   .expect_witness = true,
                   .pinned = {pin("c5", ds, V2, {{"!b"}}, {"a & b"}, "a",
                                  {"a & b", "b | !a"}, "0", "1")}},
      }});

  reg.push_back(ClaimSpec{
      "T6.HC1",
      "Conjunction-first inclusion merging resists both drastic indexes outright, "
      "and proportion gaming exactly when two agents merge.",
      {
          AuditLeg{.label = "i_dw safe", .ops = {"hc1"}, .index = dw},
          AuditLeg{.label = "i_ds safe", .ops = {"hc1"}, .index = ds},
          AuditLeg{.label = "i_p safe with two agents",
                   .ops = {"hc1"},
                   .index = p,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_p gameable with three agents",
                   .ops = {"hc1"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {2},
                   .k_mode = complete,
                   .expect_witness = true,
                   .pinned = {hat_p_pin_hc1}},
      }});

  reg.push_back(ClaimSpec{
      "T6.HC3",
      "Conjunction-first unconstrained-maxcons merging resists drastic gaming exactly "
      "when no constraint is imposed, and proportion gaming only when two agents "
      "merge unconstrained.",
      {
          AuditLeg{.label = "i_dw safe when unconstrained",
                   .ops = {"hc3"},
                   .index = dw,
                   .mu_mode = top_only},
          AuditLeg{.label = "i_ds safe when unconstrained",
                   .ops = {"hc3"},
                   .index = ds,
                   .mu_mode = top_only},
          AuditLeg{.label = "i_dw gameable under a constraint",
                   .ops = {"hc3"},
                   .index = dw,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .expect_witness = true,
                   .pinned = {pin("hc3", dw, V2, {{"!a"}}, {"a & b"}, "!b", {"a"},
                                  "0", "1")}},
          AuditLeg{.label = "i_ds gameable under a constraint",
                   .ops = {"hc3"},
                   .index = ds,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .expect_witness = true,
                   .pinned = {pin("hc3", ds, V2, {{"!a"}}, {"a & b"}, "!a & !b",
                                  {"!a & b"}, "0", "1")}},
          AuditLeg{.label = "i_p safe: two agents, no constraint",
                   .ops = {"hc3"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_p gameable with three agents",
                   .ops = {"hc3"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {2},
                   .k_mode = complete,
                   .expect_witness = true,
                   .pinned = {pin("hc3", p, V2, {{"a & b"}, {"!a"}}, {"a & b"}, "",
                                  {"!a & b"}, "1/3", "1/2")}},
          AuditLeg{.label = "i_p gameable under a constraint",
                   .ops = {"hc3"},
                   .index = p,
                   .mu_mode = nontop_only,
                   .e_sizes = {1},
                   .expect_witness = true,
                   .pinned = {pin("hc3", p, V2, {{"!a"}}, {"a & b"}, "!b", {"a"},
                                  "0", "1/4")}},
      }});

  reg.push_back(ClaimSpec{
      "T6.HC4",
      "Conjunction-first cardinality merging resists gaming for all three core "
      "indexes.",
      {
          AuditLeg{.label = "i_dw safe", .ops = {"hc4"}, .index = dw, .dedup_note = true},
          AuditLeg{.label = "i_ds safe", .ops = {"hc4"}, .index = ds, .dedup_note = true},
          AuditLeg{.label = "i_p safe", .ops = {"hc4"}, .index = p, .dedup_note = true},
      }});

  reg.push_back(ClaimSpec{
      "T6.HC5",
      "Conjunction-first repaired merging: overlap is safe with two agents, no "
      "constraint, or a complete reporter; containment is safe with two agents or no "
      "constraint; proportion is safe exactly with two agents.",
      {
          AuditLeg{.label = "i_dw safe with two agents",
                   .ops = {"hc5"},
                   .index = dw,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_dw safe when unconstrained",
                   .ops = {"hc5"},
                   .index = dw,
                   .mu_mode = top_only},
          AuditLeg{.label = "i_dw safe with a complete reporter",
                   .ops = {"hc5"},
                   .index = dw,
                   .k_mode = complete},
          AuditLeg{.label = "i_dw gameable: constrained, three agents, incomplete reporter",
                   .ops = {"hc5"},
                   .index = dw,
                   .mu_mode = nontop_only,
                   .e_sizes = {2},
                   .k_mode = incomplete,
                   .expect_witness = true,
                   .pinned = {pin("hc5", dw, V2, {{"!a"}, {"a & !b"}}, {"b"}, "a",
                                  {"b & a"}, "0", "1")}},
          AuditLeg{.label = "i_ds safe with two agents",
                   .ops = {"hc5"},
                   .index = ds,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_ds safe when unconstrained",
                   .ops = {"hc5"},
                   .index = ds,
                   .mu_mode = top_only},
          AuditLeg{.label = "i_ds gameable: constrained, three agents",
                   .ops = {"hc5"},
                   .index = ds,
                   .mu_mode = nontop_only,
                   .e_sizes = {2},
                   .expect_witness = true,
                   .pinned = {pin("hc5", ds, V2, {{"a & b"}, {"!a | !b"}}, {"a & b"},
                                  "a", {"!a & !b"}, "0", "1")}},
          AuditLeg{.label = "i_p safe with two agents",
                   .ops = {"hc5"},
                   .index = p,
                   .e_sizes = {1}},
          AuditLeg{.label = "i_p gameable with three agents",
                   .ops = {"hc5"},
                   .index = p,
                   .mu_mode = top_only,
                   .e_sizes = {2},
                   .k_mode = complete,
                   .expect_witness = true,
                   .pinned = {pin("hc5", p, V2, {{"a & b"}, {"!a"}}, {"a & b"}, "",
                                  {"!a & b"}, "1/3", "1/2")}},
      }});

  // The complete-base grid: every profile member, the reporter, and every
  // candidate strategy denote single worlds.
  {
    std::vector<AuditLeg> legs;
    auto grid = [&](std::string label, std::vector<std::string> ops, IndexId idx) {
      return AuditLeg{.label = std::move(label),
                      .ops = std::move(ops),
                      .index = idx,
                      .k_mode = complete,
                      .profile_complete = true,
                      .space = SpaceKind::complete};
    };
    legs.push_back(grid("drastic ops, i_p", {"dD-sum", "dD-max", "dD-gmax"}, p));
    legs.push_back(grid("drastic ops, i_dw", {"dD-sum", "dD-max", "dD-gmax"}, dw));
    legs.push_back(grid("drastic ops, i_ds", {"dD-sum", "dD-max", "dD-gmax"}, ds));
    legs.push_back(grid("sum ops, i_p", {"dD-sum", "dH-sum"}, p));
    legs.push_back(grid("sum ops, i_dw", {"dD-sum", "dH-sum"}, dw));
    legs.push_back(grid("sum ops, i_ds", {"dD-sum", "dH-sum"}, ds));

    AuditLeg gmax_p = grid("dH-gmax gameable, i_p", {"dH-gmax"}, p);
    gmax_p.mu_mode = top_only;
    gmax_p.e_sizes = {1};
    gmax_p.vars = 3;
    gmax_p.expect_witness = true;
    gmax_p.pinned = {pin("dH-gmax", p, V3, {{"{111}"}}, {"{001}"}, "", {"{000}"},
                         "0", "1/6")};
    legs.push_back(gmax_p);

    AuditLeg gmax_dw = grid("dH-gmax gameable, i_dw", {"dH-gmax"}, dw);
    gmax_dw.mu_mode = top_only;
    gmax_dw.e_sizes = {1};
    gmax_dw.vars = 3;
    gmax_dw.expect_witness = true;
    gmax_dw.pinned = {pin("dH-gmax", dw, V3, {{"{111}"}}, {"{001}"}, "", {"{000}"},
                          "0", "1")};
    legs.push_back(gmax_dw);

    AuditLeg gmax_ds_safe = grid("dH-gmax i_ds safe: no constraint, two agents",
                                 {"dH-gmax"}, ds);
    gmax_ds_safe.mu_mode = top_only;
    gmax_ds_safe.e_sizes = {1};
    legs.push_back(gmax_ds_safe);

    AuditLeg gmax_ds_e3 = grid("dH-gmax i_ds gameable with three agents", {"dH-gmax"}, ds);
    gmax_ds_e3.mu_mode = top_only;
    gmax_ds_e3.e_sizes = {2};
    gmax_ds_e3.vars = 3;
    gmax_ds_e3.expect_witness = true;
    gmax_ds_e3.pinned = {pin("dH-gmax", ds, V3, {{"{000}"}, {"{011}"}}, {"{000}"}, "",
                             {"{100}"}, "0", "1")};
    legs.push_back(gmax_ds_e3);

    AuditLeg gmax_ds_mu = grid("dH-gmax i_ds gameable under a constraint", {"dH-gmax"}, ds);
    gmax_ds_mu.mu_mode = nontop_only;
    gmax_ds_mu.e_sizes = {1};
    gmax_ds_mu.expect_witness = true;
    gmax_ds_mu.pinned = {pin("dH-gmax", ds, V2, {{"{11}"}}, {"{01}"}, "!a | b",
                             {"{00}"}, "0", "1")};
    legs.push_back(gmax_ds_mu);

    auto subbase_grid = [&](std::string label, std::string op, IndexId idx) {
      AuditLeg leg = grid(std::move(label), {std::move(op)}, idx);
      leg.syntactic_profile = true;
      leg.syntactic_candidates = true;
      return leg;
    };

    AuditLeg c1_p = subbase_grid("c1 gameable, i_p", "c1", p);
    c1_p.mu_mode = top_only;
    c1_p.e_sizes = {1};
    c1_p.expect_witness = true;
    c1_p.pinned = {pin("c1", p, V2, {{"!a", "!b"}}, {"a", "b"}, "", {"a & b"},
                       "1/4", "1/2")};
    legs.push_back(c1_p);
    legs.push_back(subbase_grid("c1 safe, i_dw", "c1", dw));
    legs.push_back(subbase_grid("c1 safe, i_ds", "c1", ds));

    AuditLeg c3_p = subbase_grid("c3 gameable, i_p", "c3", p);
    c3_p.mu_mode = top_only;
    c3_p.e_sizes = {1};
    c3_p.expect_witness = true;
    c3_p.pinned = {pin("c3", p, V2, {{"!a", "!b"}}, {"a", "b"}, "", {"a & b"},
                       "1/4", "1/2")};
    legs.push_back(c3_p);

    AuditLeg c3_dw_safe = subbase_grid("c3 i_dw safe when unconstrained", "c3", dw);
    c3_dw_safe.mu_mode = top_only;
    legs.push_back(c3_dw_safe);

    AuditLeg c3_dw_mu = subbase_grid("c3 i_dw gameable under a constraint", "c3", dw);
    c3_dw_mu.mu_mode = nontop_only;
    c3_dw_mu.e_sizes = {1};
    c3_dw_mu.vars = 3;
    c3_dw_mu.expect_witness = true;
    c3_dw_mu.sweep_enabled = false;  // carried by a coarser split than the swept forms
    c3_dw_mu.pinned = {pin("c3", dw, V3, {{"!a & !b", "c"}}, {"a & b & c"}, "!b",
                           {"a", "b & !c"}, "0", "1")};
    legs.push_back(c3_dw_mu);

    AuditLeg c3_ds_safe = subbase_grid("c3 i_ds safe when unconstrained", "c3", ds);
    c3_ds_safe.mu_mode = top_only;
    legs.push_back(c3_ds_safe);

    AuditLeg c3_ds_mu = subbase_grid("c3 i_ds gameable under a constraint", "c3", ds);
    c3_ds_mu.mu_mode = nontop_only;
    c3_ds_mu.e_sizes = {1};
    c3_ds_mu.expect_witness = true;
    c3_ds_mu.pinned = {pin("c3", ds, V2, {{"!a", "b"}}, {"a", "!b"}, "!b", {"a & !b"},
                           "0", "1")};
    legs.push_back(c3_ds_mu);

    AuditLeg c4_p = subbase_grid("c4 gameable, i_p", "c4", p);
    c4_p.mu_mode = top_only;
    c4_p.e_sizes = {1};
    c4_p.expect_witness = true;
    legs.push_back(c4_p);
    AuditLeg c4_dw = subbase_grid("c4 gameable, i_dw", "c4", dw);
    c4_dw.mu_mode = top_only;
    c4_dw.e_sizes = {1};
    c4_dw.expect_witness = true;
    legs.push_back(c4_dw);
    AuditLeg c4_ds = subbase_grid("c4 gameable, i_ds", "c4", ds);
    c4_ds.mu_mode = top_only;
    c4_ds.e_sizes = {1};
    c4_ds.expect_witness = true;
    legs.push_back(c4_ds);

    AuditLeg c5_p = subbase_grid("c5 gameable, i_p", "c5", p);
    c5_p.mu_mode = top_only;
    c5_p.e_sizes = {1};
    c5_p.expect_witness = true;
    c5_p.pinned = {pin("c5", p, V2, {{"!a", "!b"}}, {"a", "b"}, "", {"a & b"},
                       "1/4", "1/2")};
    legs.push_back(c5_p);
    legs.push_back(subbase_grid("c5 safe, i_dw", "c5", dw));

    AuditLeg c5_ds_safe = subbase_grid("c5 i_ds safe when unconstrained", "c5", ds);
    c5_ds_safe.mu_mode = top_only;
    legs.push_back(c5_ds_safe);

    AuditLeg c5_ds_mu = subbase_grid("c5 i_ds gameable under a constraint", "c5", ds);
    c5_ds_mu.mu_mode = nontop_only;
    c5_ds_mu.e_sizes = {1};
    c5_ds_mu.expect_witness = true;
    c5_ds_mu.pinned = {pin("c5", ds, V2, {{"!a", "b"}}, {"a", "!b"}, "!b", {"a & !b"},
                           "0", "1")};
    legs.push_back(c5_ds_mu);

    legs.push_back(grid("conjunction-first ops, i_p", {"hc1", "hc3", "hc4", "hc5"}, p));
    legs.push_back(grid("conjunction-first ops, i_dw", {"hc1", "hc3", "hc4", "hc5"}, dw));
    legs.push_back(grid("conjunction-first ops, i_ds", {"hc1", "hc3", "hc4", "hc5"}, ds));

    reg.push_back(ClaimSpec{
        "T7.complete",
        "With every base and every strategy complete, the distance operators are safe "
        "for all three indexes except Hamming-leximax, the subbase operators stay "
        "gameable except where their unconstrained safety survives, and the "
        "conjunction-first operators are uniformly safe.",
        std::move(legs)});
  }

  reg.push_back(ClaimSpec{
      "T8.dalal",
      "All four distance operators can be gamed for the graded-distance index even "
      "when both bases are complete.",
      {
          AuditLeg{.label = "dD-sum gameable",
                   .ops = {"dD-sum"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("dD-sum", dalal, V3, {{"{110}"}}, {"{000}"},
                                  "a | b | c", {"{001}"}, "1/3", "2/3")}},
          AuditLeg{.label = "dD-gmax gameable",
                   .ops = {"dD-gmax"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("dD-gmax", dalal, V3, {{"{110}"}}, {"{000}"},
                                  "a | b | c", {"{001}"}, "1/3", "2/3")}},
          AuditLeg{.label = "dH-sum gameable",
                   .ops = {"dH-sum"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .vars = 3,
                   .expect_witness = true,
                   .pinned = {pin("dH-sum", dalal, V3, {{"{110}"}}, {"{000}"},
                                  "!((!a & !b & !c) | (!a & b & !c) | (a & !b & !c))",
                                  {"{001}"}, "1/3", "2/3")}},
          AuditLeg{.label = "dH-gmax gameable",
                   .ops = {"dH-gmax"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("dH-gmax", dalal, V4, {{"{0111}"}}, {"{0001}"},
                                  "!a & !b & !c & !d | !a & b & c | a & !b & !c | "
                                  "a & !b & c & !d | a & b & !c & !d | a & b & c & d",
                                  {"{1000}"}, "1/2", "3/4")}},
      }});

  reg.push_back(ClaimSpec{
      "T9.dalal",
      "Every conjunction-first subbase operator can be gamed for the graded-distance "
      "index even when both bases are complete.",
      {
          AuditLeg{.label = "hc1 gameable",
                   .ops = {"hc1"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("hc1", dalal, V2, {{"!a & !b"}}, {"a & b"},
                                  "!(a & b)", {"!a & b"}, "0", "1/2")}},
          AuditLeg{.label = "hc3 gameable",
                   .ops = {"hc3"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("hc3", dalal, V2, {{"!a & !b"}}, {"a & b"},
                                  "!(a & b)", {"!a & b"}, "0", "1/2")}},
          AuditLeg{.label = "hc4 gameable",
                   .ops = {"hc4"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("hc4", dalal, V2, {{"!a & !b"}}, {"a & b"},
                                  "!(a & b)", {"!a & b"}, "0", "1/2")}},
          AuditLeg{.label = "hc5 gameable",
                   .ops = {"hc5"},
                   .index = dalal,
                   .e_sizes = {1},
                   .k_mode = complete,
                   .profile_complete = true,
                   .expect_witness = true,
                   .pinned = {pin("hc5", dalal, V2, {{"!a & !b"}}, {"a & b"},
                                  "!(a & b)", {"!a & b"}, "0", "1/2")}},
      }});

  reg.push_back(ClaimSpec{
      "T10.dilation",
      "No distance operator can be gamed by weakening: reporting a strict superset "
      "of one's models never raises any core index.",
      {
          AuditLeg{.label = "model ops, i_p, weakening strategies",
                   .ops = {"dD-sum", "dD-max", "dD-gmax", "dH-sum", "dH-max", "dH-gmax"},
                   .index = p,
                   .space = SpaceKind::dilation},
          AuditLeg{.label = "model ops, i_dw, weakening strategies",
                   .ops = {"dD-sum", "dD-max", "dD-gmax", "dH-sum", "dH-max", "dH-gmax"},
                   .index = dw,
                   .space = SpaceKind::dilation},
          AuditLeg{.label = "model ops, i_ds, weakening strategies",
                   .ops = {"dD-sum", "dD-max", "dD-gmax", "dH-sum", "dH-max", "dH-gmax"},
                   .index = ds,
                   .space = SpaceKind::dilation},
      }});

  reg.push_back(ClaimSpec{
      "T11.erosion",
      "For sum merging and the drastic indexes, whenever any report at all can game "
      "the result, some strengthening (a subset of the true models) already can.",
      {
          AuditLeg{.label = "dD-sum, i_dw",
                   .kind = implication,
                   .ops = {"dD-sum"},
                   .index = dw,
                   .space_b = SpaceKind::erosion},
          AuditLeg{.label = "dD-sum, i_ds",
                   .kind = implication,
                   .ops = {"dD-sum"},
                   .index = ds,
                   .space_b = SpaceKind::erosion},
          AuditLeg{.label = "dH-sum, i_dw",
                   .kind = implication,
                   .ops = {"dH-sum"},
                   .index = dw,
                   .space_b = SpaceKind::erosion},
          AuditLeg{.label = "dH-sum, i_ds",
                   .kind = implication,
                   .ops = {"dH-sum"},
                   .index = ds,
                   .space_b = SpaceKind::erosion},
      }});

  reg.push_back(ClaimSpec{
      "T14.ocf",
      "The flat ranking-merge rules cannot be gamed for any of the three core "
      "indexes.",
      {
          AuditLeg{.label = "flat rules, i_p",
                   .ops = {"ocf-max", "ocf-min1", "ocf-min2", "ocf-sigma"},
                   .index = p,
                   .mu_mode = top_only},
          AuditLeg{.label = "flat rules, i_dw",
                   .ops = {"ocf-max", "ocf-min1", "ocf-min2", "ocf-sigma"},
                   .index = dw,
                   .mu_mode = top_only},
          AuditLeg{.label = "flat rules, i_ds",
                   .ops = {"ocf-max", "ocf-min1", "ocf-min2", "ocf-sigma"},
                   .index = ds,
                   .mu_mode = top_only},
      }});

  reg.push_back(ClaimSpec{
      "C12.complete",
      "For sum merging and the drastic indexes, a gaming report exists if and only "
      "if some complete strengthening of the true base is one.",
      {
          AuditLeg{.label = "dD-sum, i_dw",
                   .kind = equivalence,
                   .ops = {"dD-sum"},
                   .index = dw,
                   .space_b = SpaceKind::complete_in_k,
                   .sample_vars = 3,
                   .sample_count = 250,
                   .sample_seed = 0xC1201},
          AuditLeg{.label = "dD-sum, i_ds",
                   .kind = equivalence,
                   .ops = {"dD-sum"},
                   .index = ds,
                   .space_b = SpaceKind::complete_in_k,
                   .sample_vars = 3,
                   .sample_count = 250,
                   .sample_seed = 0xC1202},
          AuditLeg{.label = "dH-sum, i_dw",
                   .kind = equivalence,
                   .ops = {"dH-sum"},
                   .index = dw,
                   .space_b = SpaceKind::complete_in_k,
                   .sample_vars = 3,
                   .sample_count = 250,
                   .sample_seed = 0xC1203},
          AuditLeg{.label = "dH-sum, i_ds",
                   .kind = equivalence,
                   .ops = {"dH-sum"},
                   .index = ds,
                   .space_b = SpaceKind::complete_in_k,
                   .sample_vars = 3,
                   .sample_count = 250,
                   .sample_seed = 0xC1204},
      }});

  return reg;
}

#pragma GCC diagnostic pop

}  // namespace detail

inline const std::vector<ClaimSpec>& claim_registry() {
  static const std::vector<ClaimSpec> reg = detail::build_claim_registry();
  return reg;
}

inline const ClaimSpec& claim_by_id(const std::string& id) {
  for (const ClaimSpec& c : claim_registry())
    if (c.id == id) return c;
  throw domain_error("unknown claim: " + id);
}

// ---------------------------------------------------------------------------
// Operator-coincidence checks: exhaustive profile comparisons between
// operators that should (or should not) compute the same merged set.

struct EquivalenceCheck {
  std::string label;
  std::uint64_t instances = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> examples;
  bool ok() const { return mismatches == 0; }
};

namespace detail {

template <typename Fn>
inline void profiles_up_to(const Signature& sig, int max_agents, bool distinct_only,
                           Fn&& fn) {
  std::vector<ModelSet> sets = subsets_canonical(sig);
  std::vector<std::size_t> idx;
  for (int size = 1; size <= max_agents; ++size) {
    multisets_from(sets.size(), size, idx, 0, [&](const std::vector<std::size_t>& chosen) {
      if (distinct_only) {
        for (std::size_t i = 1; i < chosen.size(); ++i)
          if (chosen[i] == chosen[i - 1]) return true;
      }
      Profile e;
      for (std::size_t j = 0; j < chosen.size(); ++j)
        e.bases.push_back(canonical_base(sets[chosen[j]], sig,
                                         "K" + std::to_string(j + 1)));
      fn(e);
      return true;
    });
  }
}

inline std::string mismatch_line(const Profile& e, const Formula& mu, const Signature& sig,
                                 const std::string& left_name, const ModelSet& left,
                                 const std::string& right_name, const ModelSet& right) {
  std::string line = "e=(";
  for (std::size_t i = 0; i < e.bases.size(); ++i) {
    if (i) line += ", ";
    line += describe_base(e.bases[i], sig);
  }
  line += "), mu=" + render(mu, sig) + ": " + left_name + " " + left.render(sig) +
          " vs " + right_name + " " + right.render(sig);
  return line;
}

}  // namespace detail

// Compares the conjunction-first cardinality operator against both drastic
// aggregates over every profile of at most max_agents bases and every
// consistent constraint. The coincidence holds on duplicate-free profiles;
// repeated bases can break it, so the flag matters.
inline EquivalenceCheck check_hc4_matches_drastic(int vars, int max_agents,
                                                  bool distinct_only) {
  Signature sig = detail::audit_signature(vars);
  EquivalenceCheck out;
  out.label = std::string("hc4 against dD-sum and dD-gmax, ") +
              (distinct_only ? "duplicate-free profiles" : "all profiles");
  const OperatorHandle& hc4 = OperatorHandle::by_name("hc4");
  const OperatorHandle& dsum = OperatorHandle::by_name("dD-sum");
  const OperatorHandle& dgmax = OperatorHandle::by_name("dD-gmax");
  std::vector<Formula> mus = detail::mu_choices(sig, MuMode::all);

  detail::profiles_up_to(sig, max_agents, distinct_only, [&](const Profile& e) {
    for (const Formula& mu : mus) {
      ++out.instances;
      ModelSet a = hc4.merge(e, mu, sig);
      ModelSet b = dsum.merge(e, mu, sig);
      ModelSet c = dgmax.merge(e, mu, sig);
      if (!(a == b && b == c)) {
        ++out.mismatches;
        if (out.examples.size() < 3)
          out.examples.push_back(detail::mismatch_line(
              e, mu, sig, "hc4", a, a == b ? "dD-gmax" : "dD-sum", a == b ? c : b));
      }
    }
  });
  return out;
}

// The flat sum rule agrees with unconstrained drastic-sum merging.
inline EquivalenceCheck check_flat_sigma_matches_drastic_sum(int vars, int max_agents) {
  Signature sig = detail::audit_signature(vars);
  EquivalenceCheck out;
  out.label = "ocf-sigma against unconstrained dD-sum";
  const OperatorHandle& flat = OperatorHandle::by_name("ocf-sigma");
  const OperatorHandle& dsum = OperatorHandle::by_name("dD-sum");
  Formula top = f_true();

  detail::profiles_up_to(sig, max_agents, false, [&](const Profile& e) {
    ++out.instances;
    ModelSet a = flat.merge(e, top, sig);
    ModelSet b = dsum.merge(e, top, sig);
    if (!(a == b)) {
      ++out.mismatches;
      if (out.examples.size() < 3)
        out.examples.push_back(
            detail::mismatch_line(e, top, sig, "ocf-sigma", a, "dD-sum", b));
    }
  });
  return out;
}

// The flat max rule and the flat second min rule coincide.
inline EquivalenceCheck check_flat_max_matches_min2(int vars, int max_agents) {
  Signature sig = detail::audit_signature(vars);
  EquivalenceCheck out;
  out.label = "ocf-max against ocf-min2";
  const OperatorHandle& fmax = OperatorHandle::by_name("ocf-max");
  const OperatorHandle& fmin2 = OperatorHandle::by_name("ocf-min2");
  Formula top = f_true();

  detail::profiles_up_to(sig, max_agents, false, [&](const Profile& e) {
    ++out.instances;
    ModelSet a = fmax.merge(e, top, sig);
    ModelSet b = fmin2.merge(e, top, sig);
    if (!(a == b)) {
      ++out.mismatches;
      if (out.examples.size() < 3)
        out.examples.push_back(
            detail::mismatch_line(e, top, sig, "ocf-max", a, "ocf-min2", b));
    }
  });
  return out;
}

}  // namespace mergeforge
