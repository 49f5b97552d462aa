// Command-line workbench: merge profiles, score satisfaction, hunt for
// profitable misreports, audit the registered claims, and reproduce the
// frozen ranking tables.
//
// Exit codes: 0 success (and any --expect met), 1 honest mismatch (diffs,
// refuted audit, expectation unmet), 2 usage or vocabulary error, 3 broken
// input data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <mergeforge_embedded_data.hpp>

#include "mergeforge/mergeforge.hpp"

using namespace mergeforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProfileDoc load_profile(const std::string& path) {
  return parse_profile(read_file(path), env_var_cap());
}

json model_set_json(const ModelSet& s, const Signature& sig) {
  json out = json::array();
  for (World w : s.members()) out.push_back(sig.render(w));
  return out;
}

// Vocabulary lookups throw domain_error; surface those as usage errors so
// the caller can tell a typo from broken data.
template <typename Fn>
auto vocab(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const domain_error& ex) {
    throw UsageError(ex.what());
  }
}

// ---------------------------------------------------------------------------
// merge
// ---------------------------------------------------------------------------

struct MergeArgs {
  std::string profile;
  std::string op;
  bool table = false;
};

int run_merge(const MergeArgs& a, const std::string& format) {
  const OperatorHandle& op = vocab([&] () -> const OperatorHandle& {
    return OperatorHandle::by_name(a.op);
  });
  if (a.table && op.family() != OperatorFamily::model_based)
    throw UsageError("operator " + op.name() + " has no distance ranking table");
  ProfileDoc doc = load_profile(a.profile);
  const Signature& sig = doc.sig;

  ModelSet merged = op.merge(doc.profile, doc.mu, sig);

  if (format == "json") {
    json out;
    out["operator"] = op.name();
    out["mu"] = render(doc.mu, sig);
    out["merged"] = model_set_json(merged, sig);
    if (a.table) {
      MergeRanking rank = op.table(doc.profile, doc.mu, sig);
      json rows = json::array();
      for (const RankingRow& r : rank.rows) {
        json row;
        row["world"] = sig.render(r.w);
        row["dists"] = r.dists;
        row["agg"] = r.agg.str();
        row["sat_mu"] = r.sat_mu;
        rows.push_back(row);
      }
      out["table"] = rows;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::printf("operator %s\n", op.name().c_str());
  std::printf("mu %s\n", render(doc.mu, sig).c_str());
  if (a.table) {
    MergeRanking rank = op.table(doc.profile, doc.mu, sig);
    std::printf("world |");
    for (const Base& b : doc.profile.bases) std::printf(" %s", b.label().c_str());
    std::printf(" | agg | mu\n");
    for (const RankingRow& r : rank.rows) {
      std::printf("%s |", sig.render(r.w).c_str());
      for (unsigned d : r.dists) std::printf(" %u", d);
      std::printf(" | %s | %c\n", r.agg.str().c_str(), r.sat_mu ? 'y' : 'n');
    }
  }
  std::printf("merged %s\n", merged.render(sig).c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

struct IndexArgs {
  std::string profile;
  std::string op;
  std::string index = "all";
  std::string base;
};

int run_index(const IndexArgs& a, const std::string& format) {
  const OperatorHandle& op = vocab([&] () -> const OperatorHandle& {
    return OperatorHandle::by_name(a.op);
  });
  std::vector<IndexId> ids;
  if (a.index == "all") {
    ids = {IndexId::dw, IndexId::ds, IndexId::p, IndexId::dalal, IndexId::wip};
  } else {
    ids.push_back(vocab([&] { return index_by_name(a.index); }));
  }

  ProfileDoc doc = load_profile(a.profile);
  const Signature& sig = doc.sig;
  if (!a.base.empty() && doc.find(a.base) == nullptr)
    throw UsageError("profile has no base named " + a.base);

  ModelSet merged = op.merge(doc.profile, doc.mu, sig);

  json out;
  out["operator"] = op.name();
  out["merged"] = model_set_json(merged, sig);
  json values = json::object();
  if (format != "json") std::printf("merged %s\n", merged.render(sig).c_str());

  for (const Base& b : doc.profile.bases) {
    if (!a.base.empty() && b.label() != a.base) continue;
    json per = json::object();
    for (IndexId id : ids) {
      Rational v = index_value(id, b, merged, sig);
      per[index_name(id)] = v.str();
      if (format != "json") {
        std::printf("%s %s %s", b.label().c_str(), index_name(id), v.str().c_str());
        if (dalal_empty_convention(id, merged))
          std::printf("  (empty merge: value is the documented convention)");
        std::printf("\n");
      }
    }
    values[b.label()] = per;
  }
  if (format == "json") {
    out["indexes"] = values;
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// manipulate
// ---------------------------------------------------------------------------

struct ManipulateArgs {
  std::string profile;
  std::string agent;
  std::string op;
  std::string index;
  std::string space = "semantic";
  std::vector<std::string> candidates;
  std::string expect;
};

int run_manipulate(const ManipulateArgs& a, const std::string& format) {
  const OperatorHandle& op = vocab([&] () -> const OperatorHandle& {
    return OperatorHandle::by_name(a.op);
  });
  IndexId id = vocab([&] { return index_by_name(a.index); });
  SpaceKind kind = vocab([&] { return space_by_name(a.space); });

  ProfileDoc doc = load_profile(a.profile);
  const Signature& sig = doc.sig;

  const Base* k = doc.find(a.agent);
  if (!k) throw UsageError("profile has no base named " + a.agent);
  Profile rest;
  bool dropped = false;
  for (const Base& b : doc.profile.bases) {
    if (!dropped && b.label() == a.agent) {
      dropped = true;
      continue;
    }
    rest.bases.push_back(b);
  }

  StrategySpace space = StrategySpace::of(kind);
  if (kind == SpaceKind::explicit_list) {
    if (a.candidates.empty())
      throw UsageError("--space explicit needs at least one --candidate formula");
    std::vector<Base> bases;
    for (std::size_t i = 0; i < a.candidates.size(); ++i)
      bases.push_back(Base("C" + std::to_string(i + 1),
                           {parse_formula(a.candidates[i], sig)}, sig));
    space = StrategySpace::explicit_list(std::move(bases));
  } else if (!a.candidates.empty()) {
    throw UsageError("--candidate only applies to --space explicit");
  }

  auto w = find_manipulation(rest, *k, op, doc.mu, id, space, sig);

  if (format == "json") {
    json out;
    out["agent"] = a.agent;
    out["operator"] = op.name();
    out["index"] = index_name(id);
    out["space"] = space_name(kind);
    out["witness"] = w.has_value();
    if (w) {
      out["candidate"] = render(w->candidate.formulas().front(), sig);
      out["candidate_models"] = model_set_json(w->candidate.models(), sig);
      out["index_truthful"] = w->index_truthful.str();
      out["index_lying"] = w->index_lying.str();
      out["merged_truthful"] = model_set_json(w->merged_truthful, sig);
      out["merged_lying"] = model_set_json(w->merged_lying, sig);
    }
    std::cout << out.dump(2) << "\n";
  } else if (w) {
    std::printf("witness: %s can report %s\n", a.agent.c_str(),
                w->candidate.models().render(sig).c_str());
    std::printf("  i_%s %s -> %s\n", index_name(id), w->index_truthful.str().c_str(),
                w->index_lying.str().c_str());
    std::printf("  merged %s -> %s\n", w->merged_truthful.render(sig).c_str(),
                w->merged_lying.render(sig).c_str());
  } else {
    std::printf("no profitable misreport for %s in the %s space\n", a.agent.c_str(),
                space_name(kind));
  }

  if (a.expect == "witness") return w ? kExitOk : kExitMismatch;
  if (a.expect == "none") return w ? kExitMismatch : kExitOk;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

struct AuditArgs {
  std::string id;
  int vars = 0;
  int agents = 0;
  bool list = false;
};

void print_leg_text(const LegResult& leg) {
  std::printf("  leg: %s\n", leg.label.c_str());
  std::printf("    verdict: %s\n", leg.verdict.c_str());
  if (leg.sweep_ran)
    std::printf("    instances: %llu, counterexamples: %llu\n",
                static_cast<unsigned long long>(leg.instances),
                static_cast<unsigned long long>(leg.counterexamples));
  for (const SweepCounterexample& c : leg.examples) {
    std::string e;
    for (const std::string& b : c.e_rest) e += (e.empty() ? "" : ", ") + b;
    std::printf("    example: op=%s others=[%s] mu=%s K=%s report=%s (%s)\n",
                c.op.c_str(), e.c_str(), c.mu.c_str(), c.k.c_str(), c.candidate.c_str(),
                c.index_change.c_str());
  }
  if (leg.dedup_ran)
    std::printf("    duplicate-free rerun: %llu instances, %llu counterexamples\n",
                static_cast<unsigned long long>(leg.dedup_instances),
                static_cast<unsigned long long>(leg.dedup_counterexamples));
  if (leg.sampled_instances)
    std::printf("    sampled instances: %llu\n",
                static_cast<unsigned long long>(leg.sampled_instances));
  for (const PinnedOutcome& pin : leg.pins)
    std::printf("    pinned: %s -> %s (%s)\n", pin.note.c_str(), pin.ok ? "ok" : "FAILED",
                pin.detail.c_str());
}

json leg_json(const LegResult& leg) {
  json out;
  out["label"] = leg.label;
  out["verdict"] = leg.verdict;
  out["as_expected"] = leg.as_expected;
  out["instances"] = leg.instances;
  out["counterexamples"] = leg.counterexamples;
  if (leg.dedup_ran) {
    out["dedup_instances"] = leg.dedup_instances;
    out["dedup_counterexamples"] = leg.dedup_counterexamples;
  }
  if (leg.sampled_instances) out["sampled_instances"] = leg.sampled_instances;
  json exs = json::array();
  for (const SweepCounterexample& c : leg.examples) {
    json e;
    e["op"] = c.op;
    e["others"] = c.e_rest;
    e["mu"] = c.mu;
    e["base"] = c.k;
    e["report"] = c.candidate;
    e["index_change"] = c.index_change;
    exs.push_back(e);
  }
  out["examples"] = exs;
  json pins = json::array();
  for (const PinnedOutcome& pin : leg.pins) {
    json p;
    p["instance"] = pin.note;
    p["ok"] = pin.ok;
    p["detail"] = pin.detail;
    pins.push_back(p);
  }
  out["pinned"] = pins;
  return out;
}

int run_audit(const AuditArgs& a, const std::string& format) {
  if (a.list) {
    if (format == "json") {
      json out = json::array();
      for (const ClaimSpec& c : claim_registry()) {
        json e;
        e["id"] = c.id;
        e["statement"] = c.statement;
        e["legs"] = c.legs.size();
        out.push_back(e);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const ClaimSpec& c : claim_registry())
        std::printf("%-13s %s\n", c.id.c_str(), c.statement.c_str());
    }
    return kExitOk;
  }
  if (a.id.empty()) throw UsageError("audit needs a claim id (or --list)");

  const ClaimSpec& claim = vocab([&] () -> const ClaimSpec& { return claim_by_id(a.id); });
  AuditOptions opt;
  opt.vars_override = a.vars;
  opt.max_agents = a.agents;
  AuditReport rep = audit_claim(claim, opt);

  if (format == "json") {
    json out;
    out["id"] = rep.id;
    out["statement"] = rep.statement;
    out["as_expected"] = rep.as_expected;
    out["seconds"] = rep.seconds;
    json legs = json::array();
    for (const LegResult& leg : rep.legs) legs.push_back(leg_json(leg));
    out["legs"] = legs;
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%s: %s\n", rep.id.c_str(), rep.statement.c_str());
    for (const LegResult& leg : rep.legs) print_leg_text(leg);
    std::printf("%s (%.2fs)\n", rep.as_expected ? "as expected" : "NOT AS EXPECTED",
                rep.seconds);
  }
  return rep.as_expected ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

int run_reproduce(const std::string& which, const std::string& format) {
  std::vector<std::pair<std::string, GoldenTable>> tables;
  for (const auto& [key, text] : embedded::files()) {
    if (key.rfind("golden/", 0) != 0) continue;
    GoldenTable t = parse_golden_table(std::string(text));
    if (which == "all" || t.id == which) tables.emplace_back(key, std::move(t));
  }
  if (tables.empty()) throw UsageError("no embedded table with id " + which);

  int bad = 0;
  json out = json::array();
  for (const auto& kv : tables) {
    GoldenReport rep = check_golden_table(kv.second);
    if (!rep.ok()) ++bad;
    if (format == "json") {
      json e;
      e["table"] = rep.id;
      e["caption"] = rep.caption;
      e["cells"] = rep.cells;
      json diffs = json::array();
      for (const CellDiff& d : rep.diffs) {
        json dj;
        dj["where"] = d.where;
        dj["expected"] = d.expected;
        dj["actual"] = d.actual;
        diffs.push_back(dj);
      }
      e["diffs"] = diffs;
      out.push_back(e);
    } else {
      std::printf("table %s: %llu cells, %zu diffs%s\n", rep.id.c_str(),
                  static_cast<unsigned long long>(rep.cells), rep.diffs.size(),
                  rep.ok() ? "" : " MISMATCH");
      for (const CellDiff& d : rep.diffs)
        std::printf("  %s: expected %s, got %s\n", d.where.c_str(), d.expected.c_str(),
                    d.actual.c_str());
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return bad ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"propositional belief merging workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand name

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  MergeArgs merge_args;
  CLI::App* merge = app.add_subcommand("merge", "merge a profile");
  merge->add_option("--profile", merge_args.profile, "profile file")->required();
  merge->add_option("--operator", merge_args.op, "merging operator")->required();
  merge->add_flag("--table", merge_args.table, "print the distance ranking table");

  IndexArgs index_args;
  CLI::App* index = app.add_subcommand("index", "score satisfaction after a merge");
  index->add_option("--profile", index_args.profile, "profile file")->required();
  index->add_option("--operator", index_args.op, "merging operator")->required();
  index->add_option("--index", index_args.index, "index name or 'all'");
  index->add_option("--base", index_args.base, "only this base");

  ManipulateArgs man_args;
  CLI::App* man = app.add_subcommand("manipulate", "search for a profitable misreport");
  man->add_option("--profile", man_args.profile, "profile file")->required();
  man->add_option("--agent", man_args.agent, "which base misreports")->required();
  man->add_option("--operator", man_args.op, "merging operator")->required();
  man->add_option("--index", man_args.index, "satisfaction index")->required();
  man->add_option("--space", man_args.space, "strategy space");
  man->add_option("--candidate", man_args.candidates,
                  "candidate formula for --space explicit (repeatable)");
  man->add_option("--expect", man_args.expect, "require an outcome")
      ->check(CLI::IsMember({"witness", "none"}));

  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand("audit", "replay a registered claim");
  audit->add_option("id", audit_args.id, "claim id");
  audit->add_option("--vars", audit_args.vars, "override the sweep width");
  audit->add_option("--agents", audit_args.agents, "cap the profile size");
  audit->add_flag("--list", audit_args.list, "list the registered claims");

  std::string reproduce_id;
  CLI::App* repro = app.add_subcommand("reproduce", "recompute a frozen ranking table");
  repro->add_option("id", reproduce_id, "table id or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*merge) return run_merge(merge_args, format);
    if (*index) return run_index(index_args, format);
    if (*man) return run_manipulate(man_args, format);
    if (*audit) return run_audit(audit_args, format);
    if (*repro) return run_reproduce(reproduce_id, format);
  } catch (const UsageError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitData;
  }
  return kExitUsage;
}
