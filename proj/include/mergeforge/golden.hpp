#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "base.hpp"
#include "core.hpp"
#include "formula.hpp"
#include "model_merge.hpp"
#include "operators.hpp"
#include "parse.hpp"
#include "satisfaction.hpp"

namespace mergeforge {

// Golden tables are frozen distance-ranking tables: a profile, an optional
// constraint, an optional swapped-in replacement for one base, per-world
// distance and aggregate cells, the merged set(s), and optional satisfaction
// index values. The checker recomputes every cell and reports differences.
//
// File grammar, one directive per line ('#' starts a comment):
//   table <id>
//   caption <free text>
//   operator <name>
//   vars <v1> <v2> ...
//   mu <formula>                          (absent means no constraint)
//   base <NAME> models {w, w, ...}        (column order = file order)
//   swap <NAME> models {w, w, ...}        (at most one)
//   row <bits> | <d1> <d2> ... | <agg>  [| <agg_swapped>]
//   merged {w, ...}
//   merged_swap {w, ...}
//   index <index> <NAME> merged|merged_swap <rational>
//
// The distance columns follow the declared base order; a swapped base
// contributes two adjacent columns, the reported one first and the
// replacement right after it. Vector aggregates print as "(3,1)".

struct GoldenRow {
  std::string bits;
  std::vector<std::string> dists;
  std::string agg_truthful;
  std::string agg_swapped;  // empty when the table has no swap column
};

struct GoldenIndexLine {
  std::string index;
  std::string base;
  std::string which;  // "merged" or "merged_swap"
  std::string value;
};

struct GoldenTable {
  std::string id;
  std::string caption;
  std::string op;
  std::vector<std::string> vars;
  std::string mu;
  std::vector<std::string> base_names;
  std::vector<std::string> base_models;
  std::string swap_name;
  std::string swap_models;
  std::vector<GoldenRow> rows;
  std::string merged;
  std::string merged_swap;
  std::vector<GoldenIndexLine> indexes;
};

struct CellDiff {
  std::string where;
  std::string expected;
  std::string actual;
};

struct GoldenReport {
  std::string id;
  std::string caption;
  std::uint64_t cells = 0;
  std::vector<CellDiff> diffs;
  bool ok() const { return diffs.empty(); }
};

inline GoldenTable parse_golden_table(const std::string& text) {
  GoldenTable t;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos
                                                               : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string line = detail::strip(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : detail::strip(line.substr(sp + 1));

    if (key == "table") {
      t.id = rest;
    } else if (key == "caption") {
      t.caption = rest;
    } else if (key == "operator") {
      t.op = rest;
    } else if (key == "vars") {
      t.vars.clear();
      for (const std::string& v : detail::split_on(rest, ' '))
        if (!v.empty()) t.vars.push_back(v);
    } else if (key == "mu") {
      t.mu = rest;
    } else if (key == "base" || key == "swap") {
      std::size_t sp2 = rest.find(' ');
      if (sp2 == std::string::npos)
        throw parse_error("line " + std::to_string(lineno) + ": expected '" + key +
                          " NAME models {...}'");
      std::string name = rest.substr(0, sp2);
      std::string body = detail::brace_body(rest, lineno);
      if (key == "base") {
        t.base_names.push_back(name);
        t.base_models.push_back(body);
      } else {
        if (!t.swap_name.empty())
          throw parse_error("line " + std::to_string(lineno) + ": second swap");
        t.swap_name = name;
        t.swap_models = body;
      }
    } else if (key == "row") {
      std::vector<std::string> parts = detail::split_on(rest, '|');
      if (parts.size() < 3 || parts.size() > 4)
        throw parse_error("line " + std::to_string(lineno) +
                          ": row needs 'bits | dists | agg' with an optional "
                          "second agg");
      GoldenRow row;
      row.bits = parts[0];
      for (const std::string& d : detail::split_on(parts[1], ' '))
        if (!d.empty()) row.dists.push_back(d);
      row.agg_truthful = parts[2];
      if (parts.size() == 4) row.agg_swapped = parts[3];
      t.rows.push_back(std::move(row));
    } else if (key == "merged") {
      t.merged = detail::brace_body(line, lineno);
    } else if (key == "merged_swap") {
      t.merged_swap = detail::brace_body(line, lineno);
    } else if (key == "index") {
      std::vector<std::string> parts = detail::split_on(rest, ' ');
      parts.erase(std::remove(parts.begin(), parts.end(), std::string()), parts.end());
      if (parts.size() != 4)
        throw parse_error("line " + std::to_string(lineno) +
                          ": expected 'index <index> <base> <which> <value>'");
      t.indexes.push_back(GoldenIndexLine{parts[0], parts[1], parts[2], parts[3]});
    } else {
      throw parse_error("line " + std::to_string(lineno) + ": unknown directive '" +
                        key + "'");
    }
  }
  if (t.id.empty()) throw parse_error("golden table lacks a 'table' line");
  if (t.op.empty()) throw parse_error("golden table " + t.id + " lacks an operator");
  if (t.vars.empty()) throw parse_error("golden table " + t.id + " lacks vars");
  if (t.base_names.empty()) throw parse_error("golden table " + t.id + " lacks bases");
  return t;
}

namespace detail {

inline ModelSet golden_models(const std::string& body, const Signature& sig) {
  ModelSet out = ModelSet::none(sig);
  for (const std::string& tok : split_on(body, ','))
    if (!tok.empty()) out.insert(sig.parse_world(tok));
  if (out.empty()) throw domain_error("empty model list in golden table");
  return out;
}

}  // namespace detail

inline GoldenReport check_golden_table(const GoldenTable& t) {
  GoldenReport report;
  report.id = t.id;
  report.caption = t.caption;

  Signature sig(t.vars);
  const OperatorHandle& op = OperatorHandle::by_name(t.op);
  Formula mu = t.mu.empty() ? f_true() : parse_formula(t.mu, sig);

  int swap_at = -1;
  Profile truthful;
  for (std::size_t i = 0; i < t.base_names.size(); ++i) {
    truthful.bases.push_back(Base(
        t.base_names[i],
        {canonical_dnf(detail::golden_models(t.base_models[i], sig), sig)}, sig));
    if (t.base_names[i] == t.swap_name) swap_at = static_cast<int>(i);
  }
  if (!t.swap_name.empty() && swap_at < 0)
    throw parse_error("golden table " + t.id + ": swap names unknown base '" +
                      t.swap_name + "'");

  Profile swapped = truthful;
  if (swap_at >= 0)
    swapped.bases[swap_at] =
        Base(t.swap_name + "'",
             {canonical_dnf(detail::golden_models(t.swap_models, sig), sig)}, sig);

  MergeRanking rank_t = op.table(truthful, mu, sig);
  MergeRanking rank_s = swap_at >= 0 ? op.table(swapped, mu, sig) : MergeRanking{};

  auto diff = [&](std::string where, std::string expected, std::string actual) {
    ++report.cells;
    if (expected != actual)
      report.diffs.push_back(
          CellDiff{std::move(where), std::move(expected), std::move(actual)});
  };

  // Distance and aggregate cells, one table row per interpretation.
  std::size_t ncols = t.base_names.size() + (swap_at >= 0 ? 1 : 0);
  if (t.rows.size() != sig.world_count())
    report.diffs.push_back(CellDiff{"row count",
                                    std::to_string(sig.world_count()),
                                    std::to_string(t.rows.size())});
  for (const GoldenRow& row : t.rows) {
    World w = sig.parse_world(row.bits);
    const RankingRow& rt = rank_t.rows.at(w);
    if (row.dists.size() != ncols) {
      report.diffs.push_back(CellDiff{"row " + row.bits + " column count",
                                      std::to_string(ncols),
                                      std::to_string(row.dists.size())});
      continue;
    }
    std::size_t col = 0;
    for (std::size_t i = 0; i < t.base_names.size(); ++i) {
      diff("row " + row.bits + " d(" + t.base_names[i] + ")",
           row.dists[col++], std::to_string(rt.dists[i]));
      if (static_cast<int>(i) == swap_at)
        diff("row " + row.bits + " d(" + t.swap_name + "')",
             row.dists[col++], std::to_string(rank_s.rows.at(w).dists[i]));
    }
    diff("row " + row.bits + " agg", row.agg_truthful, rt.agg.str());
    if (swap_at >= 0 && !row.agg_swapped.empty())
      diff("row " + row.bits + " agg'", row.agg_swapped, rank_s.rows.at(w).agg.str());
  }

  // Merged sets.
  ModelSet merged_t = merged_from_ranking(rank_t, sig);
  if (!t.merged.empty())
    diff("merged", detail::golden_models(t.merged, sig).render(sig),
         merged_t.render(sig));
  ModelSet merged_s = ModelSet::none(sig);
  if (swap_at >= 0) {
    merged_s = merged_from_ranking(rank_s, sig);
    if (!t.merged_swap.empty())
      diff("merged_swap", detail::golden_models(t.merged_swap, sig).render(sig),
           merged_s.render(sig));
  }

  // Satisfaction index lines, always evaluated against the reported base.
  for (const GoldenIndexLine& ix : t.indexes) {
    const Base* k = nullptr;
    for (const Base& b : truthful.bases)
      if (b.label() == ix.base) k = &b;
    if (!k) {
      report.diffs.push_back(
          CellDiff{"index base " + ix.base, "a declared base", "missing"});
      continue;
    }
    const ModelSet& merged = ix.which == "merged_swap" ? merged_s : merged_t;
    Rational got = index_value(index_by_name(ix.index), *k, merged, sig);
    diff("index " + ix.index + " " + ix.base + " " + ix.which,
         parse_rational(ix.value).str(), got.str());
  }

  return report;
}

inline GoldenReport reproduce_table(const std::string& text) {
  return check_golden_table(parse_golden_table(text));
}

}  // namespace mergeforge
