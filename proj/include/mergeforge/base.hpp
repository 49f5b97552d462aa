#pragma once

// Belief/goal bases, profiles, and the line-oriented profile file format.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mergeforge/core.hpp"
#include "mergeforge/formula.hpp"
#include "mergeforge/parse.hpp"

namespace mergeforge {

// A finite consistent set of formulas. Set semantics under structural
// equality with insertion order preserved; the model set of the conjunction
// is cached at construction.
class Base {
 public:
  Base(std::string label, const std::vector<Formula>& fs, const Signature& sig)
      : label_(std::move(label)) {
    for (const Formula& f : fs) {
      bool dup = false;
      for (const Formula& g : formulas_)
        if (equal(f, g)) {
          dup = true;
          break;
        }
      if (!dup) formulas_.push_back(f);
    }
    if (formulas_.empty()) throw domain_error("base '" + label_ + "' is empty");
    models_ = ModelSet::all(sig);
    for (const Formula& f : formulas_) models_ &= mergeforge::models(f, sig);
    if (models_.empty())
      throw domain_error("base '" + label_ + "' is inconsistent");
  }

  const std::string& label() const { return label_; }
  const std::vector<Formula>& formulas() const { return formulas_; }
  const ModelSet& models() const { return models_; }
  bool complete() const { return models_.count() == 1; }

 private:
  std::string label_;
  std::vector<Formula> formulas_;
  ModelSet models_;
};

// Replaces a base by the singleton containing the left-folded conjunction of
// its formulas. Singletons are returned unchanged, so hatting is idempotent.
inline Base base_hat(const Base& k, const Signature& sig) {
  if (k.formulas().size() == 1) return k;
  Formula conj;
  for (const Formula& f : k.formulas())
    conj = conj ? f_and(std::move(conj), f) : f;
  return Base(k.label(), {conj}, sig);
}

// Non-empty multiset of bases. Order is stored for reporting but carries no
// meaning; anonymity is exercised by the property tests.
struct Profile {
  std::vector<Base> bases;

  std::size_t size() const { return bases.size(); }

  Profile with(const Base& extra) const {
    Profile p = *this;
    p.bases.push_back(extra);
    return p;
  }

  // Models of the conjunction of all bases.
  ModelSet conjunction_models(const Signature& sig) const {
    ModelSet m = ModelSet::all(sig);
    for (const Base& b : bases) m &= b.models();
    return m;
  }

  // Models of the disjunction of the bases' conjunctions.
  ModelSet disjunction_models(const Signature& sig) const {
    ModelSet m = ModelSet::none(sig);
    for (const Base& b : bases) m |= b.models();
    return m;
  }
};

// Parsed profile document: signature, constraint (defaults to true), bases in
// file order, and a name lookup.
struct ProfileDoc {
  Signature sig;
  Formula mu;
  bool mu_given = false;
  Profile profile;

  const Base* find(const std::string& name) const {
    for (const Base& b : profile.bases)
      if (b.label() == name) return &b;
    return nullptr;
  }
};

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

// Extracts the text between { and } on the line; both braces required.
inline std::string brace_body(const std::string& line, int lineno) {
  auto l = line.find('{');
  auto r = line.rfind('}');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw parse_error("line " + std::to_string(lineno) + ": expected { ... }");
  return line.substr(l + 1, r - l - 1);
}

} // namespace detail

// Profile file format (# starts a comment, anywhere on a line):
//   vars <name>+                                  exactly once, first
//   mu <formula>                                  at most once, default true
//   base <NAME> models { <bits>, <bits>, ... }
//   base <NAME> formulas { <formula>; <formula> }
inline ProfileDoc parse_profile(const std::string& doc, int var_cap = default_var_cap) {
  ProfileDoc out;
  out.mu = f_true();
  bool have_vars = false;
  std::vector<std::string> seen_names;

  std::istringstream in(doc);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = detail::strip(raw);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string word;
    ls >> word;

    if (word == "vars") {
      if (have_vars) throw parse_error("line " + std::to_string(lineno) + ": duplicate vars line");
      std::vector<std::string> names;
      std::string n;
      while (ls >> n) names.push_back(n);
      out.sig = Signature(names, var_cap);
      have_vars = true;
      continue;
    }

    if (!have_vars)
      throw parse_error("line " + std::to_string(lineno) + ": vars must come first");

    if (word == "mu") {
      if (out.mu_given) throw parse_error("line " + std::to_string(lineno) + ": duplicate mu line");
      std::string rest = detail::strip(line.substr(2));
      out.mu = parse_formula(rest, out.sig);
      if (models(out.mu, out.sig).empty())
        throw domain_error("constraint mu is inconsistent: " + rest);
      out.mu_given = true;
      continue;
    }

    if (word == "base") {
      std::string name, mode;
      ls >> name >> mode;
      if (name.empty() || (mode != "models" && mode != "formulas"))
        throw parse_error("line " + std::to_string(lineno) +
                          ": expected 'base NAME models|formulas { ... }'");
      for (const std::string& s : seen_names)
        if (s == name)
          throw parse_error("line " + std::to_string(lineno) + ": duplicate base name " + name);
      seen_names.push_back(name);

      std::string body = detail::brace_body(line, lineno);
      std::vector<Formula> fs;
      if (mode == "models") {
        if (detail::strip(body).empty())
          throw domain_error("base '" + name + "' has no models");
        ModelSet s(out.sig.size());
        for (const std::string& tok : detail::split_on(body, ',')) {
          if (tok.empty())
            throw parse_error("base '" + name + "' has an empty model list entry");
          s.insert(out.sig.parse_world(tok));
        }
        // Model-list bases get the canonical syntactic form: the ascending
        // disjunction of canonical terms.
        fs.push_back(canonical_dnf(s, out.sig));
      } else {
        for (const std::string& tok : detail::split_on(body, ';')) {
          if (tok.empty()) continue;
          fs.push_back(parse_formula(tok, out.sig));
        }
        if (fs.empty()) throw parse_error("line " + std::to_string(lineno) + ": empty formula list");
      }
      out.profile.bases.emplace_back(name, fs, out.sig);
      continue;
    }

    throw parse_error("line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
  }

  if (!have_vars) throw parse_error("profile document has no vars line");
  if (out.profile.bases.empty()) throw parse_error("profile document has no bases");
  return out;
}

} // namespace mergeforge
