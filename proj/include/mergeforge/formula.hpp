#pragma once

// Formula AST with structural identity. No normalization ever happens here:
// the formula-based merging operators are deliberately sensitive to syntax,
// so {!a, !a & true} must stay a two-element set.

#include <memory>
#include <string>

#include "mergeforge/core.hpp"

namespace mergeforge {

enum class Kind { True, False, Atom, Not, And, Or, Xor, Implies, Iff };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  int atom = -1;  // index into the governing signature, Atom nodes only
  Formula lhs, rhs;
};

inline Formula f_true() {
  static const Formula t = std::make_shared<Node>(Node{Kind::True, -1, nullptr, nullptr});
  return t;
}
inline Formula f_false() {
  static const Formula f = std::make_shared<Node>(Node{Kind::False, -1, nullptr, nullptr});
  return f;
}
inline Formula f_atom(int index) {
  return std::make_shared<Node>(Node{Kind::Atom, index, nullptr, nullptr});
}
inline Formula f_not(Formula a) {
  return std::make_shared<Node>(Node{Kind::Not, -1, std::move(a), nullptr});
}
inline Formula f_binary(Kind k, Formula a, Formula b) {
  return std::make_shared<Node>(Node{k, -1, std::move(a), std::move(b)});
}
inline Formula f_and(Formula a, Formula b) { return f_binary(Kind::And, std::move(a), std::move(b)); }
inline Formula f_or(Formula a, Formula b) { return f_binary(Kind::Or, std::move(a), std::move(b)); }

inline bool is_true_const(const Formula& f) { return f->kind == Kind::True; }

inline bool equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return a->atom == b->atom;
    case Kind::Not:
      return equal(a->lhs, b->lhs);
    default:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

inline std::size_t hash_value(const Formula& f) {
  auto mix = [](std::size_t h, std::size_t v) {
    return h * 1000003u ^ (v + 0x9e3779b9u + (h << 6) + (h >> 2));
  };
  std::size_t h = static_cast<std::size_t>(f->kind) + 1;
  switch (f->kind) {
    case Kind::Atom:
      return mix(h, static_cast<std::size_t>(f->atom));
    case Kind::Not:
      return mix(h, hash_value(f->lhs));
    case Kind::True:
    case Kind::False:
      return h;
    default:
      return mix(mix(h, hash_value(f->lhs)), hash_value(f->rhs));
  }
}

namespace detail {

// Precedence levels, loosest first. <-> 1, -> 2, ^ 3, | 4, & 5, ! 6, atoms 7.
inline int precedence(Kind k) {
  switch (k) {
    case Kind::Iff: return 1;
    case Kind::Implies: return 2;
    case Kind::Xor: return 3;
    case Kind::Or: return 4;
    case Kind::And: return 5;
    case Kind::Not: return 6;
    default: return 7;
  }
}

inline const char* connective(Kind k) {
  switch (k) {
    case Kind::Iff: return " <-> ";
    case Kind::Implies: return " -> ";
    case Kind::Xor: return " ^ ";
    case Kind::Or: return " | ";
    case Kind::And: return " & ";
    default: return "";
  }
}

inline void render_into(const Formula& f, const Signature& sig, int ctx, std::string& out) {
  int p = precedence(f->kind);
  switch (f->kind) {
    case Kind::True: out += "true"; return;
    case Kind::False: out += "false"; return;
    case Kind::Atom: out += sig.name(f->atom); return;
    case Kind::Not:
      out += '!';
      render_into(f->lhs, sig, p, out);
      return;
    default: {
      bool parens = p < ctx;
      if (parens) out += '(';
      // -> is right-associative, the other binaries left-associative.
      int lctx = f->kind == Kind::Implies ? p + 1 : p;
      int rctx = f->kind == Kind::Implies ? p : p + 1;
      render_into(f->lhs, sig, lctx, out);
      out += connective(f->kind);
      render_into(f->rhs, sig, rctx, out);
      if (parens) out += ')';
      return;
    }
  }
}

} // namespace detail

// Minimal-parenthesis rendering; parsing the result yields a structurally
// identical AST.
inline std::string render(const Formula& f, const Signature& sig) {
  std::string out;
  detail::render_into(f, sig, 0, out);
  return out;
}

inline ModelSet models(const Formula& f, const Signature& sig) {
  switch (f->kind) {
    case Kind::True:
      return ModelSet::all(sig);
    case Kind::False:
      return ModelSet::none(sig);
    case Kind::Atom: {
      ModelSet m(sig.size());
      for (World w = 0; w < sig.world_count(); ++w)
        if (sig.bit(w, f->atom)) m.insert(w);
      return m;
    }
    case Kind::Not:
      return models(f->lhs, sig).complement();
    case Kind::And:
      return models(f->lhs, sig) & models(f->rhs, sig);
    case Kind::Or:
      return models(f->lhs, sig) | models(f->rhs, sig);
    case Kind::Xor:
      return models(f->lhs, sig) ^ models(f->rhs, sig);
    case Kind::Implies:
      return models(f->lhs, sig).complement() | models(f->rhs, sig);
    case Kind::Iff:
      return (models(f->lhs, sig) ^ models(f->rhs, sig)).complement();
  }
  throw domain_error("unreachable formula kind");
}

inline bool entails(const Formula& f, const Formula& g, const Signature& sig) {
  return models(f, sig).subset_of(models(g, sig));
}

// Canonical term of a world: the conjunction of literals in declared variable
// order, left-folded, e.g. (!a & b) & c.
inline Formula canonical_term(World w, const Signature& sig) {
  Formula acc;
  for (int i = 0; i < sig.size(); ++i) {
    Formula lit = sig.bit(w, i) ? f_atom(i) : f_not(f_atom(i));
    acc = acc ? f_and(std::move(acc), std::move(lit)) : std::move(lit);
  }
  return acc;
}

// Canonical DNF of a model set: the disjunction of canonical terms ascending,
// left-folded. The empty set renders as the constant false.
inline Formula canonical_dnf(const ModelSet& s, const Signature& sig) {
  Formula acc;
  for (World w : s.members()) {
    Formula t = canonical_term(w, sig);
    acc = acc ? f_or(std::move(acc), std::move(t)) : std::move(t);
  }
  return acc ? acc : f_false();
}

} // namespace mergeforge
