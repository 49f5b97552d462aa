#pragma once

// Recursive-descent formula parser for the ASCII grammar:
//
//   formula := iff
//   iff     := imp ("<->" imp)*          left-associative
//   imp     := xor ("->" xor)*           right-associative
//   xor     := or  ("^" or)*             left-associative
//   or      := and ("|" and)*            left-associative
//   and     := unary ("&" unary)*        left-associative
//   unary   := "!" unary | atom
//   atom    := IDENT | "true" | "false" | "(" formula ")"

#include <cctype>
#include <string>

#include "mergeforge/core.hpp"
#include "mergeforge/formula.hpp"

namespace mergeforge {

namespace detail {

class FormulaParser {
 public:
  FormulaParser(const std::string& text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("formula syntax error at position " + std::to_string(pos_) + ": " +
                      what + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(const char* tok) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(tok);
    if (text_.compare(pos_, len, tok) != 0) return false;
    // "<->" must not be swallowed when looking for "<" etc.; tokens here are
    // all unambiguous as long as "<->" is tried before "->" never applies:
    // the call sites only probe the token their level owns.
    pos_ += len;
    return true;
  }

  bool peek(const char* tok) {
    skip_ws();
    return text_.compare(pos_, std::char_traits<char>::length(tok), tok) == 0;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (eat("<->")) f = f_binary(Kind::Iff, std::move(f), parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_xor();
    if (peek("->")) {
      eat("->");
      return f_binary(Kind::Implies, std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_xor() {
    Formula f = parse_or();
    while (peek("^")) {
      eat("^");
      f = f_binary(Kind::Xor, std::move(f), parse_or());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek("|")) {
      eat("|");
      f = f_binary(Kind::Or, std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek("&")) {
      eat("&");
      f = f_and(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '!') {
      ++pos_;
      return f_not(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an atom");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string ident = text_.substr(start, pos_ - start);
      if (ident == "true") return f_true();
      if (ident == "false") return f_false();
      int idx = sig_.index_of(ident);
      if (idx < 0) throw parse_error("unknown variable '" + ident + "'");
      return f_atom(idx);
    }
    fail("expected an atom");
  }

  const std::string& text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Formula parse_formula(const std::string& text, const Signature& sig) {
  return detail::FormulaParser(text, sig).parse();
}

} // namespace mergeforge
