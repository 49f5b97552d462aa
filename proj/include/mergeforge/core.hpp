#pragma once

// Shared substrate: propositional signatures, interpretations rendered as bit
// strings, sets of interpretations, and exact rational arithmetic.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mergeforge {

// Input text violates a documented format (formula grammar, profile file,
// golden table file).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A semantic precondition is violated: inconsistent base or constraint,
// unknown name, mismatched shapes, exceeded caps.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int default_var_cap = 16;

// Reads MERGE_FORGE_VAR_CAP if set, else returns the default cap of 16.
inline int env_var_cap() {
  if (const char* s = std::getenv("MERGE_FORGE_VAR_CAP")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 30) return static_cast<int>(v);
    throw domain_error("MERGE_FORGE_VAR_CAP must be an integer in [1, 30]");
  }
  return default_var_cap;
}

// Interpretations are indices 0..2^n-1. Bit strings read left to right in
// declared variable order, so the first declared variable is the most
// significant bit of the index.
using World = std::uint32_t;

class Signature {
 public:
  Signature() = default;

  explicit Signature(std::vector<std::string> names, int cap = default_var_cap)
      : names_(std::move(names)) {
    if (names_.empty()) throw domain_error("signature needs at least one variable");
    if (static_cast<int>(names_.size()) > cap)
      throw domain_error("signature exceeds the variable cap of " + std::to_string(cap));
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw domain_error("empty variable name");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw domain_error("duplicate variable name: " + names_[i]);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  std::uint32_t world_count() const { return std::uint32_t{1} << size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }

  int index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }

  // Truth value of the var-th declared variable in world w.
  bool bit(World w, int var) const { return (w >> (size() - 1 - var)) & 1; }

  std::string render(World w) const {
    std::string s(size(), '0');
    for (int i = 0; i < size(); ++i)
      if (bit(w, i)) s[i] = '1';
    return s;
  }

  World parse_world(const std::string& bits) const {
    if (static_cast<int>(bits.size()) != size())
      throw parse_error("bit string '" + bits + "' has length " +
                        std::to_string(bits.size()) + ", expected " + std::to_string(size()));
    World w = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw parse_error("bad character in bit string: " + bits);
      w = (w << 1) | static_cast<World>(c == '1');
    }
    return w;
  }

  bool operator==(const Signature& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// A set of interpretations over a fixed signature width, stored as a bitset.
// Canonical iteration order is ascending world index.
class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(int nvars)
      : nvars_(nvars), words_((std::size_t{1} << nvars) / 64 + 1, 0) {}

  static ModelSet none(const Signature& sig) { return ModelSet(sig.size()); }

  static ModelSet all(const Signature& sig) {
    ModelSet m(sig.size());
    for (World w = 0; w < sig.world_count(); ++w) m.insert(w);
    return m;
  }

  static ModelSet of(const Signature& sig, std::initializer_list<World> ws) {
    ModelSet m(sig.size());
    for (World w : ws) m.insert(w);
    return m;
  }

  int nvars() const { return nvars_; }
  std::uint32_t world_count() const { return std::uint32_t{1} << nvars_; }

  void insert(World w) { words_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  bool contains(World w) const { return (words_[w >> 6] >> (w & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto v : words_) c += static_cast<std::size_t>(__builtin_popcountll(v));
    return c;
  }

  bool empty() const {
    for (auto v : words_)
      if (v) return false;
    return true;
  }

  ModelSet& operator&=(const ModelSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ModelSet& operator|=(const ModelSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ModelSet& operator^=(const ModelSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator^(ModelSet a, const ModelSet& b) { return a ^= b; }

  ModelSet complement() const {
    ModelSet r(nvars_);
    for (World w = 0; w < world_count(); ++w)
      if (!contains(w)) r.insert(w);
    return r;
  }

  bool subset_of(const ModelSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ModelSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<World> members() const {
    std::vector<World> out;
    for (World w = 0; w < world_count(); ++w)
      if (contains(w)) out.push_back(w);
    return out;
  }

  std::string render(const Signature& sig) const {
    std::string s = "{";
    bool first = true;
    for (World w : members()) {
      if (!first) s += ", ";
      s += sig.render(w);
      first = false;
    }
    return s + "}";
  }

  bool operator==(const ModelSet& o) const {
    return nvars_ == o.nvars_ && words_ == o.words_;
  }
  bool operator!=(const ModelSet& o) const { return !(*this == o); }

 private:
  void check_same(const ModelSet& o) const {
    if (nvars_ != o.nvars_) throw domain_error("model sets over different signatures");
  }

  int nvars_ = 0;
  std::vector<std::uint64_t> words_;
};

// Orders model sets by cardinality, then by member list; the canonical
// enumeration order for strategy spaces and sweep candidates.
inline bool canonical_less(const ModelSet& a, const ModelSet& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.members() < b.members();
}

// Exact rational in [0,1] territory (satisfaction indexes). Always reduced,
// denominator positive. Comparisons cross-multiply in 128-bit.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  int compare(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
  }

  bool operator==(const Rational& o) const { return compare(o) == 0; }
  bool operator!=(const Rational& o) const { return compare(o) != 0; }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  std::int64_t num_, den_;
};

// Parses "a/b" or a bare integer, as printed by Rational::str().
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw parse_error("bad rational: " + s);
  }
}

} // namespace mergeforge
