#include <catch2/catch_amalgamated.hpp>

#include "mergeforge/core.hpp"

using namespace mergeforge;

TEST_CASE("signatures render worlds with the first variable leftmost", "[core]") {
  Signature sig({"a", "b", "c"});
  REQUIRE(sig.size() == 3);
  REQUIRE(sig.world_count() == 8);
  REQUIRE(sig.render(0) == "000");
  REQUIRE(sig.render(4) == "100");  // a set, b and c clear
  REQUIRE(sig.render(1) == "001");
  REQUIRE(sig.render(7) == "111");

  SECTION("parse_world is render's inverse") {
    for (World w = 0; w < sig.world_count(); ++w)
      REQUIRE(sig.parse_world(sig.render(w)) == w);
  }

  SECTION("parse_world rejects junk") {
    REQUIRE_THROWS_AS(sig.parse_world("00"), parse_error);
    REQUIRE_THROWS_AS(sig.parse_world("0000"), parse_error);
    REQUIRE_THROWS_AS(sig.parse_world("0x0"), parse_error);
  }
}

TEST_CASE("signature construction validates its inputs", "[core]") {
  REQUIRE_THROWS_AS(Signature(std::vector<std::string>{}), domain_error);
  REQUIRE_THROWS_AS(Signature({"a", "a"}), domain_error);
  REQUIRE_THROWS_AS(Signature({"a", ""}), domain_error);
  REQUIRE_THROWS_AS(Signature({"a", "b", "c"}, 2), domain_error);
  REQUIRE_NOTHROW(Signature({"a", "b"}, 2));
}

TEST_CASE("model sets behave as subsets of the world space", "[core]") {
  Signature sig({"a", "b"});
  ModelSet s = ModelSet::of(sig, {0, 3});

  REQUIRE(s.count() == 2);
  REQUIRE(s.contains(0));
  REQUIRE_FALSE(s.contains(1));
  REQUIRE(s.render(sig) == "{00, 11}");
  REQUIRE(s.members() == std::vector<World>{0, 3});

  SECTION("complement, union, intersection, symmetric difference") {
    ModelSet c = s.complement();
    REQUIRE(c.render(sig) == "{01, 10}");
    REQUIRE((s | c) == ModelSet::all(sig));
    REQUIRE((s & c) == ModelSet::none(sig));
    REQUIRE((s ^ ModelSet::all(sig)) == c);
  }

  SECTION("subset and intersection predicates") {
    REQUIRE(ModelSet::of(sig, {0}).subset_of(s));
    REQUIRE_FALSE(s.subset_of(ModelSet::of(sig, {0})));
    REQUIRE(s.intersects(ModelSet::of(sig, {3, 2})));
    REQUIRE_FALSE(s.intersects(ModelSet::of(sig, {1, 2})));
    REQUIRE(ModelSet::none(sig).subset_of(s));
  }

  SECTION("mixing sets over different signatures is an error") {
    Signature other({"a", "b", "c"});
    REQUIRE_THROWS_AS(s & ModelSet::none(other), domain_error);
  }
}

TEST_CASE("canonical order on model sets is by sorted member lists", "[core]") {
  Signature sig({"a", "b"});
  auto s = [&](std::initializer_list<World> ws) { return ModelSet::of(sig, ws); };

  // Cardinality first, then member lists: all singletons precede all pairs.
  REQUIRE(canonical_less(s({0}), s({1})));
  REQUIRE(canonical_less(s({0}), s({0, 1})));
  REQUIRE(canonical_less(s({1}), s({0, 3})));
  REQUIRE(canonical_less(s({3}), s({0, 1})));
  REQUIRE_FALSE(canonical_less(s({1}), s({1})));

  SECTION("strict weak ordering on all subsets") {
    std::vector<ModelSet> all;
    for (World mask = 0; mask < 16; ++mask) {
      ModelSet m(sig.size());
      for (World w = 0; w < 4; ++w)
        if (mask & (1u << w)) m.insert(w);
      all.push_back(m);
    }
    std::sort(all.begin(), all.end(),
              [](const ModelSet& a, const ModelSet& b) { return canonical_less(a, b); });
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
      REQUIRE(canonical_less(all[i], all[i + 1]));
  }
}

TEST_CASE("rationals normalize and compare exactly", "[core]") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(0, 5) == Rational(0, 1));
  REQUIRE(Rational(-2, -4) == Rational(1, 2));
  REQUIRE(Rational(2, -4).str() == "-1/2");
  REQUIRE(Rational(3, 1).str() == "3");
  REQUIRE(Rational(4, 7) > Rational(1, 2));
  REQUIRE(Rational(1, 3) < Rational(2, 3));
  REQUIRE_THROWS_AS(Rational(1, 0), domain_error);

  SECTION("parse_rational accepts both spellings") {
    REQUIRE(parse_rational("4/7") == Rational(4, 7));
    REQUIRE(parse_rational("1") == Rational(1, 1));
    REQUIRE(parse_rational("0") == Rational(0, 1));
    REQUIRE_THROWS_AS(parse_rational("x/y"), parse_error);
  }

  SECTION("comparison survives values near the scale of the grid") {
    // Cross-multiplication happens in 128 bits, so large numerators stay exact.
    Rational big1(1'000'000'000'000'000'000, 999'999'999'999'999'999);
    Rational big2(999'999'999'999'999'999, 999'999'999'999'999'998);
    REQUIRE(big1 < big2);
  }
}

TEST_CASE("the variable cap can be raised explicitly", "[core]") {
  // The environment override (MERGE_FORGE_VAR_CAP) is applied by the CLI;
  // the library takes the cap as a plain argument.
  REQUIRE(default_var_cap == 16);
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) names.push_back("v" + std::to_string(i));
  REQUIRE_THROWS_AS(Signature(names), domain_error);
  REQUIRE_NOTHROW(Signature(names, 17));
}
