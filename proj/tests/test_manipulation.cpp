#include <catch2/catch_amalgamated.hpp>

#include "mergeforge/base.hpp"
#include "mergeforge/manipulation.hpp"

using namespace mergeforge;

namespace {

Base base_of(const Signature& sig, std::initializer_list<World> ws,
             const std::string& name = "K") {
  return Base(name, {canonical_dnf(ModelSet::of(sig, ws), sig)}, sig);
}

}  // namespace

TEST_CASE("strategy space vocabulary and enumeration", "[manipulation]") {
  Signature sig({"a", "b"});
  Base k = base_of(sig, {0, 3});

  for (SpaceKind kind : {SpaceKind::semantic_all, SpaceKind::erosion, SpaceKind::dilation,
                         SpaceKind::complete, SpaceKind::complete_in_k})
    REQUIRE(space_by_name(space_name(kind)) == kind);
  REQUIRE_THROWS_AS(space_by_name("everything"), domain_error);

  REQUIRE(enumerate_strategies(StrategySpace::of(SpaceKind::semantic_all), k, sig).size() == 15);
  REQUIRE(enumerate_strategies(StrategySpace::of(SpaceKind::erosion), k, sig).size() == 3);
  REQUIRE(enumerate_strategies(StrategySpace::of(SpaceKind::dilation), k, sig).size() == 4);
  REQUIRE(enumerate_strategies(StrategySpace::of(SpaceKind::complete), k, sig).size() == 4);
  REQUIRE(enumerate_strategies(StrategySpace::of(SpaceKind::complete_in_k), k, sig).size() == 2);

  SECTION("erosion candidates entail the agent, dilation candidates are entailed") {
    for (const Base& c : enumerate_strategies(StrategySpace::of(SpaceKind::erosion), k, sig))
      REQUIRE(c.models().subset_of(k.models()));
    for (const Base& c : enumerate_strategies(StrategySpace::of(SpaceKind::dilation), k, sig))
      REQUIRE(k.models().subset_of(c.models()));
  }

  SECTION("explicit lists pass through but reject inconsistency") {
    std::vector<Base> given{k};
    REQUIRE(enumerate_strategies(StrategySpace::explicit_list(given), k, sig).size() == 1);
  }

  SECTION("canonical order grows by cardinality, singletons first") {
    auto all = enumerate_strategies(StrategySpace::of(SpaceKind::semantic_all), k, sig);
    REQUIRE(all.front().models().render(sig) == "{00}");
    REQUIRE(all[3].models().render(sig) == "{11}");
    REQUIRE(all.back().models().render(sig) == "{00, 01, 10, 11}");
  }
}

TEST_CASE("syntactic presentations of a model set", "[manipulation]") {
  Signature sig({"a", "b"});

  SECTION("complete sets get a literal-split form") {
    auto fam = presentation_family(ModelSet::of(sig, {2}), sig);
    REQUIRE(fam.size() == 2);
    REQUIRE(fam[0].formulas().size() == 1);
    REQUIRE(fam[1].formulas().size() == 2);  // a and !b as separate members
    REQUIRE(fam[0].models() == fam[1].models());
  }

  SECTION("incomplete sets only have the canonical form unless padding is asked for") {
    auto fam = presentation_family(ModelSet::of(sig, {0, 1}), sig);
    REQUIRE(fam.size() == 1);
    auto padded = presentation_family(ModelSet::of(sig, {0, 1}), sig, true);
    REQUIRE(padded.size() == 2);
    REQUIRE(padded[1].formulas().size() == 2);
    REQUIRE(padded[1].models() == padded[0].models());
  }
}

TEST_CASE("a three-source merge is gameable through erosion but not dilation",
          "[manipulation]") {
  Signature sig({"l", "s", "m"});
  Base honest = base_of(sig, {0b000, 0b001, 0b111}, "K1");
  Profile rest;
  rest.bases.push_back(base_of(sig, {0b001, 0b110}, "K2"));
  rest.bases.push_back(base_of(sig, {0b000, 0b110}, "K3"));
  const OperatorHandle& op = OperatorHandle::by_name("dH-sum");

  SECTION("erosion finds the first witness in canonical order") {
    auto w = find_manipulation(rest, honest, op, f_true(), IndexId::ds,
                               StrategySpace::of(SpaceKind::erosion), sig);
    REQUIRE(w.has_value());
    REQUIRE(w->candidate.models().render(sig) == "{000}");
    REQUIRE(w->index_truthful == Rational(0, 1));
    REQUIRE(w->index_lying == Rational(1, 1));
    REQUIRE(w->merged_truthful.render(sig) == "{000, 001, 110}");
    REQUIRE(w->merged_lying.render(sig) == "{000}");
    REQUIRE(revalidate(*w, rest, honest, op, f_true(), IndexId::ds, sig));
  }

  SECTION("the published two-model misreport is also a witness") {
    std::vector<Base> only{base_of(sig, {0b000, 0b001}, "K'")};
    auto w = find_manipulation(rest, honest, op, f_true(), IndexId::ds,
                               StrategySpace::explicit_list(only), sig);
    REQUIRE(w.has_value());
    REQUIRE(w->merged_lying.render(sig) == "{000, 001}");
  }

  SECTION("no dilation move helps this agent") {
    auto w = find_manipulation(rest, honest, op, f_true(), IndexId::ds,
                               StrategySpace::of(SpaceKind::dilation), sig);
    REQUIRE_FALSE(w.has_value());
  }
}

TEST_CASE("witnesses always mean a strict index rise", "[manipulation]") {
  Signature sig({"a", "b"});
  const OperatorHandle& op = OperatorHandle::by_name("dH-sum");

  // Sweep every two-source instance; whenever a witness comes back, its
  // recorded values must revalidate and differ strictly.
  std::vector<ModelSet> sets;
  for (World mask = 1; mask < 16; ++mask) {
    ModelSet s(sig.size());
    for (World w = 0; w < 4; ++w)
      if (mask & (1u << w)) s.insert(w);
    sets.push_back(s);
  }

  int found = 0;
  for (const ModelSet& other : sets)
    for (const ModelSet& mine : sets) {
      Profile rest;
      rest.bases.push_back(canonical_base(other, sig, "K2"));
      Base k = canonical_base(mine, sig, "K1");
      for (IndexId id : {IndexId::dw, IndexId::ds, IndexId::p}) {
        auto w = find_manipulation(rest, k, op, f_true(), id,
                                   StrategySpace::of(SpaceKind::semantic_all), sig);
        if (!w) continue;
        ++found;
        REQUIRE(w->index_lying > w->index_truthful);
        REQUIRE(revalidate(*w, rest, k, op, f_true(), id, sig));
      }
    }
  REQUIRE(found > 0);  // the sweep is not vacuous
}
