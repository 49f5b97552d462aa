#include <catch2/catch_amalgamated.hpp>

#include "mergeforge/base.hpp"
#include "mergeforge/ocf.hpp"
#include "mergeforge/operators.hpp"

using namespace mergeforge;

namespace {

Base base_of(const Signature& sig, std::initializer_list<World> ws) {
  return Base("K", {canonical_dnf(ModelSet::of(sig, ws), sig)}, sig);
}

}  // namespace

TEST_CASE("two-strata embedding of a base", "[ocf]") {
  Signature sig({"a", "b"});
  OCF o = ocf_from_base(base_of(sig, {0, 3}), sig);
  REQUIRE(o.rank == std::vector<unsigned>{0, 1, 1, 0});
  REQUIRE(o.two_strata());
  REQUIRE(o.min_rank() == 0);
  REQUIRE(bel(o, sig).render(sig) == "{00, 11}");
  REQUIRE_THROWS_AS(ocf_from_models(ModelSet::none(sig), sig), domain_error);
}

TEST_CASE("pointwise merge rules on hand-built rankings", "[ocf]") {
  OCF k1{{0, 1, 2, 1}};
  OCF k2{{2, 1, 0, 1}};

  REQUIRE(merge_ocf({k1, k2}, OcfRule::max).rank == std::vector<unsigned>{2, 1, 2, 1});
  REQUIRE(merge_ocf({k1, k2}, OcfRule::sigma).rank == std::vector<unsigned>{2, 2, 2, 2});
  // min1 doubles the floor and adds one on disagreement; min2 adds one.
  REQUIRE(merge_ocf({k1, k2}, OcfRule::min1).rank == std::vector<unsigned>{1, 2, 1, 2});
  REQUIRE(merge_ocf({k1, k2}, OcfRule::min2).rank == std::vector<unsigned>{1, 1, 1, 1});

  SECTION("rankings must share a world space") {
    OCF bad{{0, 1}};
    REQUIRE_THROWS_AS(merge_ocf({k1, bad}, OcfRule::max), domain_error);
    REQUIRE_THROWS_AS(merge_ocf({}, OcfRule::max), domain_error);
  }
}

TEST_CASE("flat merging of propositional bases", "[ocf]") {
  Signature sig({"a", "b"});
  Profile e;
  e.bases.push_back(Base("K1", {parse_formula("a", sig)}, sig));
  e.bases.push_back(Base("K2", {parse_formula("!a | b", sig)}, sig));

  // Intersection non-empty: every rule lands on it.
  for (OcfRule r : {OcfRule::max, OcfRule::min1, OcfRule::min2, OcfRule::sigma})
    REQUIRE(flat_merge(e, r, sig).render(sig) == "{11}");

  SECTION("with disjoint sources the rules split into two camps") {
    Profile d;
    d.bases.push_back(Base("K1", {parse_formula("a & b", sig)}, sig));
    d.bases.push_back(Base("K2", {parse_formula("!a & !b", sig)}, sig));
    // Sum and the doubling min rule keep the sources' own models; max and
    // the plain min rule flatten everything into one stratum.
    REQUIRE(flat_merge(d, OcfRule::sigma, sig).render(sig) == "{00, 11}");
    REQUIRE(flat_merge(d, OcfRule::min1, sig).render(sig) == "{00, 11}");
    REQUIRE(flat_merge(d, OcfRule::max, sig) == ModelSet::all(sig));
    REQUIRE(flat_merge(d, OcfRule::min2, sig) == ModelSet::all(sig));
  }
}

TEST_CASE("flat operators refuse integrity constraints", "[ocf]") {
  Signature sig({"a", "b"});
  Profile e;
  e.bases.push_back(Base("K1", {parse_formula("a", sig)}, sig));

  for (const char* name : {"ocf-max", "ocf-min1", "ocf-min2", "ocf-sigma"}) {
    const OperatorHandle& op = OperatorHandle::by_name(name);
    REQUIRE_FALSE(op.accepts_constraint());
    REQUIRE_NOTHROW(op.merge(e, f_true(), sig));
    REQUIRE_THROWS_AS(op.merge(e, parse_formula("b", sig), sig), domain_error);
  }
}

TEST_CASE("rank gap counts the symmetric difference", "[ocf]") {
  Signature sig({"a", "b"});
  ModelSet k = ModelSet::of(sig, {0, 1});
  ModelSet merged = ModelSet::of(sig, {1, 2, 3});
  REQUIRE(embedded_rank_gap_sum(k, merged) == 3);  // 00 lost, 10 and 11 gained
  REQUIRE(embedded_rank_gap_sum(k, k) == 0);
}
