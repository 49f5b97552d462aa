#include <catch2/catch_amalgamated.hpp>

#include "mergeforge/metric.hpp"

using namespace mergeforge;

namespace {
const Signature sig3({"a", "b", "c"});
}

TEST_CASE("hamming and drastic distances", "[metric]") {
  REQUIRE(hamming_distance(0b000, 0b000, sig3) == 0);
  REQUIRE(hamming_distance(0b000, 0b111, sig3) == 3);
  REQUIRE(hamming_distance(0b001, 0b011, sig3) == 1);
  REQUIRE(drastic_distance(0b001, 0b001, sig3) == 0);
  REQUIRE(drastic_distance(0b001, 0b011, sig3) == 1);

  SECTION("both satisfy the distance axioms exhaustively") {
    REQUIRE_NOTHROW(validate_distance_axioms(
        [](World a, World b, const Signature& s) { return hamming_distance(a, b, s); }));
    REQUIRE_NOTHROW(validate_distance_axioms(
        [](World a, World b, const Signature& s) { return drastic_distance(a, b, s); }));
  }

  SECTION("registration rejects a rule that breaks symmetry") {
    REQUIRE_THROWS_AS(
        make_distance("bad", [](World a, World b, const Signature&) -> unsigned {
          return a < b ? 1 : (a == b ? 0 : 2);
        }),
        domain_error);
  }
}

TEST_CASE("distance from a world to a base is the min over its models", "[metric]") {
  Base k("K", {canonical_dnf(ModelSet::of(sig3, {0b000, 0b111}), sig3)}, sig3);
  REQUIRE(dist_to_base(0b001, k, DistanceId::hamming, sig3) == 1);
  REQUIRE(dist_to_base(0b011, k, DistanceId::hamming, sig3) == 1);
  REQUIRE(dist_to_base(0b000, k, DistanceId::hamming, sig3) == 0);
  REQUIRE(dist_to_base(0b001, k, DistanceId::drastic, sig3) == 1);
  REQUIRE(dist_to_base(0b111, k, DistanceId::drastic, sig3) == 0);
}

TEST_CASE("aggregation rules and their rendering", "[metric]") {
  std::vector<unsigned> xs{2, 0, 1};

  AggValue s = aggregate(AggId::sum, xs);
  AggValue mx = aggregate(AggId::max, xs);
  AggValue g = aggregate(AggId::gmax, xs);

  REQUIRE_FALSE(s.is_vector);
  REQUIRE(s.scalar == 3);
  REQUIRE(s.str() == "3");
  REQUIRE(mx.str() == "2");
  REQUIRE(g.is_vector);
  REQUIRE(g.vec == std::vector<unsigned>{2, 1, 0});  // sorted descending
  REQUIRE(g.str() == "(2,1,0)");

  SECTION("comparison is numeric for scalars, lexicographic for vectors") {
    REQUIRE(compare(aggregate(AggId::sum, {1, 1}), aggregate(AggId::sum, {0, 3})) < 0);
    REQUIRE(compare(aggregate(AggId::gmax, {1, 1}), aggregate(AggId::gmax, {2, 0})) < 0);
    REQUIRE(compare(aggregate(AggId::gmax, {2, 1}), aggregate(AggId::gmax, {2, 0})) > 0);
    REQUIRE(compare(aggregate(AggId::gmax, {1, 2}), aggregate(AggId::gmax, {2, 1})) == 0);
  }

  SECTION("builtins satisfy the aggregation axioms") {
    for (AggId id : {AggId::sum, AggId::max, AggId::gmax}) {
      bool vec = id == AggId::gmax;
      REQUIRE_NOTHROW(validate_aggregation_axioms(
          [id](const std::vector<unsigned>& v) { return aggregate(id, v); }, vec));
    }
  }

  SECTION("registration rejects a decreasing rule") {
    REQUIRE_THROWS_AS(make_aggregation("bad", false,
                                       [](const std::vector<unsigned>& v) {
                                         unsigned total = 10;
                                         for (unsigned x : v) total -= std::min(x, 10u);
                                         return AggValue::of(total);
                                       }),
                      domain_error);
  }
}

TEST_CASE("gmax orders by worst offender first", "[metric]") {
  // Property: if one multiset majorizes another after sorting descending,
  // compare agrees with the first differing position.
  std::vector<std::vector<unsigned>> inputs;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b)
      for (unsigned c = 0; c <= 3; ++c) inputs.push_back({a, b, c});

  for (const auto& x : inputs)
    for (const auto& y : inputs) {
      auto sx = x, sy = y;
      std::sort(sx.rbegin(), sx.rend());
      std::sort(sy.rbegin(), sy.rend());
      int expect = sx < sy ? -1 : (sx == sy ? 0 : 1);
      int got = compare(aggregate(AggId::gmax, x), aggregate(AggId::gmax, y));
      REQUIRE(got == expect);
    }
}
