#include <catch2/catch_amalgamated.hpp>

#include "mergeforge/base.hpp"
#include "mergeforge/model_merge.hpp"
#include "mergeforge/operators.hpp"
#include "mergeforge/parse.hpp"

using namespace mergeforge;

namespace {

Profile three_sources(const Signature& sig) {
  Profile e;
  e.bases.push_back(Base("K1", {canonical_dnf(ModelSet::of(sig, {0, 1, 7}), sig)}, sig));
  e.bases.push_back(Base("K2", {canonical_dnf(ModelSet::of(sig, {1, 6}), sig)}, sig));
  e.bases.push_back(Base("K3", {canonical_dnf(ModelSet::of(sig, {0, 6}), sig)}, sig));
  return e;
}

}  // namespace

TEST_CASE("hamming-sum ranking over three sources", "[model-merge]") {
  Signature sig({"l", "s", "m"});
  Profile e = three_sources(sig);
  MergeRanking r = ranking(e, f_true(), builtin_distance(DistanceId::hamming),
                           builtin_aggregation(AggId::sum), sig);

  REQUIRE(r.rows.size() == 8);
  auto agg = [&](World w) { return r.rows[w].agg.str(); };
  REQUIRE(agg(0b000) == "1");
  REQUIRE(agg(0b001) == "1");
  REQUIRE(agg(0b010) == "3");
  REQUIRE(agg(0b011) == "4");
  REQUIRE(agg(0b100) == "3");
  REQUIRE(agg(0b101) == "4");
  REQUIRE(agg(0b110) == "1");
  REQUIRE(agg(0b111) == "2");
  REQUIRE(r.rows[0b110].dists == std::vector<unsigned>{1, 0, 0});

  REQUIRE(merged_from_ranking(r, sig).render(sig) == "{000, 001, 110}");
}

TEST_CASE("constraints restrict the minimization", "[model-merge]") {
  Signature sig({"l", "s", "m"});
  Profile e = three_sources(sig);

  ModelSet merged = merge_model_based(e, parse_formula("s", sig), DistanceId::hamming,
                                      AggId::sum, sig);
  REQUIRE(merged.render(sig) == "{110}");

  REQUIRE_THROWS_AS(
      merge_model_based(e, parse_formula("s & !s", sig), DistanceId::hamming, AggId::sum, sig),
      domain_error);
}

TEST_CASE("sum and leximax disagree where ties spread differently", "[model-merge]") {
  Signature sig({"a", "b", "c"});
  Profile e;
  e.bases.push_back(Base("K1", {canonical_dnf(ModelSet::of(sig, {0b001}), sig)}, sig));
  e.bases.push_back(Base("K2", {canonical_dnf(ModelSet::of(sig, {0b111}), sig)}, sig));

  ModelSet by_sum = merge_model_based(e, f_true(), DistanceId::hamming, AggId::sum, sig);
  ModelSet by_gmax = merge_model_based(e, f_true(), DistanceId::hamming, AggId::gmax, sig);

  // Sum keeps the whole geodesic between the two sources; leximax keeps only
  // the worlds splitting the disagreement evenly.
  REQUIRE(by_sum.render(sig) == "{001, 011, 101, 111}");
  REQUIRE(by_gmax.render(sig) == "{011, 101}");
}

TEST_CASE("model-based merging satisfies the basic postulates on small instances",
          "[model-merge]") {
  Signature sig({"a", "b"});
  std::vector<ModelSet> sets;
  for (World mask = 1; mask < 16; ++mask) {
    ModelSet s(sig.size());
    for (World w = 0; w < 4; ++w)
      if (mask & (1u << w)) s.insert(w);
    sets.push_back(s);
  }

  const char* names[] = {"dD-sum", "dD-max", "dD-gmax", "dH-sum", "dH-max", "dH-gmax"};
  for (const char* name : names) {
    const OperatorHandle& op = OperatorHandle::by_name(name);
    for (const ModelSet& s1 : sets)
      for (const ModelSet& s2 : sets) {
        Profile e;
        e.bases.push_back(Base("K1", {canonical_dnf(s1, sig)}, sig));
        e.bases.push_back(Base("K2", {canonical_dnf(s2, sig)}, sig));
        for (World mu_mask = 1; mu_mask < 16; ++mu_mask) {
          ModelSet mu_models(sig.size());
          for (World w = 0; w < 4; ++w)
            if (mu_mask & (1u << w)) mu_models.insert(w);
          Formula mu = canonical_dnf(mu_models, sig);

          ModelSet merged = op.merge(e, mu, sig);
          INFO(name << " [K1]=" << s1.render(sig) << " [K2]=" << s2.render(sig)
                    << " mu=" << mu_models.render(sig));

          // Always: consistent, within mu.
          REQUIRE_FALSE(merged.empty());
          REQUIRE(merged.subset_of(mu_models));

          // When the profile agrees with mu, the merge is exactly that core.
          ModelSet core = s1 & s2 & mu_models;
          if (!core.empty()) REQUIRE(merged == core);
        }
      }
  }
}

TEST_CASE("operator handles expose the right vocabulary", "[model-merge]") {
  REQUIRE(OperatorHandle::all().size() == 18);
  REQUIRE(OperatorHandle::by_name("dH-gmax").family() == OperatorFamily::model_based);
  REQUIRE(OperatorHandle::by_name("hc3").family() == OperatorFamily::formula_based_hat);
  REQUIRE(OperatorHandle::by_name("ocf-sigma").accepts_constraint() == false);
  REQUIRE(OperatorHandle::by_name("c4").syntax_sensitive());
  REQUIRE_FALSE(OperatorHandle::by_name("hc4").syntax_sensitive());
  REQUIRE(OperatorHandle::by_name("c3").may_return_empty());
  REQUIRE_THROWS_AS(OperatorHandle::by_name("dL-sum"), domain_error);

  Signature sig({"a"});
  Profile e;
  e.bases.push_back(Base("K", {parse_formula("a", sig)}, sig));
  REQUIRE_THROWS_AS(OperatorHandle::by_name("c1").table(e, f_true(), sig), domain_error);
  REQUIRE_THROWS_AS(
      OperatorHandle::by_name("ocf-max").merge(e, parse_formula("a", sig), sig),
      domain_error);
}
