#include <catch2/catch_amalgamated.hpp>

#include "mergeforge/base.hpp"
#include "mergeforge/syntax_merge.hpp"

using namespace mergeforge;

namespace {

Profile from_formulas(const Signature& sig,
                      std::initializer_list<std::vector<const char*>> bases) {
  Profile e;
  int i = 0;
  for (const auto& fs : bases) {
    std::vector<Formula> parsed;
    for (const char* f : fs) parsed.push_back(parse_formula(f, sig));
    e.bases.push_back(Base("K" + std::to_string(++i), parsed, sig));
  }
  return e;
}

}  // namespace

TEST_CASE("maximal consistent subsets always contain the constraint", "[syntax-merge]") {
  Signature sig({"a", "b"});
  Profile e = from_formulas(sig, {{"a"}, {"!a", "b"}});
  FormulaSet uni = profile_formula_union(e);
  REQUIRE(uni.size() == 3);

  auto ms = maxcons(uni, f_true(), MaxconsMode::inclusion, sig);
  REQUIRE(ms.size() == 2);
  for (const Maxcons& m : ms) {
    REQUIRE(equal(m.subset.front(), f_true()));
    REQUIRE_FALSE(m.mods.empty());
  }
  // {a, b} survives together; {!a, b} is the other repair.
  REQUIRE(ms[0].mods.render(sig) == "{11}");
  REQUIRE(ms[1].mods.render(sig) == "{01}");

  SECTION("a tighter constraint changes the repairs") {
    auto tight = maxcons(uni, parse_formula("!b", sig), MaxconsMode::inclusion, sig);
    REQUIRE(tight.size() == 2);
    REQUIRE(tight[0].mods.render(sig) == "{10}");
    REQUIRE(tight[1].mods.render(sig) == "{00}");
  }

  SECTION("an inconsistent constraint is refused") {
    REQUIRE_THROWS_AS(maxcons(uni, parse_formula("a & !a", sig), MaxconsMode::inclusion, sig),
                      domain_error);
  }
}

TEST_CASE("duplicate formulas across bases collapse in the union", "[syntax-merge]") {
  Signature sig({"a", "b"});
  Profile e = from_formulas(sig, {{"a | b", "a"}, {"a | b"}});
  REQUIRE(profile_formula_union(e).size() == 2);
}

TEST_CASE("inclusion and cardinality repairs differ", "[syntax-merge]") {
  Signature sig({"a", "b"});
  Profile e = from_formulas(sig, {{"a", "b"}, {"!a & !b"}});

  ModelSet c1 = merge_c(e, f_true(), CVariant::c1, sig);
  ModelSet c4 = merge_c(e, f_true(), CVariant::c4, sig);
  REQUIRE(c1.render(sig) == "{00, 11}");
  REQUIRE(c4.render(sig) == "{11}");  // the two-formula repair outweighs the singleton
}

TEST_CASE("the unconstrained-repair variants filter and clip differently",
          "[syntax-merge]") {
  Signature sig({"a", "b"});
  Profile e = from_formulas(sig, {{"a | b"}});

  // One repair with models {01, 10, 11}; the constraint keeps only part of it.
  Formula mu = parse_formula("a", sig);
  ModelSet c3 = merge_c(e, mu, CVariant::c3, sig);
  ModelSet c5 = merge_c(e, mu, CVariant::c5, sig);
  REQUIRE(c3.render(sig) == "{01, 10, 11}");  // kept whole, escapes mu
  REQUIRE(c5.render(sig) == "{10, 11}");      // clipped to mu

  SECTION("when no repair is compatible, one goes empty and one falls back") {
    Formula none = parse_formula("!a & !b", sig);
    REQUIRE(merge_c(e, none, CVariant::c3, sig).empty());
    REQUIRE(merge_c(e, none, CVariant::c5, sig).render(sig) == "{00}");
  }
}

TEST_CASE("three sources with formula structure and a constraint", "[syntax-merge]") {
  ProfileDoc doc = parse_profile(R"(
vars l s m
mu l & !s
base K1 formulas {l <-> s; l -> m}
base K2 formulas {l <-> s; s <-> !m}
base K3 formulas {l <-> s; !m}
)");
  const Signature& sig = doc.sig;
  ModelSet mu_models = models(doc.mu, sig);

  REQUIRE(merge_c(doc.profile, doc.mu, CVariant::c1, sig) == mu_models);
  REQUIRE(merge_c(doc.profile, doc.mu, CVariant::c3, sig).empty());
  REQUIRE(merge_c(doc.profile, doc.mu, CVariant::c4, sig).render(sig) == "{101}");
  REQUIRE(merge_c(doc.profile, doc.mu, CVariant::c5, sig) == mu_models);
}

TEST_CASE("hatting a profile changes what the repairs see", "[syntax-merge]") {
  Signature sig({"a", "b"});
  Profile e = from_formulas(sig, {{"a"}, {"!a", "b"}});

  ModelSet flat = merge_c(e, f_true(), CVariant::c1, sig);
  ModelSet hat = merge_c_hat(e, f_true(), CVariant::c1, sig);

  // Unhatted, b survives alongside a; hatted, the second base is one
  // indivisible conjunction that cannot lend b out.
  REQUIRE(flat.render(sig) == "{01, 11}");
  REQUIRE(hat.render(sig) == "{01, 10, 11}");

  SECTION("model-equivalent rewrites move the unhatted result") {
    Profile e2 = from_formulas(sig, {{"a"}, {"!a & b"}});
    REQUIRE(merge_c(e2, f_true(), CVariant::c1, sig).render(sig) == "{01, 10, 11}");
    REQUIRE(merge_c_hat(e2, f_true(), CVariant::c1, sig) == hat);
  }
}
