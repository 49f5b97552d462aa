#include <catch2/catch_amalgamated.hpp>

#include <mergeforge_embedded_data.hpp>

#include "mergeforge/golden.hpp"

using namespace mergeforge;

namespace {

std::string embedded_table(const std::string& name) {
  const auto& all = embedded::files();
  auto it = all.find("golden/" + name);
  REQUIRE(it != all.end());
  return std::string(it->second);
}

}  // namespace

TEST_CASE("every frozen table reproduces cell-exactly", "[golden]") {
  const char* names[] = {
      "table01.txt", "table02.txt", "table05.txt", "table06.txt", "table07.txt",
      "table08.txt", "table09.txt", "table10.txt", "table11.txt", "table12.txt",
      "table13.txt", "table15.txt", "table16.txt", "table17.txt",
  };
  for (const char* name : names) {
    GoldenReport rep = reproduce_table(embedded_table(name));
    INFO(name << " (" << rep.caption << ")");
    for (const CellDiff& d : rep.diffs)
      UNSCOPED_INFO(d.where << ": expected " << d.expected << ", got " << d.actual);
    REQUIRE(rep.ok());
    REQUIRE(rep.cells > 0);
  }
}

TEST_CASE("the embedded corpus also carries the sample profiles", "[golden]") {
  const auto& all = embedded::files();
  REQUIRE(all.count("profiles/example3.profile") == 1);
  REQUIRE(all.count("profiles/example4.profile") == 1);

  ProfileDoc doc = parse_profile(std::string(all.at("profiles/example3.profile")));
  REQUIRE(doc.profile.size() == 3);
}

TEST_CASE("golden parsing rejects structural damage", "[golden]") {
  std::string good = embedded_table("table01.txt");

  REQUIRE_THROWS_AS(parse_golden_table("caption no table line\n"), parse_error);
  REQUIRE_THROWS_AS(parse_golden_table("table 1\noperator dH-sum\n"), parse_error);
  REQUIRE_THROWS_AS(parse_golden_table(good + "\nwat 7\n"), parse_error);
  REQUIRE_THROWS_AS(parse_golden_table(good + "\nrow 000 | 1\n"), parse_error);

  SECTION("a second swap line is refused") {
    std::string doubled = good + "\nswap K1 models {000}\nswap K2 models {001}\n";
    REQUIRE_THROWS_AS(parse_golden_table(doubled), parse_error);
  }
}

TEST_CASE("a perturbed cell shows up as exactly one diff", "[golden]") {
  std::string text = embedded_table("table01.txt");

  SECTION("distance cell") {
    auto at = text.find("row 010 | 1 1 1 | 3");
    REQUIRE(at != std::string::npos);
    std::string bad = text;
    bad.replace(at, 19, "row 010 | 1 2 1 | 3");
    GoldenReport rep = reproduce_table(bad);
    REQUIRE(rep.diffs.size() == 1);
    REQUIRE(rep.diffs[0].where == "row 010 d(K2)");
    REQUIRE(rep.diffs[0].expected == "2");
    REQUIRE(rep.diffs[0].actual == "1");
  }

  SECTION("merged set") {
    auto at = text.find("merged {000, 001, 110}");
    REQUIRE(at != std::string::npos);
    std::string bad = text;
    bad.replace(at, 22, "merged {000, 001, 111}");
    GoldenReport rep = reproduce_table(bad);
    REQUIRE(rep.diffs.size() == 1);
    REQUIRE(rep.diffs[0].where == "merged");
  }
}

TEST_CASE("tables disagreeing with the engine fail loudly, not silently", "[golden]") {
  // A canonical regression: the table claims a different operator than the
  // cells were computed with. Every aggregate cell shifts.
  std::string text = embedded_table("table01.txt");
  auto at = text.find("operator dH-sum");
  REQUIRE(at != std::string::npos);
  text.replace(at, 15, "operator dD-sum");
  GoldenReport rep = reproduce_table(text);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(rep.diffs.size() > 3);
}
