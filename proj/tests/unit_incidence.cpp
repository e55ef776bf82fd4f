#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "cremona/cremona_richmond.hpp"
#include "cremona/incidence.hpp"
#include "cremona/reports.hpp"

using namespace cremona;

namespace {
IncidenceStructure tiny() {
  // three points, two blocks; point 2 has rank 1, the others rank 2
  return IncidenceStructure({Subset::of({0}), Subset::of({1}), Subset::of({2})},
                            {{0, 1}, {0, 2}});
}
}  // namespace

TEST_CASE("construction canonicalizes and validates") {
  // labels get sorted; block indices follow them
  IncidenceStructure s({Subset::of({5}), Subset::of({1})}, {{0, 1}});
  CHECK(s.label(0) == Subset::of({1}));
  CHECK(s.label(1) == Subset::of({5}));
  CHECK(s.block(0) == std::vector<int>{0, 1});

  CHECK_THROWS_AS(IncidenceStructure({Subset::of({1}), Subset::of({1})}, {}), ParameterError);
  CHECK_THROWS_AS(IncidenceStructure({Subset::of({1})}, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(IncidenceStructure({Subset::of({1})}, {{1}}), ParameterError);
  CHECK_THROWS_AS(IncidenceStructure({Subset::of({0}), Subset::of({1})}, {{0, 1}, {1, 0}}),
                  ParameterError);
}

TEST_CASE("configuration parameters") {
  const auto c = build_cr(6, 2, 3);
  const ConfigurationParams p = verify_configuration(c.structure());
  CHECK(p == ConfigurationParams{15, 3, 15, 3});

  SECTION("derived instances") {
    CHECK(verify_configuration(build_cr(8, 2, 4).structure()) ==
          ConfigurationParams{28, 15, 105, 4});
    CHECK(verify_configuration(build_cr(7, 2, 3).structure()) ==
          ConfigurationParams{35, 9, 105, 3});
  }

  SECTION("non-uniform structures are rejected with the offender named") {
    CHECK_THROWS_WITH(verify_configuration(tiny()), Catch::Matchers::ContainsSubstring("point"));
    const IncidenceStructure mixed({Subset::of({0}), Subset::of({1}), Subset::of({2})},
                                   {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
    CHECK_THROWS_WITH(verify_configuration(mixed), Catch::Matchers::ContainsSubstring("block"));
  }

  SECTION("no blocks means zero rank") {
    const IncidenceStructure bare({Subset::of({0})}, {});
    CHECK(verify_configuration(bare) == ConfigurationParams{1, 0, 0, 0});
    CHECK_THROWS_AS(verify_configuration(IncidenceStructure()), ParameterError);
  }
}

TEST_CASE("intersection profile") {
  SECTION("single block") {
    const IncidenceStructure one({Subset::of({0}), Subset::of({1})}, {{0, 1}});
    CHECK(intersection_profile(one).empty());
  }

  SECTION("no two blocks of the s = 3 instance share two points") {
    const auto prof = intersection_profile(build_cr(6, 2, 3).structure());
    for (const auto& [size, count] : prof) CHECK(size <= 1);
    CHECK(prof.at(0) > 0);
    CHECK(prof.at(1) > 0);
  }

  SECTION("the s = 4 instance meets in 0, 1 and 2 points") {
    const auto prof = intersection_profile(build_cr(8, 2, 4).structure());
    REQUIRE(prof.size() == 3);
    CHECK(prof.at(0) == 3150);
    CHECK(prof.at(1) == 1680);
    CHECK(prof.at(2) == 630);
  }
}

TEST_CASE("neighborhood") {
  const auto c6 = build_cr(6, 2, 3);
  SECTION("every point of the (15,3,15,3) instance sees 6 points on 3 short blocks") {
    for (int p = 0; p < 15; ++p) {
      const IncidenceStructure nb = neighborhood(c6.structure(), p);
      CHECK(nb.point_count() == 6);
      CHECK(nb.block_count() == 3);
      for (const auto& blk : nb.blocks()) CHECK(blk.size() == 2);
    }
  }

  SECTION("point on no blocks") {
    const IncidenceStructure s({Subset::of({0}), Subset::of({1}), Subset::of({2})}, {{0, 1}});
    const IncidenceStructure nb = neighborhood(s, 2);
    CHECK(nb.point_count() == 0);
    CHECK(nb.block_count() == 0);
  }

  CHECK_THROWS_AS(neighborhood(c6.structure(), 15), ParameterError);
}

TEST_CASE("Levi graph") {
  const LeviGraph g6 = levi_graph(build_cr(6, 2, 3).structure());
  CHECK(g6.vertex_count() == 30);
  CHECK(g6.edges.size() == 45);

  const LeviGraph g7 = levi_graph(build_cr(7, 2, 3).structure());
  CHECK(g7.vertex_count() == 140);
  CHECK(g7.edges.size() == 315);

  CHECK(levi_graph(IncidenceStructure()).vertex_count() == 0);
}

TEST_CASE("automorphism membership test") {
  const auto s = build_cr(6, 2, 3).structure();
  std::vector<int> id(15);
  for (int i = 0; i < 15; ++i) id[static_cast<std::size_t>(i)] = i;
  CHECK(is_automorphism(s, id));

  SECTION("rank is an automorphism invariant") {
    // two points on one block of the non-uniform toy structure have
    // different ranks, so their transposition is no automorphism
    const IncidenceStructure t = tiny();
    std::vector<int> swap01{1, 0, 2};
    CHECK_FALSE(is_automorphism(t, swap01));
  }

  SECTION("rejects non-permutations") {
    std::vector<int> short_perm{0, 1};
    CHECK_THROWS_AS(is_automorphism(s, short_perm), ParameterError);
    std::vector<int> repeated(15, 0);
    CHECK_THROWS_AS(is_automorphism(s, repeated), ParameterError);
  }
}

TEST_CASE("JSON and DOT export") {
  const auto s = build_cr(6, 2, 3).structure();
  const nlohmann::json j = incidence_json(s);
  REQUIRE(j.contains("points"));
  REQUIRE(j.contains("blocks"));
  CHECK(j["points"].size() == 15);
  CHECK(j["blocks"].size() == 15);
  CHECK(j["points"][0] == nlohmann::json::array({0, 1}));
  for (const auto& blk : j["blocks"]) CHECK(blk.size() == 3);

  SECTION("deterministic output") {
    CHECK(incidence_json(s).dump(2) == j.dump(2));
  }

  const std::string dot = levi_dot(s);
  CHECK(dot.find("graph levi {") == 0);
  CHECK(dot.find("shape=ellipse") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("p0 -- b") != std::string::npos);
}
