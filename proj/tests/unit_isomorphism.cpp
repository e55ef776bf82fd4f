#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cremona/cremona_richmond.hpp"
#include "cremona/isomorphism.hpp"
#include "test_support.hpp"

using namespace cremona;

TEST_CASE("isomorphism search") {
  const auto c6 = build_cr(6, 2, 3);

  SECTION("a structure is isomorphic to itself") {
    const auto iso = find_isomorphism(c6.structure(), c6.structure());
    REQUIRE(iso.has_value());
    CHECK(is_automorphism(c6.structure(), *iso));
  }

  SECTION("the complement relabeling matches the Sylvester system") {
    const auto iso = find_isomorphism(kappa_relabel(c6), build_sylvester(6, 2).structure);
    CHECK(iso.has_value());
  }

  SECTION("size mismatch") {
    CHECK_FALSE(find_isomorphism(c6.structure(), build_cr(8, 2, 4).structure()).has_value());
  }

  SECTION("same counts, different structure") {
    const IncidenceStructure triangle({Subset::of({0}), Subset::of({1}), Subset::of({2})},
                                      {{0, 1}, {1, 2}, {0, 2}});
    const IncidenceStructure chain({Subset::of({0}), Subset::of({1}), Subset::of({2})},
                                   {{0, 1}, {1, 2}, {0, 1, 2}});
    CHECK_FALSE(find_isomorphism(triangle, chain).has_value());
  }
}

TEST_CASE("automorphism group search") {
  SECTION("one point, no blocks") {
    const GroupDescription g = automorphism_group(IncidenceStructure({Subset::of({0})}, {}));
    CHECK(g.order == 1);
    CHECK(g.generators.empty());
  }

  SECTION("a single block on two of three points") {
    const IncidenceStructure s({Subset::of({0}), Subset::of({1}), Subset::of({2})}, {{0, 1}});
    const GroupDescription g = automorphism_group(s);
    CHECK(g.order == 2);
  }

  SECTION("the (15,3,15,3) configuration has the full symmetric group") {
    const auto c = build_cr(6, 2, 3);
    const GroupDescription g = automorphism_group(c.structure());
    CHECK(g.order == 720);
    for (const auto& gen : g.generators) CHECK(is_automorphism(c.structure(), gen));
    // independent oracle: closure of the generators really has that size
    CHECK(testsupport::enumerate_group_order(g.generators, 15) == 720);

    // every generator is induced by a ground-set permutation
    std::vector<std::vector<int>> induced;
    std::vector<int> sigma{0, 1, 2, 3, 4, 5};
    do {
      induced.push_back(induced_map(sigma, c));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(induced.begin(), induced.end());
    for (const auto& gen : g.generators)
      CHECK(std::binary_search(induced.begin(), induced.end(), gen));
  }

  SECTION("node budget is enforced, never silently truncated") {
    SearchOptions opts;
    opts.max_nodes = 3;
    CHECK_THROWS_AS(automorphism_group(build_cr(6, 2, 3).structure(), opts), BudgetExceeded);
  }

  SECTION("vertex guard is configurable") {
    const auto big = build_cr(8, 2, 3).structure();  // 490 Levi vertices
    CHECK_THROWS_AS(automorphism_group(big), ParameterError);
  }
}

TEST_CASE("induced maps on the m = 1 instance", "[.slow]") {
  // S_7 embeds into the automorphism group but does not exhaust it
  const auto c = build_cr(7, 2, 3);
  std::vector<int> sigma{1, 0, 2, 3, 4, 5, 6};
  CHECK(is_automorphism(c.structure(), induced_map(sigma, c)));
  const GroupDescription g = automorphism_group(c.structure());
  CHECK(g.order > 5040);
  CHECK(testsupport::enumerate_group_order(g.generators, 35) == g.order);
}
