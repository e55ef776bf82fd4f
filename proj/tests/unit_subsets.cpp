#include <catch2/catch_amalgamated.hpp>

#include "cremona/subsets.hpp"
#include "test_support.hpp"

using namespace cremona;

TEST_CASE("k-subset enumeration") {
  CHECK(k_subsets(4, 2).size() == 6);
  CHECK(k_subsets(6, 2).size() == 15);

  SECTION("empty-set case") {
    const auto zero = k_subsets(6, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front().empty());
  }

  SECTION("colexicographic order and exact counts") {
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto subs = k_subsets(n, k);
        REQUIRE(BigInt(subs.size()) == binomial(n, k));
        for (std::size_t i = 0; i < subs.size(); ++i) {
          CHECK(subs[i].card() == k);
          if (i > 0) CHECK(subs[i - 1] < subs[i]);
        }
      }
  }

  SECTION("full-width ground set") {
    CHECK(k_subsets(64, 1).size() == 64);
    CHECK(k_subsets(64, 63).size() == 64);
  }

  CHECK_THROWS_AS(k_subsets(4, 5), ParameterError);
  CHECK_THROWS_AS(k_subsets(65, 2), ParameterError);
}

TEST_CASE("complement") {
  CHECK(complement(Subset::of({0, 1}), 6) == Subset::of({2, 3, 4, 5}));
  CHECK(complement(Subset(), 5) == Subset::of({0, 1, 2, 3, 4}));
  CHECK(complement(Subset::of({0, 2, 4}), 6) == Subset::of({1, 3, 5}));

  SECTION("involution and cardinality") {
    for (int n : {1, 5, 8})
      for (Subset a : k_subsets(n, n / 2)) {
        CHECK(complement(complement(a, n), n) == a);
        CHECK(a.card() + complement(a, n).card() == n);
      }
  }

  CHECK_THROWS_AS(complement(Subset::of({7}), 6), ParameterError);
}

TEST_CASE("uniform partitions") {
  SECTION("counts against brute force") {
    const auto p4 = uniform_partitions(Subset::full(4), 2, 2);
    CHECK(p4.size() == 3);
    CHECK(p4.size() == testsupport::brute_force_partitions(Subset::full(4), 2, 2).size());

    const auto p6 = uniform_partitions(Subset::full(6), 2, 3);
    CHECK(p6.size() == 15);
    const auto brute = testsupport::brute_force_partitions(Subset::full(6), 2, 3);
    CHECK(p6.size() == brute.size());
    for (const auto& parts : p6) CHECK(brute.count(parts) == 1);
  }

  SECTION("singleton parts") {
    const auto p = uniform_partitions(Subset::full(3), 1, 3);
    REQUIRE(p.size() == 1);
    CHECK(p.front() == UniformPartition{Subset::single(0), Subset::single(1), Subset::single(2)});
  }

  SECTION("canonical order makes equality structural") {
    const UniformPartition a = canonical_partition({Subset::of({2, 3}), Subset::of({0, 1})});
    const UniformPartition b = canonical_partition({Subset::of({0, 1}), Subset::of({2, 3})});
    CHECK(a == b);
    CHECK(a.front() == Subset::of({0, 1}));
  }

  SECTION("no duplicates, count matches the closed form") {
    const auto p8 = uniform_partitions(Subset::full(8), 2, 4);
    std::set<UniformPartition> dedup(p8.begin(), p8.end());
    CHECK(dedup.size() == p8.size());
    CHECK(BigInt(p8.size()) == count_partitions(8, 2, 4));
  }

  CHECK_THROWS_AS(uniform_partitions(Subset::full(5), 2, 2), ParameterError);
}

TEST_CASE("partition counting") {
  CHECK(count_partitions(6, 2, 3) == 15);
  CHECK(count_partitions(8, 2, 4) == 105);
  CHECK(count_partitions(7, 2, 3) == 105);

  SECTION("m > 0 count equals the enumeration over ks-subsets") {
    BigInt total = 0;
    for (Subset z : k_subsets(7, 6)) total += BigInt(uniform_partitions(z, 2, 3).size());
    CHECK(total == count_partitions(7, 2, 3));
  }

  SECTION("stays exact at full width") {
    // 64! / (40! 8! (3!)^8) has no 64-bit representation; spot-check divisibility
    const BigInt big = count_partitions(64, 3, 8);
    CHECK(big > BigInt("18446744073709551615"));
  }

  CHECK_THROWS_AS(count_partitions(5, 2, 3), ParameterError);
}

TEST_CASE("subset basics") {
  const Subset a = Subset::of({1, 3, 5});
  CHECK(a.card() == 3);
  CHECK(a.contains(3));
  CHECK(!a.contains(2));
  CHECK(a.min_element() == 1);
  CHECK(a.to_string() == "{1,3,5}");
  CHECK(Subset().to_string() == "{}");
  CHECK(a.subset_of(Subset::full(6)));
  CHECK(a.disjoint(Subset::of({0, 2})));
  CHECK((a | Subset::of({0})) == Subset::of({0, 1, 3, 5}));
  CHECK((a & Subset::of({3, 4})) == Subset::of({3}));
  CHECK(a.minus(Subset::of({3})) == Subset::of({1, 5}));
}
