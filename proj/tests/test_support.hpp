#pragma once

// Test-only oracles, kept independent of the library's implementation paths.

#include <set>
#include <vector>

#include "cremona/subsets.hpp"

namespace testsupport {

/// Brute-force enumeration of the partitions of z into s parts of size k:
/// assign every element to one of s groups, keep the balanced assignments,
/// and deduplicate as canonical part families.
inline std::set<std::vector<cremona::Subset>> brute_force_partitions(cremona::Subset z, int k, int s) {
  const std::vector<int> elems = z.elements();
  std::set<std::vector<cremona::Subset>> out;
  std::vector<int> group(elems.size(), 0);
  for (;;) {
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(s), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
      parts[static_cast<std::size_t>(group[i])] |= std::uint64_t{1} << elems[i];
    bool balanced = true;
    std::vector<cremona::Subset> family;
    for (std::uint64_t bits : parts) {
      cremona::Subset part(bits);
      if (part.card() != k) {
        balanced = false;
        break;
      }
      family.push_back(part);
    }
    if (balanced) out.insert(cremona::canonical_partition(family));
    std::size_t i = 0;
    while (i < group.size() && group[i] == s - 1) group[i++] = 0;
    if (i == group.size()) break;
    ++group[i];
  }
  return out;
}

/// Full enumeration of the group generated by point permutations, by closure
/// under composition.  Throws when the group exceeds the cap.
inline cremona::BigInt enumerate_group_order(const std::vector<std::vector<int>>& generators,
                                             int degree, std::size_t cap = 1'000'000) {
  std::vector<int> identity(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) identity[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& h : generators) {
        std::vector<int> gh(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i)
          gh[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
        if (seen.insert(gh).second) {
          if (seen.size() > cap) throw cremona::BudgetExceeded("group enumeration cap exceeded");
          next.push_back(std::move(gh));
        }
      }
    frontier = std::move(next);
  }
  return cremona::BigInt(seen.size());
}

}  // namespace testsupport
