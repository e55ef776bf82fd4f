#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cremona/incidence.hpp"

namespace cremona {

struct SearchOptions {
  long long max_nodes = 10'000'000;  // backtracking node budget
  int max_aut_vertices = 200;        // Levi-graph size guard for group search
};

/// An automorphism group given by generating point permutations and its
/// exact order, computed level by level along a stabilizer chain.
struct GroupDescription {
  std::vector<std::vector<int>> generators;
  BigInt order = 1;
};

namespace detail {

struct SearchGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<Bitset> adjbits;
  std::vector<int> init_color;

  static SearchGraph from_levi(const IncidenceStructure& s) {
    SearchGraph g;
    const LeviGraph levi = levi_graph(s);
    g.n = levi.vertex_count();
    g.adj.assign(static_cast<std::size_t>(g.n), {});
    g.adjbits.assign(static_cast<std::size_t>(g.n), Bitset(static_cast<std::size_t>(g.n)));
    for (auto [p, b] : levi.edges) {
      g.adj[static_cast<std::size_t>(p)].push_back(b);
      g.adj[static_cast<std::size_t>(b)].push_back(p);
      g.adjbits[static_cast<std::size_t>(p)].set(static_cast<std::size_t>(b));
      g.adjbits[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(p));
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    // Points and blocks start in separate color classes, so the search never
    // considers point/block swaps.
    g.init_color.assign(static_cast<std::size_t>(g.n), 0);
    for (int v = levi.point_count; v < g.n; ++v) g.init_color[static_cast<std::size_t>(v)] = 1;
    return g;
  }
};

/// One round of lockstep color refinement on two graphs.  New color ids are
/// assigned by sorted signature, identically for both sides.  Returns false
/// when the per-color vertex counts diverge (no isomorphism can respect the
/// current coloring).
inline bool refine_lockstep(const SearchGraph& g1, const SearchGraph& g2,
                            std::vector<int>& c1, std::vector<int>& c2) {
  using Signature = std::pair<int, std::vector<int>>;
  for (;;) {
    std::map<Signature, int> ids;
    std::vector<Signature> s1(static_cast<std::size_t>(g1.n)), s2(static_cast<std::size_t>(g2.n));
    auto collect = [&ids](const SearchGraph& g, const std::vector<int>& c, std::vector<Signature>& sig) {
      for (int v = 0; v < g.n; ++v) {
        std::vector<int> nb;
        nb.reserve(g.adj[static_cast<std::size_t>(v)].size());
        for (int u : g.adj[static_cast<std::size_t>(v)]) nb.push_back(c[static_cast<std::size_t>(u)]);
        std::sort(nb.begin(), nb.end());
        sig[static_cast<std::size_t>(v)] = {c[static_cast<std::size_t>(v)], std::move(nb)};
        ids.emplace(sig[static_cast<std::size_t>(v)], 0);
      }
    };
    collect(g1, c1, s1);
    collect(g2, c2, s2);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<long long> h1(static_cast<std::size_t>(next), 0), h2(static_cast<std::size_t>(next), 0);
    int old_colors = 0;
    {
      std::vector<int> seen;
      seen = c1;
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      old_colors = static_cast<int>(seen.size());
    }
    for (int v = 0; v < g1.n; ++v) {
      c1[static_cast<std::size_t>(v)] = ids[s1[static_cast<std::size_t>(v)]];
      ++h1[static_cast<std::size_t>(c1[static_cast<std::size_t>(v)])];
    }
    for (int v = 0; v < g2.n; ++v) {
      c2[static_cast<std::size_t>(v)] = ids[s2[static_cast<std::size_t>(v)]];
      ++h2[static_cast<std::size_t>(c2[static_cast<std::size_t>(v)])];
    }
    if (h1 != h2) return false;
    if (next == old_colors) return true;  // stable
  }
}

inline int color_count(const std::vector<int>& c) {
  std::vector<int> u = c;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return static_cast<int>(u.size());
}

/// Branch cell: the smallest color class with more than one vertex; ties go
/// to the lowest color id.  Returns the color, or -1 when discrete.
inline int branch_color(const std::vector<int>& c) {
  std::map<int, int> count;
  for (int col : c) ++count[col];
  int best = -1, best_size = 0;
  for (auto [col, cnt] : count)
    if (cnt > 1 && (best == -1 || cnt < best_size)) {
      best = col;
      best_size = cnt;
    }
  return best;
}

class IsoSearcher {
 public:
  IsoSearcher(const SearchGraph& g1, const SearchGraph& g2, long long budget)
      : g1_(g1), g2_(g2), budget_(budget) {}

  std::optional<std::vector<int>> run(std::vector<int> c1, std::vector<int> c2) {
    return search(std::move(c1), std::move(c2));
  }

  long long nodes_used() const { return nodes_; }

 private:
  std::optional<std::vector<int>> search(std::vector<int> c1, std::vector<int> c2) {
    if (!refine_lockstep(g1_, g2_, c1, c2)) return std::nullopt;
    const int bc = branch_color(c1);
    if (bc == -1) return leaf(c1, c2);

    int v = -1;
    for (int i = 0; i < g1_.n; ++i)
      if (c1[static_cast<std::size_t>(i)] == bc) {
        v = i;
        break;
      }
    const int fresh = g1_.n + g2_.n;  // larger than any refined color id
    for (int u = 0; u < g2_.n; ++u) {
      if (c2[static_cast<std::size_t>(u)] != bc) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("isomorphism search exceeded node budget");
      std::vector<int> n1 = c1, n2 = c2;
      n1[static_cast<std::size_t>(v)] = fresh;
      n2[static_cast<std::size_t>(u)] = fresh;
      if (auto r = search(std::move(n1), std::move(n2))) return r;
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> leaf(const std::vector<int>& c1, const std::vector<int>& c2) {
    std::vector<int> to2(static_cast<std::size_t>(g2_.n), -1);
    for (int u = 0; u < g2_.n; ++u) to2[static_cast<std::size_t>(c2[static_cast<std::size_t>(u)])] = u;
    std::vector<int> map(static_cast<std::size_t>(g1_.n), -1);
    for (int v = 0; v < g1_.n; ++v) {
      const int u = to2[static_cast<std::size_t>(c1[static_cast<std::size_t>(v)])];
      if (u < 0) return std::nullopt;
      map[static_cast<std::size_t>(v)] = u;
    }
    for (int v = 0; v < g1_.n; ++v) {
      if (g1_.adj[static_cast<std::size_t>(v)].size() != g2_.adj[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])].size())
        return std::nullopt;
      for (int w : g1_.adj[static_cast<std::size_t>(v)])
        if (!g2_.adjbits[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])].test(
                static_cast<std::size_t>(map[static_cast<std::size_t>(w)])))
          return std::nullopt;
    }
    return map;
  }

  const SearchGraph& g1_;
  const SearchGraph& g2_;
  long long budget_;
  long long nodes_ = 0;
};

}  // namespace detail

/// A point bijection carrying the blocks of s1 onto the blocks of s2, found
/// by individualization-refinement on the Levi graphs, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const IncidenceStructure& s1,
                                                        const IncidenceStructure& s2,
                                                        SearchOptions opts = {}) {
  if (s1.point_count() != s2.point_count() || s1.block_count() != s2.block_count()) return std::nullopt;
  const detail::SearchGraph g1 = detail::SearchGraph::from_levi(s1);
  const detail::SearchGraph g2 = detail::SearchGraph::from_levi(s2);
  detail::IsoSearcher searcher(g1, g2, opts.max_nodes);
  auto full = searcher.run(g1.init_color, g2.init_color);
  if (!full) return std::nullopt;
  std::vector<int> pts(full->begin(), full->begin() + s1.point_count());
  return pts;
}

/// The full automorphism group of the structure, via a stabilizer chain on
/// the Levi graph: at each level the orbit of the branch vertex is computed
/// by explicit coset-representative searches, so the reported order is the
/// product of exact orbit sizes.
inline GroupDescription automorphism_group(const IncidenceStructure& s, SearchOptions opts = {}) {
  const detail::SearchGraph g = detail::SearchGraph::from_levi(s);
  if (g.n > opts.max_aut_vertices)
    throw ParameterError("Levi graph has " + std::to_string(g.n) + " vertices, above the search guard of " +
                         std::to_string(opts.max_aut_vertices));
  GroupDescription out;
  if (g.n == 0) return out;

  long long nodes_left = opts.max_nodes;
  std::vector<int> fixed;
  for (;;) {
    std::vector<int> base = g.init_color;
    int fresh = g.n;
    for (int bv : fixed) base[static_cast<std::size_t>(bv)] = fresh++;
    std::vector<int> ca = base, cb = base;
    if (!detail::refine_lockstep(g, g, ca, cb)) throw CheckFailed("self refinement diverged");
    const int bc = detail::branch_color(ca);
    if (bc == -1) break;

    std::vector<int> cell;
    for (int v = 0; v < g.n; ++v)
      if (ca[static_cast<std::size_t>(v)] == bc) cell.push_back(v);
    const int v = cell.front();

    std::vector<std::vector<int>> level_perms;
    std::vector<char> in_orbit(static_cast<std::size_t>(g.n), 0);
    in_orbit[static_cast<std::size_t>(v)] = 1;
    long long orbit_size = 1;
    auto close_orbit = [&]() {
      std::vector<int> stack;
      for (int w = 0; w < g.n; ++w)
        if (in_orbit[static_cast<std::size_t>(w)]) stack.push_back(w);
      while (!stack.empty()) {
        const int w = stack.back();
        stack.pop_back();
        for (const auto& p : level_perms) {
          const int img = p[static_cast<std::size_t>(w)];
          if (!in_orbit[static_cast<std::size_t>(img)]) {
            in_orbit[static_cast<std::size_t>(img)] = 1;
            ++orbit_size;
            stack.push_back(img);
          }
        }
      }
    };

    const int pair_fresh = 2 * g.n;  // distinct from refined ids and base ids
    for (int u : cell) {
      if (u == v || in_orbit[static_cast<std::size_t>(u)]) continue;
      std::vector<int> c1 = ca, c2 = ca;
      c1[static_cast<std::size_t>(v)] = pair_fresh;
      c2[static_cast<std::size_t>(u)] = pair_fresh;
      detail::IsoSearcher searcher(g, g, nodes_left);
      auto r = searcher.run(std::move(c1), std::move(c2));
      nodes_left -= searcher.nodes_used();
      if (r) {
        level_perms.push_back(*r);
        out.generators.emplace_back(r->begin(), r->begin() + s.point_count());
        if (!in_orbit[static_cast<std::size_t>(u)]) {
          in_orbit[static_cast<std::size_t>(u)] = 1;
          ++orbit_size;
        }
        close_orbit();
      }
    }
    out.order *= orbit_size;
    fixed.push_back(v);
  }
  return out;
}

}  // namespace cremona
