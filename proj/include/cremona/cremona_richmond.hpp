#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "cremona/incidence.hpp"
#include "cremona/subsets.hpp"

namespace cremona {

/// Parameters (n, k, s) with m = n - ks >= 0 elements outside the partitioned
/// part.
struct CRParams {
  int n, k, s;

  CRParams(int n_, int k_, int s_) : n(n_), k(k_), s(s_) {
    if (k < 1) throw ParameterError("k must be positive");
    if (s < 2) throw ParameterError("s must be at least 2");
    if (n > max_ground_set) throw ParameterError("ground set size out of range");
    if (n < k * s) throw ParameterError("n must be at least k*s");
  }

  int m() const { return n - k * s; }
};

/// The generalized Cremona-Richmond configuration on {0,...,n-1}: points are
/// the (k+m)-subsets, blocks are the families {a_1 ∪ p, ..., a_s ∪ p} with
/// pairwise disjoint k-sets a_i and an m-set p disjoint from all of them.
class CRConfiguration {
 public:
  explicit CRConfiguration(CRParams params) : params_(params), structure_(build(params)) {}

  const CRParams& params() const { return params_; }
  const IncidenceStructure& structure() const { return structure_; }
  int point_index(Subset label) const { return structure_.point_index(label); }

 private:
  static IncidenceStructure build(const CRParams& p) {
    const int m = p.m();
    const std::vector<Subset> labels = k_subsets(p.n, p.k + m);
    auto index_of = [&labels](Subset a) {
      auto it = std::lower_bound(labels.begin(), labels.end(), a);
      return static_cast<int>(it - labels.begin());
    };
    std::vector<std::vector<int>> blocks;
    for (Subset tail : k_subsets(p.n, m)) {
      const Subset rest = complement(tail, p.n);
      for (const UniformPartition& parts : uniform_partitions(rest, p.k, p.s)) {
        std::vector<int> blk;
        blk.reserve(static_cast<std::size_t>(p.s));
        for (Subset part : parts) blk.push_back(index_of(part | tail));
        blocks.push_back(std::move(blk));
      }
    }
    return IncidenceStructure(labels, std::move(blocks));
  }

  CRParams params_;
  IncidenceStructure structure_;
};

inline CRConfiguration build_cr(int n, int k, int s) { return CRConfiguration(CRParams(n, k, s)); }

/// Closed-form parameters: nu = C(n, k(s-1)),
/// r = (n-(s-1)k)! ((s-1)k)! / ((n-ks)! (s-1)! (k!)^s),
/// b = n! / ((n-ks)! s! (k!)^s).
inline ConfigurationParams predicted_params(int n, int k, int s) {
  const CRParams p(n, k, s);
  const int m = p.m();
  const BigInt nu = binomial(n, k * (s - 1));
  BigInt rden = factorial(m) * factorial(s - 1);
  const BigInt kf = factorial(k);
  for (int i = 0; i < s; ++i) rden *= kf;
  const BigInt r = factorial(n - (s - 1) * k) * factorial((s - 1) * k) / rden;
  const BigInt b = count_partitions(n, k, s);
  return ConfigurationParams{nu, r, b, BigInt(s)};
}

/// The generalized Sylvester system on {0,...,n-1}: points are the
/// 2k-subsets, blocks the triples {a, b, (a\b) ∪ (b\a)} with |a ∩ b| = k.
struct SylvesterSystem {
  int n = 0;
  int k = 0;
  IncidenceStructure structure;
};

inline SylvesterSystem build_sylvester(int n, int k) {
  if (k < 1) throw ParameterError("k must be positive");
  const std::vector<Subset> labels = k_subsets(n, 2 * k);
  auto index_of = [&labels](Subset a) {
    auto it = std::lower_bound(labels.begin(), labels.end(), a);
    return static_cast<int>(it - labels.begin());
  };
  std::vector<std::vector<int>> blocks;
  const int np = static_cast<int>(labels.size());
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      const Subset a = labels[static_cast<std::size_t>(i)], b = labels[static_cast<std::size_t>(j)];
      if ((a & b).card() != k) continue;
      std::vector<int> blk{i, j, index_of(a ^ b)};
      std::sort(blk.begin(), blk.end());
      blocks.push_back(std::move(blk));
    }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return SylvesterSystem{n, k, IncidenceStructure(labels, std::move(blocks))};
}

/// Replaces every point label by its complement.  For s = 3 the result is
/// the Sylvester system on the same ground set.
inline IncidenceStructure kappa_relabel(const CRConfiguration& c) {
  if (c.params().s != 3) throw ParameterError("complement relabeling applies to s = 3 only");
  std::vector<Subset> labels;
  labels.reserve(static_cast<std::size_t>(c.structure().point_count()));
  for (Subset a : c.structure().labels()) labels.push_back(complement(a, c.params().n));
  return IncidenceStructure(std::move(labels), c.structure().blocks());
}

/// Simple undirected graph on labeled vertices.
struct Graph {
  std::vector<Subset> labels;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Kneser graph: vertices are the k-subsets of {0,...,n-1}, edges the
/// disjoint pairs.  Regular of degree C(n-k, k).
inline Graph kneser_graph(int n, int k) {
  Graph g;
  g.labels = k_subsets(n, k);
  const int np = static_cast<int>(g.labels.size());
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j)
      if (g.labels[static_cast<std::size_t>(i)].disjoint(g.labels[static_cast<std::size_t>(j)]))
        g.edges.emplace_back(i, j);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// The joinability relation on points: an edge for every pair lying on a
/// common block.  For m = 0 this is the Kneser graph KG_{ks,k}.
inline Graph joinability_graph(const CRConfiguration& c) {
  if (c.params().m() != 0) throw ParameterError("joinability/Kneser identification requires m = 0");
  Graph g;
  g.labels = c.structure().labels();
  const int np = c.structure().point_count();
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      const int pts[2] = {i, j};
      if (c.structure().on_common_block(pts)) g.edges.emplace_back(i, j);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Adjacency of k-sets: true iff |a ∩ b| = k-1.
inline bool adjacent(Subset a, Subset b, int k) {
  if (a.card() != k || b.card() != k) throw ParameterError("both sets must have cardinality k");
  return (a & b).card() == k - 1;
}

namespace detail {

// Every joinedness condition applies to a set of distinct points, so the
// quantified points, the witnesses c, and the endpoints never coincide.
inline bool definable_tuple_search(const IncidenceStructure& s, int slots, std::vector<int>& tuple,
                                   int ia, int ib, long long target) {
  if (static_cast<int>(tuple.size()) == slots) {
    long long count = 0;
    std::vector<int> probe = tuple;
    probe.push_back(0);
    for (int c = 0; c < s.point_count(); ++c) {
      if (c == ia || c == ib) continue;
      if (std::find(tuple.begin(), tuple.end(), c) != tuple.end()) continue;
      probe.back() = c;
      if (!s.on_common_block(probe)) continue;
      const int with_a[2] = {ia, c};
      const int with_b[2] = {ib, c};
      if (s.on_common_block(with_a) && s.on_common_block(with_b)) ++count;
    }
    return count == target;
  }
  // the quantifier ranges over sets, so candidates ascend
  const int start = tuple.empty() ? 0 : tuple.back() + 1;
  for (int cand = start; cand < s.point_count(); ++cand) {
    if (cand == ia || cand == ib) continue;
    // the joinedness conditions only shrink as the tuple grows
    std::vector<int> pa = tuple, pb = tuple;
    pa.push_back(cand);
    pa.push_back(ia);
    pb.push_back(cand);
    pb.push_back(ib);
    if (!s.on_common_block(pa) || !s.on_common_block(pb)) continue;
    tuple.push_back(cand);
    if (definable_tuple_search(s, slots, tuple, ia, ib, target)) {
      tuple.pop_back();
      return true;
    }
    tuple.pop_back();
  }
  return false;
}

}  // namespace detail

/// The same adjacency evaluated purely inside the incidence structure:
/// a and b are adjacent iff they are not joined and there exist points
/// a_4,...,a_s joined with each of them such that exactly C(2k-1,k) points c
/// are joined with a_4,...,a_s, with a, and with b.  For s = 3 the
/// quantifier block is empty and "joined with the empty tuple" degenerates
/// to lying on some block.
inline bool adjacent_definable(const CRConfiguration& c, Subset a, Subset b) {
  if (c.params().m() != 0) throw ParameterError("incidence-definable adjacency requires m = 0");
  const int ia = c.point_index(a), ib = c.point_index(b);
  if (ia < 0 || ib < 0) throw ParameterError("arguments must be points of the configuration");
  const IncidenceStructure& s = c.structure();
  const int pair[2] = {ia, ib};
  if (s.on_common_block(pair)) return false;
  const int one_a[1] = {ia};
  const int one_b[1] = {ib};
  if (!s.on_common_block(one_a) || !s.on_common_block(one_b)) return false;
  const BigInt target = binomial(2 * c.params().k - 1, c.params().k);
  std::vector<int> tuple;
  return detail::definable_tuple_search(s, c.params().s - 3, tuple, ia, ib,
                                        target.convert_to<long long>());
}

/// Exhaustive verification of the three block-intersection properties of the
/// s = 4, m = 0 structures.
struct WeakChainReport {
  bool meeting_triangles_close = true;   // pairwise-meeting block triples pick collinear points
  bool double_meets_degenerate = true;   // |B0∩B1| = |B0∩B2| = 2 forces B1 = B2 or B1∩B2 ⊆ B0
  bool tangency_always_escapes = true;   // B0∩B1 = {a}, b ∈ B1\{a} admits B2 ∋ b with B0∩B2 = {a}
  long long triangle_choices = 0;
  long long double_meet_pairs = 0;
  long long tangency_cases = 0;

  bool all() const { return meeting_triangles_close && double_meets_degenerate && tangency_always_escapes; }
};

inline WeakChainReport check_weak_chain_properties(const CRConfiguration& c) {
  if (c.params().s != 4 || c.params().m() != 0)
    throw ParameterError("weak chain checks apply to s = 4, m = 0");
  const IncidenceStructure& s = c.structure();
  const int b = s.block_count();
  WeakChainReport rep;

  std::vector<Bitset> meets(static_cast<std::size_t>(b), Bitset(static_cast<std::size_t>(b)));
  for (int j = 0; j < b; ++j) {
    for (int p : s.block(j)) {
      const Bitset& through = s.blocks_through(p);
      meets[static_cast<std::size_t>(j)] |= through;
    }
    meets[static_cast<std::size_t>(j)].reset(static_cast<std::size_t>(j));
  }

  std::vector<int> common12, common23, common31;
  auto common_points = [&s](int j1, int j2, std::vector<int>& out) {
    out.clear();
    Bitset tmp = s.block_points(j1);
    tmp &= s.block_points(j2);
    for (std::size_t p = tmp.find_first(); p != Bitset::npos; p = tmp.find_next(p))
      out.push_back(static_cast<int>(p));
  };

  Bitset both(static_cast<std::size_t>(b));
  for (int j1 = 0; j1 < b; ++j1) {
    for (std::size_t j2 = meets[static_cast<std::size_t>(j1)].find_first(); j2 != Bitset::npos;
         j2 = meets[static_cast<std::size_t>(j1)].find_next(j2)) {
      if (static_cast<int>(j2) <= j1) continue;
      both = meets[static_cast<std::size_t>(j1)];
      both &= meets[j2];
      common_points(j1, static_cast<int>(j2), common12);
      for (std::size_t j3 = both.find_first(); j3 != Bitset::npos; j3 = both.find_next(j3)) {
        if (j3 <= j2) continue;
        common_points(static_cast<int>(j2), static_cast<int>(j3), common23);
        common_points(static_cast<int>(j3), j1, common31);
        for (int a1 : common12)
          for (int a2 : common23)
            for (int a3 : common31) {
              ++rep.triangle_choices;
              std::vector<int> pts{a1, a2, a3};
              std::sort(pts.begin(), pts.end());
              pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
              if (!s.on_common_block(pts)) rep.meeting_triangles_close = false;
            }
      }
    }
  }

  std::vector<int> two_meets, inter;
  for (int j0 = 0; j0 < b; ++j0) {
    two_meets.clear();
    for (std::size_t j = meets[static_cast<std::size_t>(j0)].find_first(); j != Bitset::npos;
         j = meets[static_cast<std::size_t>(j0)].find_next(j)) {
      common_points(j0, static_cast<int>(j), inter);
      if (inter.size() == 2) two_meets.push_back(static_cast<int>(j));
    }
    for (std::size_t x = 0; x < two_meets.size(); ++x)
      for (std::size_t y = x + 1; y < two_meets.size(); ++y) {
        ++rep.double_meet_pairs;
        common_points(two_meets[x], two_meets[y], inter);
        for (int p : inter)
          if (!s.block_points(j0).test(static_cast<std::size_t>(p))) rep.double_meets_degenerate = false;
      }
  }

  for (int j0 = 0; j0 < b; ++j0)
    for (std::size_t j1 = meets[static_cast<std::size_t>(j0)].find_first(); j1 != Bitset::npos;
         j1 = meets[static_cast<std::size_t>(j0)].find_next(j1)) {
      common_points(j0, static_cast<int>(j1), inter);
      if (inter.size() != 1) continue;
      const int a = inter.front();
      for (int pb : s.block(static_cast<int>(j1))) {
        if (pb == a) continue;
        ++rep.tangency_cases;
        bool found = false;
        const Bitset& through = s.blocks_through(pb);
        for (std::size_t j2 = through.find_first(); j2 != Bitset::npos; j2 = through.find_next(j2)) {
          if (j2 == j1) continue;
          common_points(j0, static_cast<int>(j2), inter);
          if (inter.size() == 1 && inter.front() == a) {
            found = true;
            break;
          }
        }
        if (!found) rep.tangency_always_escapes = false;
      }
    }

  return rep;
}

/// The point permutation induced by a ground-set permutation.  Always an
/// automorphism of the configuration.
inline std::vector<int> induced_map(std::span<const int> sigma, const CRConfiguration& c) {
  const int n = c.params().n;
  if (static_cast<int>(sigma.size()) != n) throw ParameterError("permutation length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw ParameterError("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(c.structure().point_count()));
  for (Subset a : c.structure().labels()) {
    std::uint64_t img = 0;
    for (int e : a.elements()) img |= std::uint64_t{1} << sigma[static_cast<std::size_t>(e)];
    const int idx = c.point_index(Subset(img));
    if (idx < 0) throw CheckFailed("induced image is not a point");
    out.push_back(idx);
  }
  return out;
}

}  // namespace cremona
