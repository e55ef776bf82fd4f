#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cremona/errors.hpp"
#include "cremona/subsets.hpp"

namespace cremona {

using Bitset = boost::dynamic_bitset<>;

/// Configuration parameters (nu, r, b, s): nu points each on r blocks,
/// b blocks each of s points.  Flag double counting forces nu*r == b*s.
struct ConfigurationParams {
  BigInt points;      // nu
  BigInt point_rank;  // r
  BigInt blocks;      // b
  BigInt block_size;  // s

  friend bool operator==(const ConfigurationParams&, const ConfigurationParams&) = default;
};

/// A finite incidence structure: labeled points plus blocks given as sets of
/// point indices.  Construction canonicalizes: point labels are sorted
/// ascending, each block is sorted, and the block family is sorted.
/// Duplicate points or blocks are rejected.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  IncidenceStructure(std::vector<Subset> labels, std::vector<std::vector<int>> blocks) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)]; });
    std::vector<int> where(static_cast<std::size_t>(n));
    labels_.reserve(labels.size());
    for (int pos = 0; pos < n; ++pos) {
      labels_.push_back(labels[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]);
      where[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    }
    for (int i = 0; i + 1 < n; ++i)
      if (labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(i + 1)])
        throw ParameterError("duplicate point label " + labels_[static_cast<std::size_t>(i)].to_string());

    blocks_.reserve(blocks.size());
    for (auto& blk : blocks) {
      std::vector<int> mapped;
      mapped.reserve(blk.size());
      for (int p : blk) {
        if (p < 0 || p >= n) throw ParameterError("block refers to invalid point index " + std::to_string(p));
        mapped.push_back(where[static_cast<std::size_t>(p)]);
      }
      std::sort(mapped.begin(), mapped.end());
      for (std::size_t i = 0; i + 1 < mapped.size(); ++i)
        if (mapped[i] == mapped[i + 1]) throw ParameterError("block contains a repeated point");
      blocks_.push_back(std::move(mapped));
    }
    std::sort(blocks_.begin(), blocks_.end());
    for (std::size_t j = 0; j + 1 < blocks_.size(); ++j)
      if (blocks_[j] == blocks_[j + 1]) throw ParameterError("duplicate block");
    build_index();
  }

  int point_count() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Subset>& labels() const { return labels_; }
  Subset label(int p) const { return labels_.at(static_cast<std::size_t>(p)); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int j) const { return blocks_.at(static_cast<std::size_t>(j)); }

  /// Index of the point with the given label, or -1.
  int point_index(Subset label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
  }

  bool has_block(const std::vector<int>& sorted_block) const {
    return std::binary_search(blocks_.begin(), blocks_.end(), sorted_block);
  }

  /// Blocks through a point, as a bitset over block indices.
  const Bitset& blocks_through(int p) const { return blocks_through_.at(static_cast<std::size_t>(p)); }

  /// Points of a block, as a bitset over point indices.
  const Bitset& block_points(int j) const { return block_points_.at(static_cast<std::size_t>(j)); }

  /// True when some block contains all the listed points (with repeats in
  /// the list collapsing).  An empty list asks whether any block exists.
  bool on_common_block(std::span<const int> pts) const {
    if (blocks_.empty()) return false;
    if (pts.empty()) return true;
    Bitset common = blocks_through(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) common &= blocks_through(pts[i]);
    return common.any();
  }

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.labels_ == b.labels_ && a.blocks_ == b.blocks_;
  }

 private:
  void build_index() {
    blocks_through_.assign(labels_.size(), Bitset(blocks_.size()));
    block_points_.assign(blocks_.size(), Bitset(labels_.size()));
    for (std::size_t j = 0; j < blocks_.size(); ++j)
      for (int p : blocks_[j]) {
        blocks_through_[static_cast<std::size_t>(p)].set(j);
        block_points_[j].set(static_cast<std::size_t>(p));
      }
  }

  std::vector<Subset> labels_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Bitset> blocks_through_;
  std::vector<Bitset> block_points_;
};

/// Checks point- and block-uniformity and returns (nu, r, b, s).
/// A structure with no blocks yields r = b = s = 0.
inline ConfigurationParams verify_configuration(const IncidenceStructure& s) {
  if (s.point_count() == 0) throw ParameterError("empty structure");
  long long rank0 = -1;
  for (int p = 0; p < s.point_count(); ++p) {
    const long long r = static_cast<long long>(s.blocks_through(p).count());
    if (rank0 < 0) rank0 = r;
    if (r != rank0)
      throw ParameterError("point " + std::to_string(p) + " has rank " + std::to_string(r) +
                           " but point 0 has rank " + std::to_string(rank0));
  }
  long long size0 = -1;
  for (int j = 0; j < s.block_count(); ++j) {
    const long long sz = static_cast<long long>(s.block(j).size());
    if (size0 < 0) size0 = sz;
    if (sz != size0)
      throw ParameterError("block " + std::to_string(j) + " has size " + std::to_string(sz) +
                           " but block 0 has size " + std::to_string(size0));
  }
  ConfigurationParams out{BigInt(s.point_count()), BigInt(std::max(rank0, 0LL)),
                          BigInt(s.block_count()), BigInt(std::max(size0, 0LL))};
  if (out.points * out.point_rank != out.blocks * out.block_size)
    throw CheckFailed("flag double counting violated");
  return out;
}

/// Distribution of |B1 ∩ B2| over all unordered pairs of distinct blocks.
inline std::map<int, long long> intersection_profile(const IncidenceStructure& s) {
  std::map<int, long long> profile;
  const int b = s.block_count();
  if (b == 0) return profile;
  Bitset tmp(static_cast<std::size_t>(s.point_count()));
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) {
      tmp = s.block_points(i);
      tmp &= s.block_points(j);
      ++profile[static_cast<int>(tmp.count())];
    }
  return profile;
}

/// The substructure on the points collinear with `a`: points are the other
/// points of the blocks through `a`, blocks are those blocks with `a`
/// removed.
inline IncidenceStructure neighborhood(const IncidenceStructure& s, int a) {
  if (a < 0 || a >= s.point_count()) throw ParameterError("invalid point index");
  const Bitset& through = s.blocks_through(a);
  std::vector<int> pts;
  for (std::size_t j = through.find_first(); j != Bitset::npos; j = through.find_next(j))
    for (int p : s.block(static_cast<int>(j)))
      if (p != a) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<int> newindex(static_cast<std::size_t>(s.point_count()), -1);
  std::vector<Subset> labels;
  labels.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    newindex[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);
    labels.push_back(s.label(pts[i]));
  }
  std::vector<std::vector<int>> blocks;
  for (std::size_t j = through.find_first(); j != Bitset::npos; j = through.find_next(j)) {
    std::vector<int> blk;
    for (int p : s.block(static_cast<int>(j)))
      if (p != a) blk.push_back(newindex[static_cast<std::size_t>(p)]);
    blocks.push_back(std::move(blk));
  }
  return IncidenceStructure(std::move(labels), std::move(blocks));
}

/// Bipartite point-block incidence graph.  Vertices 0..nu-1 are points,
/// nu..nu+b-1 are blocks.
struct LeviGraph {
  int point_count = 0;
  int block_count = 0;
  std::vector<std::pair<int, int>> edges;  // (point, block vertex)

  int vertex_count() const { return point_count + block_count; }
};

inline LeviGraph levi_graph(const IncidenceStructure& s) {
  LeviGraph g;
  g.point_count = s.point_count();
  g.block_count = s.block_count();
  for (int j = 0; j < s.block_count(); ++j)
    for (int p : s.block(j)) g.edges.emplace_back(p, g.point_count + j);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// True iff the point permutation maps the block family onto itself.
inline bool is_automorphism(const IncidenceStructure& s, std::span<const int> perm) {
  const int n = s.point_count();
  if (static_cast<int>(perm.size()) != n) throw ParameterError("permutation length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw ParameterError("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> mapped;
  for (const auto& blk : s.blocks()) {
    mapped.clear();
    mapped.reserve(blk.size());
    for (int p : blk) mapped.push_back(perm[static_cast<std::size_t>(p)]);
    std::sort(mapped.begin(), mapped.end());
    if (!s.has_block(mapped)) return false;
  }
  return true;
}

}  // namespace cremona
