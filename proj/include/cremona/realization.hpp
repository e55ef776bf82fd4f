#pragma once

#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/cremona_richmond.hpp"
#include "cremona/isomorphism.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

/// The standard projective frame q_0,...,q_{n-1} in PG(n-2): coordinate j
/// holds the coefficient of the basis vector e_{j+1}, q_i = <e_i> for
/// i >= 1, and q_0 = <e_1 + ... + e_{n-1}>.  Any n-1 of the frame points are
/// independent.
template <class Field>
class Frame {
 public:
  using Element = typename Field::Element;

  Frame(const Field& f, int n) : field_(f), n_(n) {
    if (n < 3 || n > max_ground_set) throw ParameterError("frame needs 3 <= n <= 64");
  }

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return n_ - 1; }

  std::vector<Element> frame_vector(int i) const {
    if (i < 0 || i >= n_) throw ParameterError("frame index out of range");
    std::vector<Element> v(static_cast<std::size_t>(dim()), field_.zero());
    if (i == 0)
      for (auto& x : v) x = field_.one();
    else
      v[static_cast<std::size_t>(i - 1)] = field_.one();
    return v;
  }

  /// Canonical coordinates of the point Q_a ∩ Q_{κ(a)}: the sum of e_i over
  /// a when 0 ∉ a, and over the complement otherwise.  Both members of a
  /// complementary pair produce the identical row.
  std::vector<Element> point_vector(Subset a) const {
    if (!a.subset_of(Subset::full(n_))) throw ParameterError("label not within the ground set");
    if (a.empty() || a == Subset::full(n_))
      throw ParameterError("point map is defined on nonempty proper subsets only");
    const Subset support = a.contains(0) ? complement(a, n_) : a;
    std::vector<Element> v(static_cast<std::size_t>(dim()), field_.zero());
    for (int e : support.elements()) v[static_cast<std::size_t>(e - 1)] = field_.one();
    return v;
  }

  /// Q_u, the span of the frame points indexed by u.
  Subspace<Field> frame_span(Subset u) const {
    if (!u.subset_of(Subset::full(n_))) throw ParameterError("index set not within the ground set");
    std::vector<std::vector<Element>> rows;
    for (int i : u.elements()) rows.push_back(frame_vector(i));
    return Subspace<Field>::span(field_, dim(), rows);
  }

  /// The intersection route to the same point; always of vector rank one.
  Subspace<Field> point_by_intersection(Subset a) const {
    if (a.empty() || a == Subset::full(n_))
      throw ParameterError("point map is defined on nonempty proper subsets only");
    return intersect(frame_span(a), frame_span(complement(a, n_)));
  }

 private:
  Field field_;
  int n_;
};

template <class Field>
Frame<Field> build_frame(const Field& f, int n) {
  return Frame<Field>(f, n);
}

template <class Field>
bool projectively_equal(const Field& f, const std::vector<typename Field::Element>& u,
                        const std::vector<typename Field::Element>& v) {
  if (u.size() != v.size()) return false;
  std::size_t lead = u.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!f.is_zero(u[i]) || !f.is_zero(v[i])) {
      lead = i;
      break;
    }
  if (lead == u.size()) return true;  // both zero
  if (f.is_zero(u[lead]) || f.is_zero(v[lead])) return false;
  const auto ratio = f.div(v[lead], u[lead]);
  for (std::size_t i = lead; i < u.size(); ++i)
    if (!f.eq(v[i], f.mul(ratio, u[i]))) return false;
  return true;
}

/// Scales a row so its leading nonzero entry is one.
template <class Field>
std::vector<typename Field::Element> normalize_row(const Field& f,
                                                   std::vector<typename Field::Element> v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) {
      const auto s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      return v;
    }
  return v;
}

/// Span of the images of a block's points.
template <class Field>
Subspace<Field> block_span(const Frame<Field>& fr, const std::vector<Subset>& labels) {
  std::vector<std::vector<typename Field::Element>> rows;
  rows.reserve(labels.size());
  for (Subset a : labels) rows.push_back(fr.point_vector(a));
  return Subspace<Field>::span(fr.field(), fr.dim(), rows);
}

/// For a block of the m = 0 configuration, the subspace spanned by the sums
/// over the s-1 parts avoiding 0.  Computed alongside the plain span of the
/// block's point images; the two must agree.
template <class Field>
Subspace<Field> block_subspace(const Frame<Field>& fr, const std::vector<Subset>& labels, int k) {
  Subset all;
  for (Subset a : labels) {
    if (a.card() != k) throw ParameterError("block is not made of k-sets; use the general span");
    if (!all.disjoint(a)) throw ParameterError("block parts are not disjoint");
    all = all | a;
  }
  if (all != Subset::full(fr.n()))
    throw ParameterError("block does not partition the ground set; use the general span");
  std::vector<std::vector<typename Field::Element>> rows;
  for (Subset a : labels)
    if (!a.contains(0)) rows.push_back(fr.point_vector(a));
  const auto direct = Subspace<Field>::span(fr.field(), fr.dim(), rows);
  const auto via_points = block_span(fr, labels);
  if (!(direct == via_points)) throw CheckFailed("block subspace characterization mismatch");
  return direct;
}

/// Projective dimension of the intersection of the subspaces Q_{κ(a_i)} for
/// pairwise disjoint k-sets a_i in a partitionable ground set (n = ks).
/// Must equal k(s-j) + j - 2; a mismatch throws.
template <class Field>
int intersection_dim_check(const Frame<Field>& fr, const std::vector<Subset>& ksets) {
  if (ksets.empty()) throw ParameterError("need at least one k-set");
  const int k = ksets.front().card();
  if (k < 1) throw ParameterError("k-sets must be nonempty");
  Subset seen;
  for (Subset a : ksets) {
    if (a.card() != k) throw ParameterError("sets must share the same cardinality");
    if (!seen.disjoint(a)) throw ParameterError("sets must be pairwise disjoint");
    seen = seen | a;
  }
  if (fr.n() % k != 0) throw ParameterError("ground set size must be a multiple of k");
  const int s = fr.n() / k;
  const int j = static_cast<int>(ksets.size());

  Subspace<Field> u = fr.frame_span(complement(ksets.front(), fr.n()));
  for (std::size_t i = 1; i < ksets.size(); ++i)
    u = intersect(u, fr.frame_span(complement(ksets[i], fr.n())));
  const int dim = u.projective_dim();
  if (dim != k * (s - j) + j - 2)
    throw CheckFailed("intersection dimension " + std::to_string(dim) + " differs from " +
                      std::to_string(k * (s - j) + j - 2));
  return dim;
}

/// Outcome of realizing a configuration through the point map.
struct BlockRealization {
  std::vector<int> points;
  int vector_rank = 0;
  int projective_dim = -1;
  std::vector<std::vector<std::string>> basis;  // canonical basis rows, exact scalars as strings
};

struct RealizationReport {
  FieldSpec field;
  int n = 0, k = 0, s = 0, m = 0;
  int expected_projective_dim = 0;  // s - 2
  std::vector<BlockRealization> blocks;
  bool all_blocks_expected_dim = true;
  /// Image points inside a block subspace without being the image of one of
  /// its points: pairs (point index, block index).
  std::vector<std::pair<int, int>> incidence_violations;
  /// Distinct point labels mapped to the same projective point.
  std::vector<std::pair<int, int>> image_collisions;
  bool distinct_subspaces = true;
  bool embedding = false;
  long long field_characteristic = 0;
  bool char_divides_s_minus_1 = false;

  std::string verdict() const { return embedding ? "embedding" : "not-an-embedding"; }
};

namespace detail {

template <class Field>
RealizationReport verify_realization_impl(const CRConfiguration& c, const Field& f) {
  const int n = c.params().n, k = c.params().k, s = c.params().s, m = c.params().m();
  const Frame<Field> fr(f, n);
  const IncidenceStructure& st = c.structure();
  const int np = st.point_count();

  using Row = std::vector<typename Field::Element>;
  std::vector<Row> reps;
  reps.reserve(static_cast<std::size_t>(np));
  for (int i = 0; i < np; ++i) reps.push_back(fr.point_vector(st.label(i)));

  RealizationReport rep;
  rep.field = f.spec();
  rep.n = n;
  rep.k = k;
  rep.s = s;
  rep.m = m;
  rep.expected_projective_dim = s - 2;
  rep.field_characteristic = f.characteristic();
  rep.char_divides_s_minus_1 = rep.field_characteristic != 0 && (s - 1) % rep.field_characteristic == 0;

  // Fibers of the point map: images shared by several labels.
  std::map<Row, std::vector<int>> fibers;
  for (int i = 0; i < np; ++i) fibers[reps[static_cast<std::size_t>(i)]].push_back(i);
  for (const auto& [row, members] : fibers)
    for (std::size_t i = 1; i < members.size(); ++i)
      rep.image_collisions.emplace_back(members.front(), members[i]);

  std::set<std::pair<int, std::vector<typename Field::Element>>> seen_subspaces;
  for (int j = 0; j < st.block_count(); ++j) {
    std::vector<Row> rows;
    std::set<Row> block_images;
    for (int p : st.block(j)) {
      rows.push_back(reps[static_cast<std::size_t>(p)]);
      block_images.insert(reps[static_cast<std::size_t>(p)]);
    }
    const auto u = Subspace<Field>::span(f, fr.dim(), rows);

    BlockRealization br;
    br.points = st.block(j);
    br.vector_rank = u.rank();
    br.projective_dim = u.projective_dim();
    for (int r = 0; r < u.rank(); ++r) {
      std::vector<std::string> row;
      for (int col = 0; col < fr.dim(); ++col) row.push_back(f.str(u.basis().at(r, col)));
      br.basis.push_back(std::move(row));
    }
    if (br.projective_dim != rep.expected_projective_dim) rep.all_blocks_expected_dim = false;

    for (const auto& [row, members] : fibers) {
      if (block_images.count(row)) continue;
      if (u.contains(row)) rep.incidence_violations.emplace_back(members.front(), j);
    }

    std::vector<typename Field::Element> flat;
    for (int r = 0; r < u.rank(); ++r)
      for (int col = 0; col < fr.dim(); ++col) flat.push_back(u.basis().at(r, col));
    if (!seen_subspaces.emplace(u.rank(), std::move(flat)).second) rep.distinct_subspaces = false;

    rep.blocks.push_back(std::move(br));
  }

  // For m = 0 the point map is injective and blocks must land on distinct
  // (s-2)-subspaces avoiding all other points.  For m > 0 only the block
  // dimensions are claimed, governed by whether the characteristic divides
  // s - 1; collisions and memberships are still recorded above.
  if (m == 0)
    rep.embedding = rep.all_blocks_expected_dim && rep.incidence_violations.empty() && rep.distinct_subspaces;
  else
    rep.embedding = rep.all_blocks_expected_dim;
  return rep;
}

}  // namespace detail

inline RealizationReport verify_realization(const CRConfiguration& c, const FieldSpec& fs) {
  return with_field(fs, [&](auto field) { return detail::verify_realization_impl(c, field); });
}

/// True when, for every block, every proper subset of its image points is
/// projectively independent.
inline bool proper_subset_independence(const CRConfiguration& c, const FieldSpec& fs) {
  return with_field(fs, [&](auto field) -> bool {
    using Field = decltype(field);
    const Frame<Field> fr(field, c.params().n);
    const IncidenceStructure& st = c.structure();
    for (int j = 0; j < st.block_count(); ++j) {
      std::vector<std::vector<typename Field::Element>> rows;
      std::set<std::vector<typename Field::Element>> dedup;
      for (int p : st.block(j)) {
        auto r = fr.point_vector(st.label(p));
        if (dedup.insert(r).second) rows.push_back(std::move(r));
      }
      const int t = static_cast<int>(rows.size());
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << t); ++mask) {
        std::vector<std::vector<typename Field::Element>> sub;
        for (int i = 0; i < t; ++i)
          if ((mask >> i) & 1u) sub.push_back(rows[static_cast<std::size_t>(i)]);
        if (rank_of(Matrix<Field>::from_rows(field, fr.dim(), sub)) != static_cast<int>(sub.size()))
          return false;
      }
    }
    return true;
  });
}

/// Ranks of Q_A against the span of the k-subset points inside A.  When the
/// characteristic does not divide k and |A| > 2k the two spans coincide.
struct SpanComparison {
  int frame_rank = 0;   // rank of Q_A
  int subset_rank = 0;  // rank of the span of { p_a : a ⊆ A, |a| = k }
  bool equal = false;
};

template <class Field>
SpanComparison compare_spans(const Frame<Field>& fr, Subset a_set, int k) {
  if (a_set.empty() || a_set == Subset::full(fr.n()))
    throw ParameterError("A must be a nonempty proper subset");
  if (k < 1 || k > a_set.card()) throw ParameterError("k out of range for |A|");
  const auto q = fr.frame_span(a_set);
  std::vector<std::vector<typename Field::Element>> rows;
  for (Subset a : k_subsets_of(a_set, k)) rows.push_back(fr.point_vector(a));
  const auto sub = Subspace<Field>::span(fr.field(), fr.dim(), rows);
  return SpanComparison{q.rank(), sub.rank(), q == sub};
}

/// The invertible matrix carrying the frame onto its permuted copy, hence
/// mapping every point p_a onto p_{σ(a)}.
template <class Field>
Matrix<Field> collineation_from_permutation(const Frame<Field>& fr, std::span<const int> sigma) {
  const Field& f = fr.field();
  const int n = fr.n();
  if (static_cast<int>(sigma.size()) != n) throw ParameterError("permutation length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw ParameterError("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }

  Matrix<Field> mat(f, fr.dim(), fr.dim());
  for (int i = 1; i < n; ++i) {
    const int img = sigma[static_cast<std::size_t>(i)];
    if (img == 0) {
      // this basis vector goes to the diagonal frame point, with the scaling
      // forced by the image of q_0
      for (int cidx = 0; cidx < fr.dim(); ++cidx) mat.at(i - 1, cidx) = f.neg(f.one());
    } else {
      mat.at(i - 1, img - 1) = f.one();
    }
  }
  for (int i = 0; i < n; ++i)
    if (!projectively_equal(f, row_times_matrix(fr.frame_vector(i), mat),
                            fr.frame_vector(sigma[static_cast<std::size_t>(i)])))
      throw CheckFailed("collineation does not carry the frame correctly");
  if (f.is_zero(determinant(mat))) throw CheckFailed("collineation matrix is singular");
  return mat;
}

/// A family of distinct projective points with subset labels; labels are the
/// smallest representative of each point-map fiber (fewest elements, then
/// smallest mask), sorted ascending.
template <class Field>
struct PointFamily {
  std::vector<Subset> labels;
  std::vector<std::vector<typename Field::Element>> reps;

  int size() const { return static_cast<int>(labels.size()); }
};

template <class Field>
PointFamily<Field> points_for(const Frame<Field>& fr, const std::vector<Subset>& labels) {
  std::map<std::vector<typename Field::Element>, Subset> best;
  for (Subset a : labels) {
    auto rep = fr.point_vector(a);
    auto it = best.find(rep);
    if (it == best.end()) {
      best.emplace(std::move(rep), a);
    } else {
      const Subset cur = it->second;
      if (a.card() < cur.card() || (a.card() == cur.card() && a < cur)) it->second = a;
    }
  }
  std::vector<std::pair<Subset, std::vector<typename Field::Element>>> items;
  for (auto& [rep, label] : best) items.emplace_back(label, rep);
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  PointFamily<Field> fam;
  for (auto& [label, rep] : items) {
    fam.labels.push_back(label);
    fam.reps.push_back(rep);
  }
  return fam;
}

/// All images of nonempty proper subsets of {0,...,n-1}.
template <class Field>
PointFamily<Field> proper_subset_points(const Frame<Field>& fr) {
  if (fr.n() > 20) throw ParameterError("full proper-subset family limited to n <= 20");
  std::vector<Subset> labels;
  const std::uint64_t full = Subset::full(fr.n()).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) labels.push_back(Subset(bits));
  return points_for(fr, labels);
}

/// A minimal dependent subfamily: its span has rank below its size while all
/// proper subfamilies are independent.  Rank-2 triples are collinear triples.
struct Dependency {
  std::vector<int> members;  // indices into the point family, ascending
  int rank = 0;
};

template <class Field>
std::vector<Dependency> enumerate_dependencies(const Frame<Field>& fr, const PointFamily<Field>& fam,
                                               int max_size) {
  if (max_size < 3) throw ParameterError("max_size must be at least 3");
  {
    std::set<std::vector<typename Field::Element>> distinct(fam.reps.begin(), fam.reps.end());
    if (static_cast<int>(distinct.size()) != fam.size())
      throw ParameterError("family must consist of distinct points");
  }
  std::vector<Dependency> deps;
  const int n = fam.size();
  std::vector<int> idx;
  for (int t = 3; t <= std::min(max_size, n); ++t) {
    idx.assign(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      bool contains_smaller = false;
      for (const Dependency& d : deps) {
        if (static_cast<int>(d.members.size()) >= t) break;  // deps are grouped by size
        if (std::includes(idx.begin(), idx.end(), d.members.begin(), d.members.end())) {
          contains_smaller = true;
          break;
        }
      }
      if (!contains_smaller) {
        std::vector<std::vector<typename Field::Element>> rows;
        for (int i : idx) rows.push_back(fam.reps[static_cast<std::size_t>(i)]);
        const int r = rank_of(Matrix<Field>::from_rows(fr.field(), fr.dim(), rows));
        if (r < t) deps.push_back(Dependency{idx, r});
      }
      int i = t - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return deps;
}

/// Dependency scan of the full point family of a frame, with the collinear
/// triples collected into an incidence structure.
struct DependencyScan {
  FieldSpec field;
  int n = 0;
  int max_size = 3;
  std::vector<Subset> labels;
  std::vector<Dependency> dependencies;
  long long partition_triples = 0;  // labels splitting the ground set
  long long union_triples = 0;      // one label the disjoint union of the others
  long long triangle_triples = 0;   // three 2-sets on a common 3-set
  long long other_triples = 0;
  IncidenceStructure collinear;     // points plus the collinear triples

  long long collinear_triples() const {
    return partition_triples + union_triples + triangle_triples + other_triples;
  }
};

inline DependencyScan scan_dependencies(int n, const FieldSpec& fs, int max_size = 3) {
  return with_field(fs, [&](auto field) {
    using Field = decltype(field);
    const Frame<Field> fr(field, n);
    const auto fam = proper_subset_points(fr);
    DependencyScan scan;
    scan.field = fs;
    scan.n = n;
    scan.max_size = max_size;
    scan.labels = fam.labels;
    scan.dependencies = enumerate_dependencies(fr, fam, max_size);

    const Subset full = Subset::full(n);
    std::vector<std::vector<int>> triples;
    for (const Dependency& d : scan.dependencies) {
      if (d.members.size() != 3) continue;
      triples.push_back(d.members);
      const Subset x = fam.labels[static_cast<std::size_t>(d.members[0])];
      const Subset y = fam.labels[static_cast<std::size_t>(d.members[1])];
      const Subset z = fam.labels[static_cast<std::size_t>(d.members[2])];
      const bool disjoint = x.disjoint(y) && y.disjoint(z) && x.disjoint(z);
      if (disjoint && (x | y | z) == full) {
        ++scan.partition_triples;
      } else if (x.card() == 2 && y.card() == 2 && z.card() == 2 && (x | y | z).card() == 3) {
        ++scan.triangle_triples;
      } else if ((x.disjoint(y) && (x | y) == z) || (x.disjoint(z) && (x | z) == y) ||
                 (y.disjoint(z) && (y | z) == x)) {
        ++scan.union_triples;
      } else {
        ++scan.other_triples;
      }
    }
    scan.collinear = IncidenceStructure(fam.labels, triples);
    return scan;
  });
}

/// Distinct point ranks in the collinear-triple structure, keyed by label
/// cardinality.
inline std::map<int, std::set<long long>> collinear_rank_profile(const DependencyScan& scan) {
  std::map<int, std::set<long long>> profile;
  for (int p = 0; p < scan.collinear.point_count(); ++p)
    profile[scan.collinear.label(p).card()].insert(
        static_cast<long long>(scan.collinear.blocks_through(p).count()));
  return profile;
}

/// The Desargues configuration as an abstract incidence structure: points
/// are the 2-subsets of a 5-set, lines the triples {ij, jl, il}.
inline IncidenceStructure desargues_configuration() {
  const std::vector<Subset> labels = k_subsets(5, 2);
  auto index_of = [&labels](Subset a) {
    auto it = std::lower_bound(labels.begin(), labels.end(), a);
    return static_cast<int>(it - labels.begin());
  };
  std::vector<std::vector<int>> blocks;
  for (Subset t : k_subsets(5, 3)) {
    std::vector<int> blk;
    for (Subset pair : k_subsets_of(t, 2)) blk.push_back(index_of(pair));
    blocks.push_back(std::move(blk));
  }
  return IncidenceStructure(labels, std::move(blocks));
}

/// Searches the scan of a 5-element ground set for the Desargues pattern:
/// all ten triples of 2-subsets over a common 3-set must be collinear and
/// together with the ten 2-subset points form a structure isomorphic to the
/// Desargues configuration.
inline bool desargues_present(const DependencyScan& scan) {
  if (scan.n != 5) throw ParameterError("the Desargues pattern search expects n = 5");
  const std::vector<Subset> labels = k_subsets(5, 2);
  std::vector<std::vector<int>> blocks;
  for (Subset t : k_subsets(5, 3)) {
    std::vector<int> inner, blk;
    for (Subset pair : k_subsets_of(t, 2)) {
      const int idx = scan.collinear.point_index(pair);
      if (idx < 0) return false;
      inner.push_back(idx);
      auto it = std::lower_bound(labels.begin(), labels.end(), pair);
      blk.push_back(static_cast<int>(it - labels.begin()));
    }
    std::sort(inner.begin(), inner.end());
    if (!scan.collinear.has_block(inner)) return false;
    blocks.push_back(std::move(blk));
  }
  const IncidenceStructure candidate(labels, std::move(blocks));
  const ConfigurationParams params = verify_configuration(candidate);
  const ConfigurationParams desargues{BigInt(10), BigInt(3), BigInt(10), BigInt(3)};
  if (!(params == desargues)) return false;
  return find_isomorphism(candidate, desargues_configuration()).has_value();
}

/// Coplanarity facts about low-cardinality points: (i) the three pair points
/// over a 3-set together with the 3-set point; (ii) the four 3-subset points
/// of a 4-set.
struct CoplanarityReport {
  int n = 0;
  FieldSpec field;
  int pair_quad_rank_min = std::numeric_limits<int>::max();
  int pair_quad_rank_max = 0;
  int fourset_rank_min = std::numeric_limits<int>::max();
  int fourset_rank_max = 0;

  bool pair_quads_coplanar() const { return pair_quad_rank_max <= 3; }
  bool foursets_coplanar() const { return fourset_rank_max <= 3; }
};

inline CoplanarityReport coplanarity_checks(int n, const FieldSpec& fs) {
  if (n < 5) throw ParameterError("coplanarity checks need n >= 5");
  return with_field(fs, [&](auto field) {
    using Field = decltype(field);
    const Frame<Field> fr(field, n);
    CoplanarityReport rep;
    rep.n = n;
    rep.field = fs;
    for (Subset t : k_subsets(n, 3)) {
      std::vector<std::vector<typename Field::Element>> rows;
      for (Subset pair : k_subsets_of(t, 2)) rows.push_back(fr.point_vector(pair));
      rows.push_back(fr.point_vector(t));
      const int r = rank_of(Matrix<Field>::from_rows(field, fr.dim(), rows));
      rep.pair_quad_rank_min = std::min(rep.pair_quad_rank_min, r);
      rep.pair_quad_rank_max = std::max(rep.pair_quad_rank_max, r);
    }
    for (Subset q : k_subsets(n, 4)) {
      std::vector<std::vector<typename Field::Element>> rows;
      for (Subset t : k_subsets_of(q, 3)) rows.push_back(fr.point_vector(t));
      const int r = rank_of(Matrix<Field>::from_rows(field, fr.dim(), rows));
      rep.fourset_rank_min = std::min(rep.fourset_rank_min, r);
      rep.fourset_rank_max = std::max(rep.fourset_rank_max, r);
    }
    return rep;
  });
}

}  // namespace cremona
