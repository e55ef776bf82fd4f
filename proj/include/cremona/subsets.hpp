#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cremona/errors.hpp"

namespace cremona {

using BigInt = boost::multiprecision::cpp_int;

/// Ground sets are {0,...,n-1} with n at most the bit-mask width.
inline constexpr int max_ground_set = 64;

/// A subset of a ground set {0,...,n-1} stored as a bit mask.
///
/// Ordering compares masks numerically, which for subsets of equal
/// cardinality is colexicographic order.
class Subset {
 public:
  constexpr Subset() = default;
  explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elems) {
    std::uint64_t b = 0;
    for (int e : elems) {
      if (e < 0 || e >= max_ground_set) throw ParameterError("subset element out of range");
      b |= std::uint64_t{1} << e;
    }
    return Subset(b);
  }

  static Subset single(int e) { return of({e}); }

  /// The full ground set {0,...,n-1}.
  static Subset full(int n) {
    if (n < 0 || n > max_ground_set) throw ParameterError("ground set size out of range");
    if (n == 0) return Subset();
    if (n == max_ground_set) return Subset(~std::uint64_t{0});
    return Subset((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  int card() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const { return e >= 0 && e < max_ground_set && ((bits_ >> e) & 1u); }
  bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint(Subset o) const { return (bits_ & o.bits_) == 0; }

  friend Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  /// Set difference.
  Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }

  /// Smallest element, or -1 when empty.
  int min_element() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr auto operator<=>(const Subset&, const Subset&) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Complement within the ground set {0,...,n-1}.
inline Subset complement(Subset a, int n) {
  if (n < 1 || n > max_ground_set) throw ParameterError("ground set size out of range");
  Subset full = Subset::full(n);
  if (!a.subset_of(full)) throw ParameterError("subset not contained in the ground set");
  return full.minus(a);
}

inline BigInt factorial(int n) {
  if (n < 0) throw ParameterError("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

/// All k-element subsets of {0,...,n-1} in colexicographic order
/// (equivalently, increasing mask value).
inline std::vector<Subset> k_subsets(int n, int k) {
  if (n < 0 || n > max_ground_set) throw ParameterError("ground set size out of range");
  if (k < 0 || k > n) throw ParameterError("subset size out of range");
  std::vector<Subset> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  BigInt total = binomial(n, k);
  if (total <= 1'000'000) out.reserve(static_cast<std::size_t>(total));
  std::uint64_t v = (k == max_ground_set) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  const std::uint64_t last = v << (n - k);
  for (;;) {
    out.push_back(Subset(v));
    if (v == last) break;
    // Gosper's hack: next mask of equal popcount.
    std::uint64_t u = v & (~v + 1);
    std::uint64_t t = v + u;
    v = t | (((v ^ t) >> 2) / u);
  }
  return out;
}

/// All k-element subsets of an arbitrary base set, in the order induced by
/// index combinations over the sorted element list.
inline std::vector<Subset> k_subsets_of(Subset base, int k) {
  const std::vector<int> elems = base.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) throw ParameterError("subset size out of range");
  std::vector<Subset> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::uint64_t b = 0;
    for (int i : idx) b |= std::uint64_t{1} << elems[static_cast<std::size_t>(i)];
    out.push_back(Subset(b));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Unordered partition of a set into k-element parts, stored in canonical
/// order (parts sorted by their smallest element).  Equality on canonical
/// partitions is structural.
using UniformPartition = std::vector<Subset>;

inline UniformPartition canonical_partition(std::vector<Subset> parts) {
  std::sort(parts.begin(), parts.end(),
            [](Subset a, Subset b) { return a.min_element() < b.min_element(); });
  return parts;
}

namespace detail {
inline void partitions_rec(Subset remaining, int k, std::vector<Subset>& acc,
                           std::vector<UniformPartition>& out) {
  if (remaining.empty()) {
    out.push_back(acc);
    return;
  }
  const int lo = remaining.min_element();
  const Subset lead = Subset::single(lo);
  for (Subset rest : k_subsets_of(remaining.minus(lead), k - 1)) {
    const Subset part = lead | rest;
    acc.push_back(part);
    partitions_rec(remaining.minus(part), k, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

/// All partitions of z into s unordered parts of size k, each produced once
/// and already in canonical order.
inline std::vector<UniformPartition> uniform_partitions(Subset z, int k, int s) {
  if (k < 1 || s < 1) throw ParameterError("partition part size and count must be positive");
  if (z.card() != k * s) throw ParameterError("set size does not equal k*s");
  std::vector<UniformPartition> out;
  std::vector<Subset> acc;
  detail::partitions_rec(z, k, acc, out);
  return out;
}

/// n! / ((n-ks)! * s! * (k!)^s): the number of ways to choose s disjoint
/// unordered k-subsets from an n-set.
inline BigInt count_partitions(int n, int k, int s) {
  if (k < 1 || s < 1) throw ParameterError("part size and count must be positive");
  if (n < k * s) throw ParameterError("ground set smaller than k*s");
  if (n > max_ground_set) throw ParameterError("ground set size out of range");
  BigInt num = factorial(n);
  BigInt den = factorial(n - k * s) * factorial(s);
  BigInt kf = factorial(k);
  for (int i = 0; i < s; ++i) den *= kf;
  return num / den;  // exact by construction
}

}  // namespace cremona
