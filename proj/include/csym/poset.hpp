#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "csym/errors.hpp"

namespace csym {

// Ground-set elements are labeled 1..d to match the usual poset convention;
// bit i-1 of a mask stands for element i. Fixed-width masks cap d at 62,
// which ideal enumeration makes unreachable in practice anyway.
inline constexpr int kMaxGroundSet = 62;

inline int popcount64(std::uint64_t m) { return std::popcount(m); }

inline std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

inline std::string mask_to_string(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_elements(mask)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

/// A finite strict partial order on {1..d}, stored transitively closed.
struct Poset {
  int d = 0;
  // below[i] = elements strictly below element i+1, as a bitmask.
  std::vector<std::uint64_t> below;

  std::uint64_t ground_mask() const {
    return d == 64 ? ~0ull : ((1ull << d) - 1);
  }
  bool less(int a, int b) const {  // a < b in the order; 1-based
    return (below[b - 1] >> (a - 1)) & 1u;
  }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  std::uint64_t below_mask(int a) const { return below[a - 1]; }
  std::uint64_t above_mask(int a) const {
    std::uint64_t m = 0;
    for (int b = 1; b <= d; ++b)
      if (less(a, b)) m |= 1ull << (b - 1);
    return m;
  }

  bool operator==(const Poset& o) const = default;
};

/// A down-closed subset of the ground set.
struct PosetIdeal {
  std::uint64_t members = 0;

  bool contains(int a) const { return (members >> (a - 1)) & 1u; }
  int size() const { return popcount64(members); }
  std::vector<int> elements() const { return mask_elements(members); }
  bool operator==(const PosetIdeal& o) const = default;
};

inline bool is_ideal_mask(const Poset& p, std::uint64_t mask) {
  if ((mask & ~p.ground_mask()) != 0) return false;
  for (int a = 1; a <= p.d; ++a)
    if ((mask >> (a - 1)) & 1u)
      if ((p.below_mask(a) & ~mask) != 0) return false;
  return true;
}

inline void require_ideal(const Poset& p, const PosetIdeal& i,
                          const char* who) {
  if (!is_ideal_mask(p, i.members))
    throw NotAnIdealError(std::string(who) + ": " +
                          mask_to_string(i.members) + " is not down-closed");
}

/// Builds the transitive closure of the given cover relations (a,b) = "a < b".
/// Rejects out-of-range elements and relation sets whose closure would not be
/// a strict order.
inline Poset from_cover_relations(
    int d, const std::vector<std::pair<int, int>>& covers) {
  if (d < 1 || d > kMaxGroundSet)
    throw RangeError("ground-set size must be in 1.." +
                     std::to_string(kMaxGroundSet) + ", got " +
                     std::to_string(d));
  Poset p;
  p.d = d;
  p.below.assign(d, 0);
  for (auto [a, b] : covers) {
    if (a < 1 || a > d || b < 1 || b > d)
      throw RangeError("cover (" + std::to_string(a) + "," +
                       std::to_string(b) + ") out of range 1.." +
                       std::to_string(d));
    if (a == b)
      throw RangeError("cover (" + std::to_string(a) + "," +
                       std::to_string(b) + ") relates an element to itself");
    p.below[b - 1] |= 1ull << (a - 1);
  }
  // Transitive closure by repeated propagation; d is small.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < d; ++b) {
      std::uint64_t acc = p.below[b];
      std::uint64_t rest = p.below[b];
      while (rest != 0) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        acc |= p.below[j];
      }
      if (acc != p.below[b]) {
        p.below[b] = acc;
        changed = true;
      }
    }
  }
  for (int a = 1; a <= d; ++a) {
    if (p.less(a, a))
      throw CycleError("cover relations contain a cycle through element " +
                       std::to_string(a));
    for (int b = a + 1; b <= d; ++b)
      if (p.less(a, b) && p.less(b, a))
        throw CycleError("cover relations contain a cycle through elements " +
                         std::to_string(a) + " and " + std::to_string(b));
  }
  return p;
}

/// Covers of the closed order (the Hasse diagram), sorted. Used for the
/// canonical echo of a poset in reports.
inline std::vector<std::pair<int, int>> cover_relations(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int b = 1; b <= p.d; ++b)
    for (int a = 1; a <= p.d; ++a) {
      if (!p.less(a, b)) continue;
      // a < b is a cover iff nothing sits strictly between.
      if ((p.below_mask(b) & p.above_mask(a)) == 0) covers.emplace_back(a, b);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

// Canonical order on ideals: ascending cardinality, then ascending
// lexicographic order of the sorted element list. For equal cardinality the
// lex rule is equivalent to: the owner of the lowest differing bit is smaller.
inline bool canonical_mask_less(std::uint64_t a, std::uint64_t b) {
  int pa = popcount64(a), pb = popcount64(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  std::uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

/// All poset ideals of p, including the empty set and the whole ground set,
/// in canonical order. Grown by BFS from the empty ideal, adding one
/// admissible element at a time, so the cost scales with the output.
inline std::vector<PosetIdeal> enumerate_ideals(const Poset& p) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue{0};
  seen.insert(0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint64_t cur = queue[q];
    for (int a = 1; a <= p.d; ++a) {
      if ((cur >> (a - 1)) & 1u) continue;
      if ((p.below_mask(a) & ~cur) != 0) continue;  // a not yet admissible
      std::uint64_t next = cur | (1ull << (a - 1));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::uint64_t> masks(queue.begin(), queue.end());
  std::sort(masks.begin(), masks.end(), canonical_mask_less);
  std::vector<PosetIdeal> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(PosetIdeal{m});
  return out;
}

inline std::uint64_t maximal_elements_mask(const Poset& p,
                                           std::uint64_t ideal_mask) {
  std::uint64_t out = 0;
  for (int a = 1; a <= p.d; ++a)
    if ((ideal_mask >> (a - 1)) & 1u)
      if ((p.above_mask(a) & ideal_mask) == 0) out |= 1ull << (a - 1);
  return out;
}

struct IdealLatticeOps {
  PosetIdeal set_union;
  PosetIdeal set_intersection;
  bool incomparable = false;     // neither contains the other
  std::uint64_t maximal_of_first = 0;
};

/// Join, meet, inclusion comparability, and the maximal elements of the first
/// argument. Union and intersection of ideals are ideals again.
inline IdealLatticeOps ideal_lattice_ops(const Poset& p, const PosetIdeal& i,
                                         const PosetIdeal& j) {
  require_ideal(p, i, "ideal_lattice_ops");
  require_ideal(p, j, "ideal_lattice_ops");
  IdealLatticeOps ops;
  ops.set_union = PosetIdeal{i.members | j.members};
  ops.set_intersection = PosetIdeal{i.members & j.members};
  bool i_in_j = (i.members & ~j.members) == 0;
  bool j_in_i = (j.members & ~i.members) == 0;
  ops.incomparable = !i_in_j && !j_in_i;
  ops.maximal_of_first = maximal_elements_mask(p, i.members);
  return ops;
}

/// True iff some three elements are pairwise incomparable (width >= 3).
inline bool has_three_antichain(const Poset& p) {
  for (int a = 1; a <= p.d; ++a)
    for (int b = a + 1; b <= p.d; ++b) {
      if (p.comparable(a, b)) continue;
      for (int c = b + 1; c <= p.d; ++c)
        if (!p.comparable(a, c) && !p.comparable(b, c)) return true;
    }
  return false;
}

/// Every labeled poset on {1..d}, enumerated as the transitive antisymmetric
/// irreflexive relations. Exponential scan; capped at d = 5.
inline std::vector<Poset> enumerate_all_posets(int d) {
  if (d < 1) throw RangeError("ground-set size must be positive");
  if (d > 5)
    throw CapExceededError("poset enumeration is capped at d = 5, got d = " +
                           std::to_string(d));
  // Ordered pairs (a,b), a != b, indexed consecutively.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (a != b) pairs.emplace_back(a, b);
  const int np = static_cast<int>(pairs.size());
  std::vector<Poset> out;
  std::vector<std::uint64_t> below(d);
  for (std::uint64_t rel = 0; rel < (1ull << np); ++rel) {
    std::fill(below.begin(), below.end(), 0);
    for (int k = 0; k < np; ++k)
      if ((rel >> k) & 1u) below[pairs[k].second] |= 1ull << pairs[k].first;
    bool ok = true;
    for (int b = 0; b < d && ok; ++b) {
      std::uint64_t rest = below[b];
      while (rest != 0) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        if (a == b || ((below[a] >> b) & 1u) || (below[a] & ~below[b]) != 0) {
          ok = false;  // cycle, antisymmetry, or transitivity violation
          break;
        }
      }
    }
    if (!ok) continue;
    Poset p;
    p.d = d;
    p.below = below;
    out.push_back(std::move(p));
  }
  return out;
}

inline Poset chain_poset(int d) {
  std::vector<std::pair<int, int>> covers;
  for (int a = 1; a < d; ++a) covers.emplace_back(a, a + 1);
  return from_cover_relations(d, covers);
}

inline Poset antichain_poset(int d) { return from_cover_relations(d, {}); }

}  // namespace csym
