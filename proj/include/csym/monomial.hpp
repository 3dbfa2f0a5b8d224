#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "csym/errors.hpp"

namespace csym {

// Variables are dense integer ids, assigned per context (for a poset ring:
// id 0 is z, then the x and y blocks; for a generic configuration: column
// indices). Monomials are sparse exponent lists sorted by id.

/// A monomial with cached total degree. Exponents are strictly positive.
struct Monomial {
  std::vector<std::pair<int, int>> exps;  // (variable id, exponent), sorted
  int deg = 0;

  static Monomial one() { return {}; }

  static Monomial variable(int id, int e = 1) {
    Monomial m;
    if (e > 0) {
      m.exps.emplace_back(id, e);
      m.deg = e;
    }
    return m;
  }

  int exponent(int id) const {
    auto it = std::lower_bound(
        exps.begin(), exps.end(), id,
        [](const std::pair<int, int>& p, int v) { return p.first < v; });
    return (it != exps.end() && it->first == id) ? it->second : 0;
  }

  bool is_one() const { return exps.empty(); }

  bool squarefree() const {
    return std::all_of(exps.begin(), exps.end(),
                       [](const auto& p) { return p.second == 1; });
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    r.deg = deg + o.deg;
    r.exps.reserve(exps.size() + o.exps.size());
    std::size_t i = 0, j = 0;
    while (i < exps.size() || j < o.exps.size()) {
      if (j == o.exps.size() ||
          (i < exps.size() && exps[i].first < o.exps[j].first)) {
        r.exps.push_back(exps[i++]);
      } else if (i == exps.size() || o.exps[j].first < exps[i].first) {
        r.exps.push_back(o.exps[j++]);
      } else {
        r.exps.emplace_back(exps[i].first, exps[i].second + o.exps[j].second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    std::size_t j = 0;
    for (const auto& [id, e] : exps) {
      while (j < o.exps.size() && o.exps[j].first < id) ++j;
      if (j == o.exps.size() || o.exps[j].first != id || o.exps[j].second < e)
        return false;
    }
    return true;
  }

  /// Quotient this / o; caller guarantees divisibility.
  Monomial quotient(const Monomial& o) const {
    Monomial r;
    r.deg = deg - o.deg;
    std::size_t j = 0;
    for (const auto& [id, e] : exps) {
      int sub = 0;
      while (j < o.exps.size() && o.exps[j].first < id) ++j;
      if (j < o.exps.size() && o.exps[j].first == id) sub = o.exps[j].second;
      if (e - sub > 0) r.exps.emplace_back(id, e - sub);
    }
    return r;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    if (j == b.exps.size() ||
        (i < a.exps.size() && a.exps[i].first < b.exps[j].first)) {
      r.exps.push_back(a.exps[i++]);
    } else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first) {
      r.exps.push_back(b.exps[j++]);
    } else {
      r.exps.emplace_back(a.exps[i].first,
                          std::max(a.exps[i].second, b.exps[j].second));
      ++i;
      ++j;
    }
  }
  for (const auto& [id, e] : r.exps) r.deg += e;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first < b.exps[j].first)
      ++i;
    else if (b.exps[j].first < a.exps[i].first)
      ++j;
    else
      return false;
  }
  return true;
}

/// A total order on variables; rank 0 is the smallest variable.
struct MonomialOrder {
  std::vector<int> rank_of;  // rank_of[id]

  int rank(int id) const { return rank_of[id]; }
  int size() const { return static_cast<int>(rank_of.size()); }
};

// Comparison semantics: total degree first. Among monomials of equal degree,
// the reverse lexicographic tie-break applies: at the smallest-ranked
// variable where the exponents differ, the monomial with the LARGER exponent
// is the SMALLER monomial. Plain reverse lex is not a well-order on all
// monomials; every ideal handled here is homogeneous, where the graded
// variant coincides with it, so reductions terminate.
inline int compare(const MonomialOrder& ord, const Monomial& a,
                   const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  int best_rank = -1;
  int best_sign = 0;  // +1 if a has larger exponent at the deciding variable
  std::size_t i = 0, j = 0;
  auto consider = [&](int id, int ea, int eb) {
    if (ea == eb) return;
    int r = ord.rank(id);
    if (best_rank < 0 || r < best_rank) {
      best_rank = r;
      best_sign = ea > eb ? 1 : -1;
    }
  };
  while (i < a.exps.size() || j < b.exps.size()) {
    if (j == b.exps.size() ||
        (i < a.exps.size() && a.exps[i].first < b.exps[j].first)) {
      consider(a.exps[i].first, a.exps[i].second, 0);
      ++i;
    } else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first) {
      consider(b.exps[j].first, 0, b.exps[j].second);
      ++j;
    } else {
      consider(a.exps[i].first, a.exps[i].second, b.exps[j].second);
      ++i;
      ++j;
    }
  }
  if (best_rank < 0) return 0;
  return best_sign > 0 ? -1 : 1;  // larger exponent at smallest variable loses
}

/// A homogeneous difference of two distinct monomials. When marked against an
/// order, lead is the initial monomial.
struct Binomial {
  Monomial lead;
  Monomial trail;

  bool operator==(const Binomial& o) const {
    return lead == o.lead && trail == o.trail;
  }
};

}  // namespace csym
