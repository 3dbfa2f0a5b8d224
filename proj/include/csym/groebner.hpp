#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "csym/errors.hpp"
#include "csym/int_matrix.hpp"
#include "csym/monomial.hpp"
#include "csym/numeric.hpp"
#include "csym/poset.hpp"

namespace csym {

// ---------------------------------------------------------------------------
// The polynomial ring attached to a poset: one variable z for the origin
// column, and variables x_I, y_I for every nonempty ideal I in canonical
// order. Variable ids coincide with the column indices of the centrally
// symmetric matrix of the order matrix, so exponent vectors line up with
// configuration columns.
// ---------------------------------------------------------------------------

enum class VarKind { Z, X, Y };

struct PosetRing {
  Poset poset;
  std::vector<std::uint64_t> ideals;  // nonempty ideal masks, canonical order
  std::map<std::uint64_t, int> index_of_ideal;

  explicit PosetRing(const Poset& p) : poset(p) {
    auto all = enumerate_ideals(p);
    for (std::size_t k = 1; k < all.size(); ++k) {
      index_of_ideal[all[k].members] = static_cast<int>(k - 1);
      ideals.push_back(all[k].members);
    }
  }

  int ideal_count() const { return static_cast<int>(ideals.size()); }
  int var_count() const { return 2 * ideal_count() + 1; }

  int z_id() const { return 0; }
  int x_id(int ideal_index) const { return 1 + ideal_index; }
  int y_id(int ideal_index) const { return 1 + ideal_count() + ideal_index; }

  VarKind kind(int id) const {
    if (id == 0) return VarKind::Z;
    return id <= ideal_count() ? VarKind::X : VarKind::Y;
  }
  int ideal_index(int id) const {  // only for X/Y variables
    return id <= ideal_count() ? id - 1 : id - 1 - ideal_count();
  }
  std::uint64_t ideal_mask(int id) const { return ideals[ideal_index(id)]; }

  // x_{} and y_{} of the empty ideal collapse to z.
  Monomial x_of(std::uint64_t mask) const {
    if (mask == 0) return Monomial::variable(z_id());
    return Monomial::variable(x_id(index_of_ideal.at(mask)));
  }
  Monomial y_of(std::uint64_t mask) const {
    if (mask == 0) return Monomial::variable(z_id());
    return Monomial::variable(y_id(index_of_ideal.at(mask)));
  }

  std::string var_name(int id) const {
    if (id == 0) return "z";
    return (kind(id) == VarKind::X ? "x" : "y") +
           mask_to_string(ideal_mask(id));
  }
};

/// The canonical compatible order, smallest variable first:
/// z, then y_I and x_I per ideal in canonical order. Canonical ideal order
/// refines inclusion, so x_I < x_J and y_I < y_J whenever I is a proper
/// subset of J.
inline MonomialOrder canonical_order(const PosetRing& ring) {
  MonomialOrder ord;
  ord.rank_of.assign(ring.var_count(), 0);
  for (int k = 0; k < ring.ideal_count(); ++k) {
    ord.rank_of[ring.y_id(k)] = 2 * k + 1;
    ord.rank_of[ring.x_id(k)] = 2 * k + 2;
  }
  return ord;
}

/// Checks the two constraints every usable order must satisfy: z is the
/// minimum, and variable rank respects ideal inclusion within each block.
inline bool order_is_compatible(const PosetRing& ring,
                                const MonomialOrder& ord) {
  if (ord.size() != ring.var_count()) return false;
  for (int id = 1; id < ring.var_count(); ++id)
    if (ord.rank(id) <= ord.rank(ring.z_id())) return false;
  for (int i = 0; i < ring.ideal_count(); ++i)
    for (int j = 0; j < ring.ideal_count(); ++j) {
      if (i == j) continue;
      bool proper_subset = (ring.ideals[i] & ~ring.ideals[j]) == 0 &&
                           ring.ideals[i] != ring.ideals[j];
      if (!proper_subset) continue;
      if (ord.rank(ring.x_id(i)) >= ord.rank(ring.x_id(j))) return false;
      if (ord.rank(ring.y_id(i)) >= ord.rank(ring.y_id(j))) return false;
    }
  return true;
}

/// A random linear extension of the compatibility constraints, deterministic
/// per seed: repeatedly draws uniformly among the variables all of whose
/// constraint-predecessors are already placed.
inline MonomialOrder random_compatible_order(const PosetRing& ring,
                                             std::uint64_t seed) {
  const int n = ring.var_count();
  const int m = ring.ideal_count();
  std::vector<std::vector<int>> preds(n);  // ids that must come before
  for (int id = 1; id < n; ++id) preds[id].push_back(ring.z_id());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      bool proper_subset = (ring.ideals[i] & ~ring.ideals[j]) == 0 &&
                           ring.ideals[i] != ring.ideals[j];
      if (!proper_subset) continue;
      preds[ring.x_id(j)].push_back(ring.x_id(i));
      preds[ring.y_id(j)].push_back(ring.y_id(i));
    }
  std::mt19937_64 rng(seed);
  std::vector<char> placed(n, 0);
  MonomialOrder ord;
  ord.rank_of.assign(n, 0);
  for (int rank = 0; rank < n; ++rank) {
    std::vector<int> ready;
    for (int id = 0; id < n; ++id) {
      if (placed[id]) continue;
      bool ok = true;
      for (int q : preds[id])
        if (!placed[q]) {
          ok = false;
          break;
        }
      if (ok) ready.push_back(id);
    }
    int pick = ready[std::uniform_int_distribution<std::size_t>(
        0, ready.size() - 1)(rng)];
    placed[pick] = 1;
    ord.rank_of[pick] = rank;
  }
  return ord;
}

// ---------------------------------------------------------------------------
// The explicit binomial family: lattice relations among the x's, among the
// y's, and mixed pairs peeling a shared maximal element. The first monomial
// of each is its marked lead.
// ---------------------------------------------------------------------------
inline std::vector<Binomial> csym_binomial_basis(const PosetRing& ring) {
  const auto& p = ring.poset;
  const int m = ring.ideal_count();
  std::vector<std::uint64_t> maximal(m);
  for (int k = 0; k < m; ++k)
    maximal[k] = maximal_elements_mask(p, ring.ideals[k]);

  std::vector<Binomial> basis;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::uint64_t a = ring.ideals[i], b = ring.ideals[j];
      bool incomp = (a & ~b) != 0 && (b & ~a) != 0;
      if (!incomp) continue;
      basis.push_back(
          {ring.x_of(a).times(ring.x_of(b)),
           ring.x_of(a | b).times(ring.x_of(a & b))});
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::uint64_t a = ring.ideals[i], b = ring.ideals[j];
      bool incomp = (a & ~b) != 0 && (b & ~a) != 0;
      if (!incomp) continue;
      basis.push_back(
          {ring.y_of(a).times(ring.y_of(b)),
           ring.y_of(a | b).times(ring.y_of(a & b))});
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::uint64_t shared = maximal[i] & maximal[j];
      std::uint64_t rest = shared;
      while (rest != 0) {
        int k = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t bit = 1ull << k;
        basis.push_back(
            {ring.x_of(ring.ideals[i]).times(ring.y_of(ring.ideals[j])),
             ring.x_of(ring.ideals[i] ^ bit)
                 .times(ring.y_of(ring.ideals[j] ^ bit))});
      }
    }
  return basis;
}

// ---------------------------------------------------------------------------
// The monomial map: z -> s, x_I -> s*prod t_i, y_I -> s*prod t_i^-1,
// recorded additively on exponents.
// ---------------------------------------------------------------------------
struct LaurentExponent {
  int s_degree = 0;
  std::vector<long long> t;  // length d, entries may be negative

  bool operator==(const LaurentExponent& o) const = default;
};

inline LaurentExponent pi_image(const PosetRing& ring, const Monomial& mon) {
  LaurentExponent img;
  img.s_degree = mon.deg;
  img.t.assign(ring.poset.d, 0);
  for (const auto& [id, e] : mon.exps) {
    if (ring.kind(id) == VarKind::Z) continue;
    long long sign = ring.kind(id) == VarKind::X ? 1 : -1;
    std::uint64_t mask = ring.ideal_mask(id);
    while (mask != 0) {
      int i = std::countr_zero(mask);
      mask &= mask - 1;
      img.t[i] += sign * e;
    }
  }
  return img;
}

inline bool in_kernel(const PosetRing& ring, const Binomial& b) {
  return pi_image(ring, b.lead) == pi_image(ring, b.trail);
}

// ---------------------------------------------------------------------------
// Marked bases and reduction.
// ---------------------------------------------------------------------------

/// A basis whose binomials are all verified to satisfy lead > trail under
/// the given order. Construction throws NotMarkedError otherwise, so any
/// reduction against a MarkedBasis terminates.
class MarkedBasis {
 public:
  MarkedBasis(std::vector<Binomial> basis, const MonomialOrder& ord)
      : basis_(std::move(basis)), ord_(ord) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (compare(ord_, basis_[i].lead, basis_[i].trail) <= 0)
        throw NotMarkedError("basis element " + std::to_string(i + 1) +
                             " has lead <= trail under the order");
  }

  const std::vector<Binomial>& elements() const { return basis_; }
  const MonomialOrder& order() const { return ord_; }
  std::size_t size() const { return basis_.size(); }

 private:
  std::vector<Binomial> basis_;
  MonomialOrder ord_;
};

/// Division by the marked basis, always reducing with the lowest-index
/// divisor; fully deterministic. The result is divisible by no lead.
inline Monomial normal_form(Monomial mon, const MarkedBasis& basis) {
  const auto& els = basis.elements();
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const Binomial& g : els) {
      if (g.lead.divides(mon)) {
        mon = mon.quotient(g.lead).times(g.trail);
        reduced = true;
        break;
      }
    }
  }
  return mon;
}

struct BuchbergerResult {
  bool is_groebner = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Buchberger's criterion for a marked binomial basis. The S-binomial of two
/// binomials is again a difference of two monomials; it reduces to zero iff
/// both sides have equal normal forms. Pairs with coprime leads are skipped
/// (first Buchberger criterion). Pairs are scanned in sorted order, so the
/// first failing pair is reproducible.
inline BuchbergerResult buchberger_verify(const std::vector<Binomial>& basis,
                                          const MonomialOrder& ord) {
  MarkedBasis marked(basis, ord);
  const auto& els = marked.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (coprime(els[i].lead, els[j].lead)) continue;
      Monomial l = mon_lcm(els[i].lead, els[j].lead);
      Monomial a = l.quotient(els[i].lead).times(els[i].trail);
      Monomial b = l.quotient(els[j].lead).times(els[j].trail);
      if (a == b) continue;
      if (normal_form(a, marked) != normal_form(b, marked))
        return {false, std::make_pair(i, j)};
    }
  return {};
}

struct InitialIdealSummary {
  std::vector<Monomial> minimal_generators;
  std::size_t lead_multiset_size = 0;  // one lead per basis element
  std::size_t distinct_leads = 0;
  bool all_squarefree = true;
  bool all_quadratic = true;
};

/// Lead monomials of a marked basis, minimalized under divisibility.
inline InitialIdealSummary initial_ideal_minimal_generators(
    const std::vector<Binomial>& basis, const MonomialOrder& ord) {
  MarkedBasis marked(basis, ord);
  InitialIdealSummary out;
  out.lead_multiset_size = basis.size();
  std::vector<Monomial> leads;
  for (const auto& g : marked.elements()) leads.push_back(g.lead);
  std::sort(leads.begin(), leads.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.exps < b.exps;
            });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  out.distinct_leads = leads.size();
  for (const auto& m : leads) {
    bool redundant = false;
    for (const auto& other : leads)
      if (!(other == m) && other.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.minimal_generators.push_back(m);
  }
  for (const auto& m : out.minimal_generators) {
    if (!m.squarefree()) out.all_squarefree = false;
    if (m.deg != 2) out.all_quadratic = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting routines tying the basis to the toric ring and the polytope.
// ---------------------------------------------------------------------------

/// Number of degree-t monomials in var_count variables divisible by no lead
/// of the basis. DFS over variables, pruning as soon as a lead divides the
/// partial monomial; standard monomials are closed under divisors, so the
/// pruning is sound.
inline Int standard_monomial_count(const std::vector<Binomial>& basis,
                                   const MonomialOrder& ord, int var_count,
                                   int t, int degree_cap = 16) {
  if (t < 0) throw RangeError("negative degree");
  if (t > degree_cap)
    throw CapExceededError("standard-monomial count capped at degree " +
                           std::to_string(degree_cap));
  auto summary = initial_ideal_minimal_generators(basis, ord);
  // Bucket leads by their largest variable id: when the DFS raises the
  // exponent of variable v, only leads peaking at v can newly divide.
  std::vector<std::vector<const Monomial*>> by_max_var(var_count);
  for (const auto& m : summary.minimal_generators)
    if (!m.exps.empty()) by_max_var[m.exps.back().first].push_back(&m);

  Int count = 0;
  Monomial current;
  auto dfs = [&](auto&& self, int var, int remaining) -> void {
    if (var == var_count) {
      if (remaining == 0) ++count;
      return;
    }
    self(self, var + 1, remaining);  // exponent 0
    for (int e = 1; e <= remaining; ++e) {
      current.exps.emplace_back(var, e);
      bool blocked = false;
      for (const Monomial* lead : by_max_var[var])
        if (lead->divides(current)) {
          blocked = true;
          break;
        }
      if (blocked) {
        current.exps.pop_back();
        return;  // larger exponents stay divisible
      }
      self(self, var + 1, remaining - e);
      current.exps.pop_back();
    }
  };
  dfs(dfs, 0, t);
  return count;
}

/// Number of distinct sums of exactly t columns of the configuration, with
/// repetition. The all-ones last row keeps the degree graded, so the level
/// sets are disjoint and the DP is a plain level iteration.
inline Int semigroup_degree_count(const IntMatrix& a, int t,
                                  int degree_cap = 16) {
  for (int c = 0; c < a.cols; ++c)
    if (a.at(a.rows - 1, c) != 1)
      throw RangeError("configuration must have an all-ones last row");
  if (t < 0) throw RangeError("negative degree");
  if (t > degree_cap)
    throw CapExceededError("semigroup count capped at degree " +
                           std::to_string(degree_cap));
  std::vector<std::vector<Int>> cols(a.cols);
  for (int c = 0; c < a.cols; ++c) cols[c] = a.column(c);
  std::set<std::vector<Int>> level{std::vector<Int>(a.rows, 0)};
  for (int step = 0; step < t; ++step) {
    std::set<std::vector<Int>> next;
    for (const auto& s : level)
      for (const auto& col : cols) {
        std::vector<Int> sum(a.rows);
        for (int r = 0; r < a.rows; ++r) sum[r] = s[r] + col[r];
        next.insert(std::move(sum));
      }
    level = std::move(next);
  }
  return Int(level.size());
}

struct HilbertNumerator {
  std::vector<Int> hilbert;    // H(0..degrees)
  std::vector<Int> numerator;  // coefficients of H(x) * (1-x)^rank
};

/// Hilbert function of the semigroup generated by the columns, together with
/// the numerator of its series over (1 - x)^rank. A trailing zero in the
/// numerator is decisive for rings generated in degree one: were the ring
/// Cohen-Macaulay, the numerator would be the Hilbert function of an Artinian
/// standard graded quotient, which cannot vanish and then resume.
inline HilbertNumerator hilbert_numerator(const IntMatrix& a, int degrees) {
  for (int c = 0; c < a.cols; ++c)
    if (a.at(a.rows - 1, c) != 1)
      throw RangeError("configuration must have an all-ones last row");
  HilbertNumerator out;
  out.hilbert.push_back(1);

  Int max_abs = 0;
  for (const auto& v : a.entries) max_abs = std::max(max_abs, Int(abs(v)));
  Int coord_bound = 2 * max_abs * degrees + 1;
  int bits = 1;
  while ((Int(1) << bits) < coord_bound) ++bits;
  const bool packable = bits * a.rows <= 62 && max_abs * degrees < (1 << 20);

  if (packable) {
    std::vector<std::vector<std::int64_t>> cols(a.cols);
    for (int c = 0; c < a.cols; ++c) {
      cols[c].resize(a.rows);
      for (int r = 0; r < a.rows; ++r)
        cols[c][r] = static_cast<std::int64_t>(a.at(r, c));
    }
    const std::int64_t shift = static_cast<std::int64_t>(max_abs) * degrees;
    auto pack = [&](const std::vector<std::int64_t>& v) {
      std::uint64_t key = 0;
      for (int r = 0; r < a.rows; ++r)
        key = (key << bits) | static_cast<std::uint64_t>(v[r] + shift);
      return key;
    };
    std::vector<std::vector<std::int64_t>> level{
        std::vector<std::int64_t>(a.rows, 0)};
    for (int t = 1; t <= degrees; ++t) {
      std::unordered_set<std::uint64_t> seen;
      seen.reserve(level.size() * 4);
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& s : level)
        for (const auto& col : cols) {
          std::vector<std::int64_t> sum(a.rows);
          for (int r = 0; r < a.rows; ++r) sum[r] = s[r] + col[r];
          if (seen.insert(pack(sum)).second) next.push_back(std::move(sum));
        }
      level = std::move(next);
      out.hilbert.push_back(Int(level.size()));
    }
  } else {
    std::vector<std::vector<Int>> cols(a.cols);
    for (int c = 0; c < a.cols; ++c) cols[c] = a.column(c);
    std::set<std::vector<Int>> level{std::vector<Int>(a.rows, 0)};
    for (int t = 1; t <= degrees; ++t) {
      std::set<std::vector<Int>> next;
      for (const auto& s : level)
        for (const auto& col : cols) {
          std::vector<Int> sum(a.rows);
          for (int r = 0; r < a.rows; ++r) sum[r] = s[r] + col[r];
          next.insert(std::move(sum));
        }
      level = std::move(next);
      out.hilbert.push_back(Int(level.size()));
    }
  }

  const int rank = smith_normal_form(a).rank;
  for (int k = 0; k <= degrees; ++k) {
    Int h = 0;
    for (int j = 0; j <= std::min(k, rank); ++j) {
      Int term = binomial_coeff(rank, j) * out.hilbert[k - j];
      h += (j % 2 == 0) ? term : -term;
    }
    out.numerator.push_back(h);
  }
  return out;
}

namespace detail {

template <typename Fn>
inline void for_each_monomial_of_degree(int var_count, int t, Fn&& fn) {
  Monomial current;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == var_count - 1) {
      if (remaining > 0) current.exps.emplace_back(var, remaining);
      current.deg = t;
      fn(current);
      if (remaining > 0) current.exps.pop_back();
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      if (e > 0) current.exps.emplace_back(var, e);
      self(self, var + 1, remaining - e);
      if (e > 0) current.exps.pop_back();
    }
  };
  if (var_count == 0) return;
  rec(rec, 0, t);
}

inline std::vector<Int> column_image(const IntMatrix& a, const Monomial& m) {
  std::vector<Int> img(a.rows, 0);
  for (const auto& [id, e] : m.exps)
    for (int r = 0; r < a.rows; ++r) img[r] += Int(e) * a.at(r, id);
  return img;
}

}  // namespace detail

/// All homogeneous binomials u - v of degree <= max_degree, u != v, with
/// equal images under the configuration map, one per unordered pair. Found
/// by bucketing the degree-t monomials by image vector. The returned lead is
/// the larger side under identity variable ranks, fixing signs.
inline std::vector<Binomial> degree_bounded_kernel(
    const IntMatrix& a, int max_degree,
    std::int64_t monomial_budget = 5'000'000) {
  std::vector<Binomial> out;
  MonomialOrder id_order;
  id_order.rank_of.resize(a.cols);
  for (int i = 0; i < a.cols; ++i) id_order.rank_of[i] = i;
  for (int t = 1; t <= max_degree; ++t) {
    Int count = binomial_coeff(a.cols + t - 1, t);
    if (count > monomial_budget)
      throw CapExceededError("degree-" + std::to_string(t) +
                             " monomial enumeration needs " + count.str() +
                             " monomials, budget is " +
                             std::to_string(monomial_budget));
    std::map<std::vector<Int>, std::vector<Monomial>> buckets;
    detail::for_each_monomial_of_degree(
        a.cols, t,
        [&](const Monomial& m) { buckets[detail::column_image(a, m)].push_back(m); });
    for (auto& [img, mons] : buckets)
      for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = i + 1; j < mons.size(); ++j) {
          if (compare(id_order, mons[i], mons[j]) > 0)
            out.push_back({mons[i], mons[j]});
          else
            out.push_back({mons[j], mons[i]});
        }
  }
  return out;
}

struct QuadraticGenerationResult {
  bool generated_in_degree_two_up_to_3 = true;
  std::optional<Binomial> witness;  // cubic kernel binomial outside the
                                    // quadratically generated ideal
  std::size_t quadratic_kernel_size = 0;
  std::size_t completed_basis_size = 0;
};

/// Whether every cubic kernel binomial of the configuration lies in the
/// ideal generated by the quadratic kernel binomials. Runs a Buchberger
/// completion of the quadratics, capped at the given degree; the ideal in
/// question is homogeneous, so membership of cubics is decided correctly as
/// soon as the cap is at least 3. A cap below that is an error, never a
/// silent success.
inline QuadraticGenerationResult quadratic_generation_test(
    const IntMatrix& a, const MonomialOrder& ord, int completion_cap = 4) {
  if (completion_cap < 3)
    throw CompletionCapError(
        "completion cap " + std::to_string(completion_cap) +
        " cannot certify cubic membership; need at least 3");
  QuadraticGenerationResult res;
  std::vector<Binomial> g;
  for (auto& b : degree_bounded_kernel(a, 2)) {
    if (compare(ord, b.lead, b.trail) < 0) std::swap(b.lead, b.trail);
    g.push_back(b);
  }
  res.quadratic_kernel_size = g.size();

  // Degree-capped completion. Reducing both sides of each S-binomial fully
  // keeps every added element irreducible against the current leads, so the
  // loop terminates on the finite set of monomials of degree <= cap.
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pending.emplace_back(i, j);
  std::optional<MarkedBasis> marked(std::in_place, g, ord);
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    if (coprime(g[i].lead, g[j].lead)) continue;
    Monomial l = mon_lcm(g[i].lead, g[j].lead);
    if (l.deg > completion_cap) continue;
    Monomial s1 = l.quotient(g[i].lead).times(g[i].trail);
    Monomial s2 = l.quotient(g[j].lead).times(g[j].trail);
    if (s1 == s2) continue;
    Monomial n1 = normal_form(s1, *marked);
    Monomial n2 = normal_form(s2, *marked);
    if (n1 == n2) continue;
    Binomial fresh;
    if (compare(ord, n1, n2) > 0)
      fresh = {n1, n2};
    else
      fresh = {n2, n1};
    g.push_back(fresh);
    for (std::size_t k = 0; k + 1 < g.size(); ++k)
      pending.emplace_back(k, g.size() - 1);
    marked.emplace(g, ord);
  }
  res.completed_basis_size = g.size();

  MarkedBasis completed(g, ord);
  for (const auto& cubic : degree_bounded_kernel(a, 3)) {
    if (cubic.lead.deg != 3) continue;
    if (normal_form(cubic.lead, completed) !=
        normal_form(cubic.trail, completed)) {
      res.generated_in_degree_two_up_to_3 = false;
      res.witness = cubic;
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Text format for bases: one binomial per line, factors printed as the x
// block, then the y block, then z, ideals as sorted element sets.
// ---------------------------------------------------------------------------

inline std::string monomial_to_string(const PosetRing& ring,
                                      const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  auto append = [&](int id, int e) {
    if (!out.empty()) out += "*";
    out += ring.var_name(id);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (const auto& [id, e] : m.exps)
    if (ring.kind(id) == VarKind::X) append(id, e);
  for (const auto& [id, e] : m.exps)
    if (ring.kind(id) == VarKind::Y) append(id, e);
  for (const auto& [id, e] : m.exps)
    if (ring.kind(id) == VarKind::Z) append(id, e);
  return out;
}

inline std::string binomial_to_string(const PosetRing& ring,
                                      const Binomial& b) {
  return monomial_to_string(ring, b.lead) + " - " +
         monomial_to_string(ring, b.trail);
}

}  // namespace csym
