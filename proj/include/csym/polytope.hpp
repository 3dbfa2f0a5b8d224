#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csym/errors.hpp"
#include "csym/int_matrix.hpp"
#include "csym/numeric.hpp"
#include "csym/poset.hpp"

namespace csym {

struct Facet {
  std::vector<Int> normal;  // primitive integer vector, oriented outward
  Int offset;               // polytope = { x : normal . x <= offset }

  bool operator==(const Facet& o) const = default;
};

namespace detail {

template <typename T>
inline T floor_div(const T& p, const T& q) {
  T quo = p / q;
  if (p % q != 0 && ((p < 0) != (q < 0))) quo -= 1;
  return quo;
}

template <typename T>
inline T ceil_div(const T& p, const T& q) {
  return -floor_div<T>(-p, q);
}

/// Exact determinant, fraction-free elimination, templated so small inputs
/// can run in machine integers.
template <typename T>
inline T det_bareiss(std::vector<std::vector<T>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return T(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

// Kernel direction of a (d-1) x d matrix via signed maximal minors. Returns
// the zero vector when the rows do not span a (d-1)-dimensional space.
template <typename T>
inline std::vector<T> hyperplane_normal(
    const std::vector<std::vector<T>>& rows, int dim) {
  std::vector<T> normal(dim, T(0));
  std::vector<std::vector<T>> sub(dim - 1, std::vector<T>(dim - 1));
  for (int skip = 0; skip < dim; ++skip) {
    for (int r = 0; r < dim - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < dim; ++c) {
        if (c == skip) continue;
        sub[r][cc++] = rows[r][c];
      }
    }
    T minor = det_bareiss(sub);
    normal[skip] = (skip % 2 == 0) ? minor : -minor;
  }
  return normal;
}

inline Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

// ---------------------------------------------------------------------------
// Lattice-point scan over a box restricted by inequalities normal.x <= offset.
// Coordinates are fixed one level at a time; at each level the admissible
// interval is derived from the inequalities using the extreme achievable
// contribution of the still-free coordinates, so infeasible subtrees are
// never entered and the innermost level is a closed-form interval.
// ---------------------------------------------------------------------------
template <typename T>
struct ScanSystem {
  int dim = 0;
  std::vector<std::vector<T>> normals;
  std::vector<T> offsets;
  std::vector<T> lo, hi;  // bounding box
};

template <typename T, typename Emit>
inline Int scan_lattice(const ScanSystem<T>& sys, bool collect, Emit&& emit,
                        std::int64_t node_budget) {
  const int d = sys.dim;
  const int nf = static_cast<int>(sys.normals.size());
  for (int j = 0; j < d; ++j)
    if (sys.lo[j] > sys.hi[j]) return 0;
  // min_remain[f][L] = least contribution of coordinates > L to facet f.
  std::vector<std::vector<T>> min_remain(nf, std::vector<T>(d, T(0)));
  for (int f = 0; f < nf; ++f)
    for (int L = d - 2; L >= 0; --L) {
      const T& c = sys.normals[f][L + 1];
      T contrib = c >= 0 ? c * sys.lo[L + 1] : c * sys.hi[L + 1];
      min_remain[f][L] = min_remain[f][L + 1] + contrib;
    }
  std::vector<T> partial(nf, T(0));
  std::vector<T> point(d, T(0));
  Int count = 0;
  std::int64_t nodes = 0;

  auto rec = [&](auto&& self, int L) -> void {
    if (++nodes > node_budget)
      throw CapExceededError("lattice scan exceeded node budget " +
                             std::to_string(node_budget));
    T a = sys.lo[L], b = sys.hi[L];
    for (int f = 0; f < nf; ++f) {
      T rhs = sys.offsets[f] - partial[f] - min_remain[f][L];
      const T& c = sys.normals[f][L];
      if (c > 0) {
        b = std::min(b, floor_div(rhs, c));
      } else if (c < 0) {
        a = std::max(a, ceil_div(rhs, c));
      } else if (rhs < 0) {
        return;
      }
      if (a > b) return;
    }
    if (L == d - 1) {
      if (!collect) {
        count += Int(b - a + 1);
      } else {
        for (T x = a; x <= b; ++x) {
          point[L] = x;
          ++count;
          emit(point);
        }
      }
      return;
    }
    for (T x = a; x <= b; ++x) {
      point[L] = x;
      for (int f = 0; f < nf; ++f) partial[f] += sys.normals[f][L] * x;
      self(self, L + 1);
      for (int f = 0; f < nf; ++f) partial[f] -= sys.normals[f][L] * x;
    }
  };
  if (d == 0) return 1;
  rec(rec, 0);
  return count;
}

}  // namespace detail

/// A lattice polytope given by integer points (vertices and possibly more),
/// with the facet description computed on demand by an exhaustive supporting-
/// hyperplane scan. Immutable after construction apart from the facet cache;
/// compute facets before sharing across threads.
class Polytope {
 public:
  Polytope(int dim, std::vector<std::vector<Int>> points)
      : dim_(dim), pts_(std::move(points)) {
    if (dim_ < 1) throw RangeError("ambient dimension must be positive");
    if (pts_.empty()) throw RangeError("polytope needs at least one point");
    for (const auto& p : pts_)
      if (static_cast<int>(p.size()) != dim_)
        throw RangeError("point dimension mismatch");
  }

  int ambient_dim() const { return dim_; }
  const std::vector<std::vector<Int>>& points() const { return pts_; }

  /// Dimension of the affine hull of the points.
  int affine_rank() const {
    if (affine_rank_ >= 0) return affine_rank_;
    if (pts_.size() == 1) return affine_rank_ = 0;
    IntMatrix diffs(static_cast<int>(pts_.size()) - 1, dim_);
    for (std::size_t i = 1; i < pts_.size(); ++i)
      for (int j = 0; j < dim_; ++j)
        diffs.at(static_cast<int>(i) - 1, j) = pts_[i][j] - pts_[0][j];
    return affine_rank_ = smith_normal_form(diffs).rank;
  }

  bool full_dimensional() const { return affine_rank() == dim_; }

  const std::vector<Facet>& facets() const {
    if (!facets_) facets_ = compute_facets();
    return *facets_;
  }

  std::pair<std::vector<Int>, std::vector<Int>> bounding_box() const {
    std::vector<Int> lo = pts_[0], hi = pts_[0];
    for (const auto& p : pts_)
      for (int j = 0; j < dim_; ++j) {
        lo[j] = std::min(lo[j], p[j]);
        hi[j] = std::max(hi[j], p[j]);
      }
    return {lo, hi};
  }

 private:
  std::vector<Facet> compute_facets() const;

  int dim_;
  std::vector<std::vector<Int>> pts_;
  mutable std::optional<std::vector<Facet>> facets_;
  mutable int affine_rank_ = -1;
};

inline std::vector<Facet> Polytope::compute_facets() const {
  constexpr int kMaxFacetDim = 8;
  if (dim_ > kMaxFacetDim)
    throw CapExceededError("facet scan capped at ambient dimension " +
                           std::to_string(kMaxFacetDim));
  if (!full_dimensional())
    throw NotFullDimError("facet scan requires a full-dimensional polytope");

  std::vector<std::vector<Int>> pts = pts_;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  const int d = dim_;

  Int candidates = binomial_coeff(n, d);
  if (candidates > 5'000'000)
    throw CapExceededError("facet scan needs " + candidates.str() +
                           " point subsets");

  // Small-coordinate inputs stay in machine integers: minors of the
  // difference matrices are bounded by (d-1)! * (2B)^(d-1).
  Int max_abs = 0;
  for (const auto& p : pts)
    for (const auto& x : p) max_abs = std::max(max_abs, Int(abs(x)));
  Int minor_bound = 1;
  for (int i = 1; i < d; ++i) minor_bound *= Int(i) * 2 * max_abs;
  const bool use_i64 = minor_bound < (Int(1) << 61);

  std::set<std::pair<std::vector<Int>, Int>> seen;
  std::vector<Facet> facets;

  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::vector<std::vector<Int>> rows_big(d - 1, std::vector<Int>(d));
  std::vector<std::vector<std::int64_t>> rows_i64(
      d - 1, std::vector<std::int64_t>(d));

  for (;;) {
    std::vector<Int> normal(d);
    if (use_i64) {
      for (int r = 1; r < d; ++r)
        for (int c = 0; c < d; ++c)
          rows_i64[r - 1][c] = static_cast<std::int64_t>(
              Int(pts[idx[r]][c] - pts[idx[0]][c]));
      auto ni = detail::hyperplane_normal(rows_i64, d);
      for (int c = 0; c < d; ++c) normal[c] = ni[c];
    } else {
      for (int r = 1; r < d; ++r)
        for (int c = 0; c < d; ++c)
          rows_big[r - 1][c] = pts[idx[r]][c] - pts[idx[0]][c];
      normal = detail::hyperplane_normal(rows_big, d);
    }

    bool nonzero = std::any_of(normal.begin(), normal.end(),
                               [](const Int& v) { return v != 0; });
    if (nonzero) {
      Int g = detail::vec_gcd(normal);
      for (auto& v : normal) v /= g;
      Int offset = 0;
      for (int c = 0; c < d; ++c) offset += normal[c] * pts[idx[0]][c];
      // Canonical sign for the dedup key only.
      std::vector<Int> key = normal;
      Int key_off = offset;
      for (const auto& v : key) {
        if (v == 0) continue;
        if (v < 0) {
          for (auto& w : key) w = -w;
          key_off = -key_off;
        }
        break;
      }
      if (seen.emplace(key, key_off).second) {
        bool any_below = false, any_above = false;
        for (const auto& p : pts) {
          Int dot = 0;
          for (int c = 0; c < d; ++c) dot += normal[c] * p[c];
          if (dot < offset) any_below = true;
          if (dot > offset) any_above = true;
          if (any_below && any_above) break;
        }
        if (!(any_below && any_above)) {
          Facet f;
          if (any_above) {  // orient outward
            for (auto& v : normal) v = -v;
            f.normal = std::move(normal);
            f.offset = -offset;
          } else {
            f.normal = std::move(normal);
            f.offset = offset;
          }
          facets.push_back(std::move(f));
        }
      }
    }

    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) {
              return std::tie(a.normal, a.offset) <
                     std::tie(b.normal, b.offset);
            });
  return facets;
}

/// V-representation of the centrally symmetric polytope of a configuration:
/// the columns, their negations, and the origin.
inline Polytope csym_polytope(const IntMatrix& a) {
  for (int c = 0; c < a.cols; ++c) {
    bool zero = true;
    for (int r = 0; r < a.rows && zero; ++r) zero = (a.at(r, c) == 0);
    if (zero)
      throw ZeroColumnError("column " + std::to_string(c + 1) +
                            " is the zero vector");
  }
  std::vector<std::vector<Int>> pts;
  pts.push_back(std::vector<Int>(a.rows, 0));
  for (int c = 0; c < a.cols; ++c) pts.push_back(a.column(c));
  for (int c = 0; c < a.cols; ++c) {
    auto col = a.column(c);
    for (auto& v : col) v = -v;
    pts.push_back(std::move(col));
  }
  return Polytope(a.rows, std::move(pts));
}

/// Convex hull of the indicator vectors of all poset ideals (empty one
/// included).
inline Polytope order_polytope(const Poset& p) {
  std::vector<std::vector<Int>> pts;
  for (const auto& ideal : enumerate_ideals(p)) {
    std::vector<Int> v(p.d);
    for (int j = 0; j < p.d; ++j) v[j] = (ideal.members >> j) & 1u;
    pts.push_back(std::move(v));
  }
  return Polytope(p.d, std::move(pts));
}

namespace detail {

/// Runs the interval scan for the system { normal.x <= offs[f] } inside the
/// given box, choosing machine or big integers by an exact overflow bound.
template <typename Emit>
inline Int scan_with_system(const Polytope& poly,
                            const std::vector<Int>& offs,
                            const std::vector<Int>& lo,
                            const std::vector<Int>& hi, bool collect,
                            Emit&& emit, std::int64_t node_budget) {
  const auto& facets = poly.facets();
  const int d = poly.ambient_dim();
  Int worst = 0;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    Int sum = abs(offs[f]);
    for (int j = 0; j < d; ++j)
      sum += abs(facets[f].normal[j]) * std::max(Int(abs(lo[j])), Int(abs(hi[j])));
    worst = std::max(worst, sum);
  }
  if (worst < (Int(1) << 61)) {
    ScanSystem<std::int64_t> sys;
    sys.dim = d;
    sys.lo.resize(d);
    sys.hi.resize(d);
    for (int j = 0; j < d; ++j) {
      sys.lo[j] = static_cast<std::int64_t>(lo[j]);
      sys.hi[j] = static_cast<std::int64_t>(hi[j]);
    }
    for (std::size_t f = 0; f < facets.size(); ++f) {
      std::vector<std::int64_t> nrm(d);
      for (int j = 0; j < d; ++j)
        nrm[j] = static_cast<std::int64_t>(facets[f].normal[j]);
      sys.normals.push_back(std::move(nrm));
      sys.offsets.push_back(static_cast<std::int64_t>(offs[f]));
    }
    return scan_lattice(
        sys, collect,
        [&](const std::vector<std::int64_t>& p) {
          std::vector<Int> big(p.begin(), p.end());
          emit(big);
        },
        node_budget);
  }
  ScanSystem<Int> sys;
  sys.dim = d;
  sys.lo = lo;
  sys.hi = hi;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    sys.normals.push_back(facets[f].normal);
    sys.offsets.push_back(offs[f]);
  }
  return scan_lattice(sys, collect, emit, node_budget);
}

}  // namespace detail

inline constexpr std::int64_t kDefaultScanBudget = 200'000'000;

/// Number of lattice points of the t-th dilate.
inline Int lattice_point_count(const Polytope& poly, long t,
                               std::int64_t node_budget = kDefaultScanBudget) {
  if (t < 0) throw RangeError("negative dilation factor");
  if (t == 0) return 1;
  auto [lo, hi] = poly.bounding_box();
  std::vector<Int> offs;
  for (const auto& f : poly.facets()) offs.push_back(f.offset * t);
  for (auto& v : lo) v *= t;
  for (auto& v : hi) v *= t;
  return detail::scan_with_system(
      poly, offs, lo, hi, false, [](const std::vector<Int>&) {}, node_budget);
}

/// Lattice points of the t-th dilate, in ascending lexicographic order.
inline std::vector<std::vector<Int>> lattice_points(
    const Polytope& poly, long t,
    std::int64_t node_budget = kDefaultScanBudget) {
  if (t < 0) throw RangeError("negative dilation factor");
  std::vector<std::vector<Int>> out;
  if (t == 0) {
    out.push_back(std::vector<Int>(poly.ambient_dim(), 0));
    return out;
  }
  auto [lo, hi] = poly.bounding_box();
  std::vector<Int> offs;
  for (const auto& f : poly.facets()) offs.push_back(f.offset * t);
  for (auto& v : lo) v *= t;
  for (auto& v : hi) v *= t;
  detail::scan_with_system(
      poly, offs, lo, hi, true,
      [&](const std::vector<Int>& p) { out.push_back(p); }, node_budget);
  return out;
}

struct EhrhartData {
  std::vector<Int> counts;        // i(t) for t = 0..T
  std::vector<Rat> coefficients;  // Ehrhart polynomial, ascending powers
  std::vector<Int> delta;         // delta_0..delta_d

  Rat polynomial_at(long t) const {
    Rat v = 0, pw = 1;
    for (const auto& c : coefficients) {
      v += c * pw;
      pw *= t;
    }
    return v;
  }

  bool delta_symmetric() const {
    for (std::size_t i = 0, j = delta.size(); i < j; ++i)
      if (delta[i] != delta[delta.size() - 1 - i]) return false;
    return true;
  }

  bool operator==(const EhrhartData& o) const = default;
};

/// Dilate counts, the interpolated Ehrhart polynomial, and the delta vector.
/// Counts run to max(dilate_max, d+1); the count at d+1 is always compared
/// against the interpolation as an out-of-sample check.
inline EhrhartData ehrhart_delta(const Polytope& poly, long dilate_max = -1,
                                 std::int64_t node_budget = kDefaultScanBudget) {
  if (!poly.full_dimensional())
    throw NotFullDimError("Ehrhart data needs a full-dimensional polytope");
  const int d = poly.ambient_dim();
  const long tmax = std::max<long>(dilate_max, d + 1);
  EhrhartData data;
  for (long t = 0; t <= tmax; ++t)
    data.counts.push_back(lattice_point_count(poly, t, node_budget));

  // Newton interpolation through t = 0..d.
  std::vector<Rat> diag;
  std::vector<std::vector<Rat>> table(d + 1);
  for (int i = 0; i <= d; ++i) table[i].push_back(Rat(data.counts[i]));
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i + k <= d; ++i)
      table[i].push_back((table[i + 1][k - 1] - table[i][k - 1]) / k);
  // Expand Newton form into monomial coefficients.
  std::vector<Rat> coeff(d + 1, Rat(0));
  std::vector<Rat> base{Rat(1)};  // product (t - 0)(t - 1)...
  for (int k = 0; k <= d; ++k) {
    for (std::size_t j = 0; j < base.size(); ++j)
      coeff[j] += table[0][k] * base[j];
    if (k < d) {
      base.push_back(Rat(0));
      for (std::size_t j = base.size() - 1; j > 0; --j)
        base[j] = base[j - 1] - Rat(k) * base[j];
      base[0] = -Rat(k) * base[0];
    }
  }
  data.coefficients = coeff;
  if (Rat(data.counts[d + 1]) != data.polynomial_at(d + 1))
    throw InternalCheckError(
        "Ehrhart interpolation failed its out-of-sample check at t = " +
        std::to_string(d + 1));

  // delta_j = sum_k (-1)^k C(d+1, k) i(j - k).
  for (int j = 0; j <= d; ++j) {
    Int v = 0;
    for (int k = 0; k <= j; ++k) {
      Int term = binomial_coeff(d + 1, k) * data.counts[j - k];
      v += (k % 2 == 0) ? term : -term;
    }
    data.delta.push_back(v);
  }
  if (data.delta[0] != 1)
    throw InternalCheckError("delta_0 must be 1");
  for (const auto& v : data.delta)
    if (v < 0) throw InternalCheckError("negative delta entry");
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  Int delta_sum = std::accumulate(data.delta.begin(), data.delta.end(), Int(0));
  if (Rat(delta_sum) != coeff[d] * fact)
    throw InternalCheckError(
        "delta sum disagrees with the normalized volume");
  return data;
}

/// Full-dimensional, the origin strictly inside every facet, and a strict-
/// interior scan finding the origin as the only interior lattice point.
inline bool is_fano(const Polytope& poly,
                    std::int64_t node_budget = kDefaultScanBudget) {
  if (!poly.full_dimensional())
    throw NotFullDimError("Fano check needs a full-dimensional polytope");
  for (const auto& f : poly.facets())
    if (f.offset < 1) return false;  // origin on or outside this facet
  auto [lo, hi] = poly.bounding_box();
  std::vector<Int> offs;
  for (const auto& f : poly.facets()) offs.push_back(f.offset - 1);
  bool only_origin = true;
  Int interior = detail::scan_with_system(
      poly, offs, lo, hi, true,
      [&](const std::vector<Int>& p) {
        for (const auto& x : p)
          if (x != 0) only_origin = false;
      },
      node_budget);
  return interior == 1 && only_origin;
}

struct GorensteinReport {
  bool gorenstein = false;
  bool dual_integral = false;
  bool delta_symmetric = false;
};

/// Dual integrality (all primitive facet offsets equal to one) with the
/// delta-vector symmetry cross-check. The two routes must agree.
inline GorensteinReport is_gorenstein_fano(
    const Polytope& poly, std::int64_t node_budget = kDefaultScanBudget) {
  if (!is_fano(poly, node_budget))
    throw RangeError("Gorenstein check requires a Fano polytope");
  GorensteinReport rep;
  rep.dual_integral =
      std::all_of(poly.facets().begin(), poly.facets().end(),
                  [](const Facet& f) { return f.offset == 1; });
  rep.delta_symmetric = ehrhart_delta(poly, -1, node_budget).delta_symmetric();
  if (rep.dual_integral != rep.delta_symmetric)
    throw InternalCheckError(
        "dual integrality and delta symmetry disagree on a Fano polytope");
  rep.gorenstein = rep.dual_integral;
  return rep;
}

struct NormalityReport {
  bool normal_up_to = true;
  std::optional<std::pair<long, std::vector<Int>>> witness;  // (t, point)
};

/// Checks that every lattice point of the t-th dilate is a sum of t lattice
/// points of the polytope, for t up to T, by growing the pointwise sums
/// S_t = S_{t-1} + S_1 and comparing against a direct dilate scan.
inline NormalityReport is_normal_up_to(
    const Polytope& poly, int T,
    std::int64_t node_budget = kDefaultScanBudget) {
  NormalityReport rep;
  auto s1 = lattice_points(poly, 1, node_budget);
  std::set<std::vector<Int>> level(s1.begin(), s1.end());
  for (int t = 2; t <= T; ++t) {
    std::set<std::vector<Int>> next;
    for (const auto& s : level)
      for (const auto& p : s1) {
        std::vector<Int> sum(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) sum[j] = s[j] + p[j];
        next.insert(std::move(sum));
      }
    level = std::move(next);
    auto dilate = lattice_points(poly, t, node_budget);
    for (const auto& p : level)
      if (!std::binary_search(dilate.begin(), dilate.end(), p))
        throw InternalCheckError("sum of polytope points left the dilate");
    if (level.size() != dilate.size()) {
      for (const auto& p : dilate)
        if (!level.count(p)) {
          rep.normal_up_to = false;
          rep.witness = {t, p};
          return rep;
        }
    }
  }
  return rep;
}

/// Eulerian numbers A(n, 0..n-1) by the standard recurrence.
inline std::vector<Int> eulerian_row(int n) {
  std::vector<Int> row{1};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> next(m, 0);
    for (int k = 0; k < m; ++k) {
      Int v = 0;
      if (k < m - 1) v += Int(k + 1) * row[k];
      if (k > 0) v += Int(m - k) * row[k - 1];
      next[k] = v;
    }
    row = std::move(next);
  }
  return row;
}

struct AntichainForms {
  Int point_count;            // (t+1)^(d+1) - t^(d+1)
  std::vector<Int> delta;     // Eulerian row A(d+1, .)
  Int zonotope_count;         // sum over proper subsets of the d+1 generators
};

/// Closed forms for the centrally symmetric polytope of an antichain: the
/// dilate count, its delta vector, and the zonotope subset-sum expression
/// (all d+1 generators minus any proper subset being independent).
inline AntichainForms antichain_closed_forms(int d, long t) {
  if (d < 1 || d > 10) throw RangeError("antichain closed forms need 1<=d<=10");
  if (t < 0) throw RangeError("negative dilation factor");
  AntichainForms forms;
  forms.point_count = int_pow(Int(t) + 1, d + 1) - int_pow(Int(t), d + 1);
  forms.delta = eulerian_row(d + 1);
  forms.zonotope_count = 0;
  for (int k = 0; k <= d; ++k)
    forms.zonotope_count += binomial_coeff(d + 1, k) * int_pow(Int(t), k);
  return forms;
}

}  // namespace csym
