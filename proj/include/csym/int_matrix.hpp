#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csym/errors.hpp"
#include "csym/numeric.hpp"
#include "csym/poset.hpp"

namespace csym {

/// Dense matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c) {}

  Int& at(int r, int c) { return entries[std::size_t(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return entries[std::size_t(r) * cols + c];
  }

  std::vector<Int> column(int c) const {
    std::vector<Int> col(rows);
    for (int r = 0; r < rows; ++r) col[r] = at(r, c);
    return col;
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMatrix& o) const = default;
};

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

/// 0/1 matrix whose k-th column is the indicator vector of the k-th nonempty
/// ideal in canonical order.
inline IntMatrix order_matrix(const Poset& p) {
  auto ideals = enumerate_ideals(p);
  IntMatrix m(p.d, static_cast<int>(ideals.size()) - 1);
  for (std::size_t k = 1; k < ideals.size(); ++k)
    for (int r = 0; r < p.d; ++r)
      m.at(r, static_cast<int>(k) - 1) = (ideals[k].members >> r) & 1u;
  return m;
}

/// The block matrix [0 | A | -A] with a row of ones appended. Column order:
/// the zero column, then the columns of A, then their negations.
inline IntMatrix centrally_symmetric(const IntMatrix& a) {
  for (int c = 0; c < a.cols; ++c) {
    bool zero = true;
    for (int r = 0; r < a.rows && zero; ++r) zero = (a.at(r, c) == 0);
    if (zero)
      throw ZeroColumnError("column " + std::to_string(c + 1) +
                            " is the zero vector");
  }
  IntMatrix m(a.rows + 1, 2 * a.cols + 1);
  for (int c = 0; c < m.cols; ++c) m.at(a.rows, c) = 1;
  for (int c = 0; c < a.cols; ++c)
    for (int r = 0; r < a.rows; ++r) {
      m.at(r, 1 + c) = a.at(r, c);
      m.at(r, 1 + a.cols + c) = -a.at(r, c);
    }
  return m;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
  if (m.rows != m.cols) throw RangeError("determinant of non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix u;  // rows x rows, |det| = 1
  IntMatrix d;  // diagonal, divisor chain
  IntMatrix v;  // cols x cols, |det| = 1
  std::vector<Int> divisors;  // nonzero diagonal entries, each dividing the next
  int rank = 0;
};

/// Smith normal form via exact row/column reduction, pivoting on the entry of
/// minimal absolute value. U and V accumulate the elementary operations so
/// that U * A * V = D can be re-checked by plain multiplication.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s;
  s.u = IntMatrix::identity(a.rows);
  s.v = IntMatrix::identity(a.cols);
  s.d = a;
  IntMatrix& m = s.d;

  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
    for (int c = 0; c < s.u.cols; ++c) std::swap(s.u.at(r1, c), s.u.at(r2, c));
  };
  auto swap_cols = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
    for (int r = 0; r < s.v.rows; ++r) std::swap(s.v.at(r, c1), s.v.at(r, c2));
  };
  auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f*src
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
    for (int c = 0; c < s.u.cols; ++c) s.u.at(dst, c) += f * s.u.at(src, c);
  };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
    for (int r = 0; r < s.v.rows; ++r) s.v.at(r, dst) += f * s.v.at(r, src);
  };
  auto negate_row = [&](int r) {
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
    for (int c = 0; c < s.u.cols; ++c) s.u.at(r, c) = -s.u.at(r, c);
  };

  const int steps = std::min(a.rows, a.cols);
  for (int k = 0; k < steps; ++k) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int r = k; r < m.rows; ++r)
        for (int c = k; c < m.cols; ++c)
          if (m.at(r, c) != 0 &&
              (pr < 0 || abs(m.at(r, c)) < abs(m.at(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) break;  // submatrix is zero
      swap_rows(k, pr);
      swap_cols(k, pc);
      bool clean = true;
      for (int r = k + 1; r < m.rows; ++r)
        if (m.at(r, k) != 0) {
          add_row(r, k, -(m.at(r, k) / m.at(k, k)));
          if (m.at(r, k) != 0) clean = false;
        }
      for (int c = k + 1; c < m.cols; ++c)
        if (m.at(k, c) != 0) {
          add_col(c, k, -(m.at(k, c) / m.at(k, k)));
          if (m.at(k, c) != 0) clean = false;
        }
      if (!clean) continue;  // smaller remainders appeared; pick pivot again
      // Enforce divisibility of the remaining submatrix by the pivot.
      bool divides_all = true;
      for (int r = k + 1; r < m.rows && divides_all; ++r)
        for (int c = k + 1; c < m.cols && divides_all; ++c)
          if (m.at(r, c) % m.at(k, k) != 0) {
            add_row(k, r, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (m.at(k, k) < 0) negate_row(k);
  }
  for (int k = 0; k < steps; ++k)
    if (m.at(k, k) != 0) {
      s.divisors.push_back(m.at(k, k));
      ++s.rank;
    }
  return s;
}

struct LatticeSpan {
  int rank = 0;
  bool spans_full_lattice = false;
  std::vector<Int> elementary_divisors;
};

/// Whether the columns generate all of Z^rows, read off the Smith form.
inline LatticeSpan lattice_spans(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) throw RangeError("empty matrix");
  SmithForm s = smith_normal_form(a);
  LatticeSpan out;
  out.rank = s.rank;
  out.elementary_divisors = s.divisors;
  out.spans_full_lattice =
      s.rank == a.rows &&
      std::all_of(s.divisors.begin(), s.divisors.end(),
                  [](const Int& v) { return v == 1; });
  return out;
}

struct UnimodularityReport {
  bool unimodular = false;          // full row rank and all nonzero maximal
                                    // minors of equal absolute value
  bool minors_all_unit = false;     // all nonzero maximal minors are +-1
  bool full_row_rank = false;
  // First maximal minor (lexicographic column sets) whose absolute value
  // differs from the first nonzero one seen; 1-based column indices.
  std::optional<std::pair<std::vector<int>, Int>> witness_minor;
};

/// Definition-faithful unimodularity test: enumerate every maximal minor
/// exactly. The budget caps the number of column subsets visited.
inline UnimodularityReport is_unimodular(const IntMatrix& a,
                                         std::int64_t budget = 10'000'000) {
  UnimodularityReport rep;
  if (a.rows == 0 || a.cols == 0) throw RangeError("empty matrix");
  if (a.cols < a.rows) return rep;  // rank < rows
  Int count = binomial_coeff(a.cols, a.rows);
  if (count > budget)
    throw CapExceededError("maximal-minor scan needs " + count.str() +
                           " determinants, budget is " +
                           std::to_string(budget));
  rep.full_row_rank = lattice_spans(a).rank == a.rows;
  if (!rep.full_row_rank) return rep;

  std::vector<int> idx(a.rows);
  for (int i = 0; i < a.rows; ++i) idx[i] = i;
  std::optional<Int> ref_abs;
  bool all_unit = true, all_same = true;
  IntMatrix sub(a.rows, a.rows);
  for (;;) {
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.rows; ++c) sub.at(r, c) = a.at(r, idx[c]);
    Int det = determinant(sub);
    if (det != 0) {
      Int ab = abs(det);
      if (ab != 1) all_unit = false;
      if (!ref_abs) {
        ref_abs = ab;
      } else if (ab != *ref_abs) {
        all_same = false;
        if (!rep.witness_minor) {
          std::vector<int> cols1;
          for (int c : idx) cols1.push_back(c + 1);
          rep.witness_minor = {cols1, det};
        }
      }
    }
    // next combination
    int i = a.rows - 1;
    while (i >= 0 && idx[i] == a.cols - a.rows + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < a.rows; ++j) idx[j] = idx[j - 1] + 1;
  }
  rep.unimodular = all_same;
  rep.minors_all_unit = all_unit;
  return rep;
}

}  // namespace csym
