#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "csym/fixtures.hpp"
#include "csym/int_matrix.hpp"

using namespace csym;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

IntMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-6, 6);
  IntMatrix m(rows, cols);
  for (auto& v : m.entries) v = entry(rng);
  return m;
}

void check_smith(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t i = 1; i < s.divisors.size(); ++i)
    CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
  for (int r = 0; r < s.d.rows; ++r)
    for (int c = 0; c < s.d.cols; ++c)
      if (r != c) CHECK(s.d.at(r, c) == 0);
}

}  // namespace

TEST_CASE("order matrix of the bundled 5-element poset, cell by cell") {
  Poset p = fixtures::example_2_1_poset();
  IntMatrix expected = from_rows({{1, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                                  {0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                  {0, 0, 0, 0, 1, 0, 0, 1, 0, 1},
                                  {0, 0, 0, 1, 0, 1, 1, 1, 1, 1},
                                  {0, 0, 0, 0, 0, 0, 1, 0, 1, 1}});
  CHECK(order_matrix(p) == expected);
}

TEST_CASE("order matrix of a chain is unit lower triangular") {
  IntMatrix m = order_matrix(chain_poset(4));
  REQUIRE(m.rows == 4);
  REQUIRE(m.cols == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(m.at(r, c) == (r <= c ? 1 : 0));
}

TEST_CASE("order matrix of the 2-antichain") {
  IntMatrix m = order_matrix(antichain_poset(2));
  CHECK(m == from_rows({{1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("order matrix columns are distinct 0/1 vectors") {
  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : enumerate_all_posets(d)) {
      IntMatrix m = order_matrix(p);
      std::set<std::vector<Int>> cols;
      for (int c = 0; c < m.cols; ++c) {
        auto col = m.column(c);
        for (const auto& v : col) CHECK((v == 0 || v == 1));
        CHECK(cols.insert(col).second);
      }
    }
}

TEST_CASE("centrally symmetric block matrix") {
  IntMatrix one(1, 1);
  one.at(0, 0) = 1;
  CHECK(centrally_symmetric(one) == from_rows({{0, 1, -1}, {1, 1, 1}}));

  IntMatrix a_pm = centrally_symmetric(order_matrix(fixtures::example_2_1_poset()));
  REQUIRE(a_pm.rows == 6);
  REQUIRE(a_pm.cols == 21);
  for (int c = 0; c < 21; ++c) CHECK(a_pm.at(5, c) == 1);

  IntMatrix with_zero(2, 2);
  with_zero.at(0, 0) = 1;
  CHECK_THROWS_AS(centrally_symmetric(with_zero), ZeroColumnError);
}

TEST_CASE("centrally symmetric round-trips back to the input") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    IntMatrix a = random_matrix(3, 5, seed);
    for (int c = 0; c < a.cols; ++c)
      if (a.column(c) == std::vector<Int>(a.rows, 0)) a.at(0, c) = 1;
    IntMatrix pm = centrally_symmetric(a);
    CHECK(pm.cols == 2 * a.cols + 1);
    IntMatrix left(a.rows, a.cols), right(a.rows, a.cols);
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) {
        left.at(r, c) = pm.at(r, 1 + c);
        right.at(r, c) = -pm.at(r, 1 + a.cols + c);
      }
    CHECK(left == a);
    CHECK(right == a);
  }
}

TEST_CASE("lattice span via Smith form") {
  CHECK(lattice_spans(IntMatrix::identity(4)).spans_full_lattice);

  IntMatrix doubled(2, 2);
  doubled.at(0, 0) = 2;
  doubled.at(1, 1) = 1;
  auto span = lattice_spans(doubled);
  CHECK_FALSE(span.spans_full_lattice);
  CHECK(span.rank == 2);

  CHECK(lattice_spans(fixtures::example_1_4_configuration())
            .spans_full_lattice);

  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : enumerate_all_posets(d)) {
      CHECK(lattice_spans(order_matrix(p)).spans_full_lattice);
      CHECK(lattice_spans(centrally_symmetric(order_matrix(p)))
                .spans_full_lattice);
    }
}

TEST_CASE("Smith form back-multiplies on fixtures and random matrices") {
  check_smith(fixtures::example_1_4_configuration());
  check_smith(fixtures::prop_2_4_matrix());
  check_smith(order_matrix(fixtures::example_2_1_poset()));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    check_smith(random_matrix(3 + seed % 3, 4 + seed % 4, seed));
  IntMatrix zero(3, 2);
  check_smith(zero);
  CHECK(smith_normal_form(zero).rank == 0);
}

TEST_CASE("unimodularity of the 3-antichain order matrix fails at {4,5,6}") {
  auto rep = is_unimodular(fixtures::prop_2_4_matrix());
  CHECK_FALSE(rep.unimodular);
  CHECK_FALSE(rep.minors_all_unit);
  REQUIRE(rep.witness_minor.has_value());
  CHECK(rep.witness_minor->first == std::vector<int>{4, 5, 6});
  CHECK(abs(rep.witness_minor->second) == 2);
}

TEST_CASE("chains give unimodular order matrices") {
  for (int d = 1; d <= 5; ++d) {
    auto rep = is_unimodular(order_matrix(chain_poset(d)));
    CHECK(rep.unimodular);
    CHECK(rep.minors_all_unit);
  }
}

TEST_CASE("the bundled 7x11 configuration is not unimodular") {
  auto rep = is_unimodular(fixtures::example_1_4_configuration());
  CHECK(rep.full_row_rank);
  CHECK_FALSE(rep.unimodular);
}

TEST_CASE("same absolute value counts as unimodular even when not unit") {
  IntMatrix two(1, 1);
  two.at(0, 0) = 2;
  auto rep = is_unimodular(two);
  CHECK(rep.unimodular);
  CHECK_FALSE(rep.minors_all_unit);
}

TEST_CASE("rank-deficient matrices are not unimodular") {
  IntMatrix wide(3, 2);
  CHECK_FALSE(is_unimodular(wide).unimodular);
  IntMatrix flat(2, 4);
  for (int c = 0; c < 4; ++c) flat.at(0, c) = 1;  // second row zero
  CHECK_FALSE(is_unimodular(flat).unimodular);
}

TEST_CASE("minor budget is enforced") {
  IntMatrix m = order_matrix(antichain_poset(4));
  CHECK_THROWS_AS(is_unimodular(m, 10), CapExceededError);
}

TEST_CASE("unimodularity equivalence with the three-antichain scan") {
  for (int d = 1; d <= 3; ++d)
    for (const Poset& p : enumerate_all_posets(d))
      CHECK(is_unimodular(order_matrix(p)).unimodular ==
            !has_three_antichain(p));
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(n, n);
    for (auto& v : m.entries) v = entry(rng);
    // cofactor oracle
    auto cofactor = [&](auto&& self, const IntMatrix& a) -> Int {
      if (a.rows == 1) return a.at(0, 0);
      Int det = 0;
      for (int c = 0; c < a.cols; ++c) {
        if (a.at(0, c) == 0) continue;
        IntMatrix sub(a.rows - 1, a.cols - 1);
        for (int r = 1; r < a.rows; ++r) {
          int cc = 0;
          for (int c2 = 0; c2 < a.cols; ++c2) {
            if (c2 == c) continue;
            sub.at(r - 1, cc++) = a.at(r, c2);
          }
        }
        Int term = a.at(0, c) * self(self, sub);
        det += (c % 2 == 0) ? term : -term;
      }
      return det;
    };
    CHECK(determinant(m) == cofactor(cofactor, m));
  }
}
