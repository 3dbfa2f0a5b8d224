#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csym/fixtures.hpp"
#include "csym/groebner.hpp"

using namespace csym;

namespace {

std::uint64_t mask_of(std::initializer_list<int> elems) {
  std::uint64_t m = 0;
  for (int e : elems) m |= 1ull << (e - 1);
  return m;
}

Monomial mono(std::initializer_list<std::pair<int, int>> exps) {
  Monomial m;
  for (auto [id, e] : exps) m = m.times(Monomial::variable(id, e));
  return m;
}

// A random poset that stays small enough for exhaustive pair checks: a random
// linear extension with each consistent relation kept with modest probability.
Poset random_poset(int d, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 1000003 + attempt);
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> relations;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (coin(rng) < 0.35) relations.emplace_back(perm[i], perm[j]);
    Poset p = from_cover_relations(d, relations);
    if (PosetRing(p).ideal_count() <= 40) return p;
  }
}

Monomial random_monomial(const PosetRing& ring, std::mt19937_64& rng,
                         int max_degree) {
  std::uniform_int_distribution<int> var(0, ring.var_count() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Monomial m;
  int target = deg(rng);
  for (int i = 0; i < target; ++i) m = m.times(Monomial::variable(var(rng)));
  return m;
}

}  // namespace

TEST_CASE("canonical order ranks z, then y/x per ideal") {
  PosetRing ring(chain_poset(1));
  MonomialOrder ord = canonical_order(ring);
  REQUIRE(ring.var_count() == 3);
  CHECK(ord.rank(ring.z_id()) == 0);
  CHECK(ord.rank(ring.y_id(0)) == 1);
  CHECK(ord.rank(ring.x_id(0)) == 2);

  PosetRing big(fixtures::example_2_1_poset());
  MonomialOrder big_ord = canonical_order(big);
  CHECK(big.var_count() == 21);
  CHECK(order_is_compatible(big, big_ord));
  // Rank respects inclusion within each block.
  for (int i = 0; i < big.ideal_count(); ++i)
    for (int j = 0; j < big.ideal_count(); ++j) {
      bool proper = i != j && (big.ideals[i] & ~big.ideals[j]) == 0;
      if (!proper) continue;
      CHECK(big_ord.rank(big.x_id(i)) < big_ord.rank(big.x_id(j)));
      CHECK(big_ord.rank(big.y_id(i)) < big_ord.rank(big.y_id(j)));
    }
}

TEST_CASE("random compatible orders are compatible and deterministic") {
  PosetRing ring(fixtures::example_2_1_poset());
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    MonomialOrder ord = random_compatible_order(ring, seed);
    CHECK(order_is_compatible(ring, ord));
    CHECK(ord.rank_of == random_compatible_order(ring, seed).rank_of);
  }
  CHECK(random_compatible_order(ring, 1).rank_of !=
        random_compatible_order(ring, 2).rank_of);

  PosetRing tiny(chain_poset(1));
  MonomialOrder ord = random_compatible_order(tiny, 99);
  CHECK(ord.rank(tiny.z_id()) == 0);
}

TEST_CASE("graded reverse lex comparison") {
  PosetRing ring(antichain_poset(2));
  MonomialOrder ord = canonical_order(ring);
  int z = ring.z_id();
  int x1 = ring.x_id(0), x2 = ring.x_id(1), x12 = ring.x_id(2);
  int y1 = ring.y_id(0);

  // Degree decides first.
  CHECK(compare(ord, mono({{x12, 3}}), mono({{x1, 1}, {x2, 1}})) > 0);
  // z^2 is smaller than any xy pair of the same degree.
  CHECK(compare(ord, mono({{z, 2}}), mono({{x1, 1}, {y1, 1}})) < 0);
  // The product containing the intersection variable is smaller.
  CHECK(compare(ord, mono({{x12, 1}, {z, 1}}), mono({{x1, 1}, {x2, 1}})) < 0);
  CHECK(compare(ord, mono({{x1, 1}}), mono({{x1, 1}})) == 0);
}

TEST_CASE("basis for a single element is x y - z^2") {
  PosetRing ring(chain_poset(1));
  auto basis = csym_binomial_basis(ring);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].lead == mono({{ring.x_id(0), 1}, {ring.y_id(0), 1}}));
  CHECK(basis[0].trail == mono({{ring.z_id(), 2}}));
  CHECK(binomial_to_string(ring, basis[0]) == "x{1}*y{1} - z^2");
}

TEST_CASE("basis for the 2-antichain: 1 + 1 + 8 binomials, 9 generators") {
  PosetRing ring(antichain_poset(2));
  auto basis = csym_binomial_basis(ring);
  CHECK(basis.size() == 10);
  int x_type = 0, y_type = 0, xy_type = 0;
  for (const auto& b : basis) {
    bool has_x = false, has_y = false;
    for (const auto& [id, e] : b.lead.exps) {
      if (ring.kind(id) == VarKind::X) has_x = true;
      if (ring.kind(id) == VarKind::Y) has_y = true;
    }
    if (has_x && has_y)
      ++xy_type;
    else if (has_x)
      ++x_type;
    else
      ++y_type;
  }
  CHECK(x_type == 1);
  CHECK(y_type == 1);
  CHECK(xy_type == 8);
  auto init = initial_ideal_minimal_generators(basis, canonical_order(ring));
  CHECK(init.minimal_generators.size() == 9);
  CHECK(init.all_squarefree);
  CHECK(init.all_quadratic);
}

TEST_CASE("bundled 5-element poset: 71 binomials, 66 minimal generators") {
  PosetRing ring(fixtures::example_2_1_poset());
  auto basis = csym_binomial_basis(ring);

  // Independent counts straight from the definitions.
  const auto& p = ring.poset;
  int incomparable_pairs = 0;
  for (int i = 0; i < ring.ideal_count(); ++i)
    for (int j = i + 1; j < ring.ideal_count(); ++j) {
      std::uint64_t a = ring.ideals[i], b = ring.ideals[j];
      if ((a & ~b) != 0 && (b & ~a) != 0) ++incomparable_pairs;
    }
  CHECK(incomparable_pairs == 12);
  int xy_triples = 0;
  for (int k = 1; k <= p.d; ++k) {
    int with_k_maximal = 0;
    for (auto mask : ring.ideals)
      if (maximal_elements_mask(p, mask) & (1ull << (k - 1)))
        ++with_k_maximal;
    xy_triples += with_k_maximal * with_k_maximal;
  }
  CHECK(xy_triples == 47);
  CHECK(basis.size() ==
        static_cast<std::size_t>(2 * incomparable_pairs + xy_triples));
  REQUIRE(basis.size() == 71);

  auto init = initial_ideal_minimal_generators(basis, canonical_order(ring));
  CHECK(init.lead_multiset_size == 71);
  CHECK(init.distinct_leads == 66);
  CHECK(init.minimal_generators.size() == 66);
  CHECK(init.all_squarefree);
  CHECK(init.all_quadratic);
}

TEST_CASE("every basis binomial lies in the kernel") {
  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : enumerate_all_posets(d)) {
      PosetRing ring(p);
      for (const auto& b : csym_binomial_basis(ring))
        CHECK(in_kernel(ring, b));
    }
  for (int d : {5, 6})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      PosetRing ring(random_poset(d, seed));
      for (const auto& b : csym_binomial_basis(ring))
        CHECK(in_kernel(ring, b));
    }
}

TEST_CASE("the first monomial is the lead under every compatible order") {
  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : enumerate_all_posets(d)) {
      PosetRing ring(p);
      auto basis = csym_binomial_basis(ring);
      std::vector<MonomialOrder> orders{canonical_order(ring)};
      for (std::uint64_t seed = 1; seed <= 5; ++seed)
        orders.push_back(random_compatible_order(ring, seed));
      for (const auto& ord : orders) {
        REQUIRE(order_is_compatible(ring, ord));
        for (const auto& b : basis)
          CHECK(compare(ord, b.lead, b.trail) > 0);
      }
    }
}

TEST_CASE("pi sends z to s and cancels x_I y_I") {
  PosetRing ring(fixtures::example_2_1_poset());
  auto img_z3 = pi_image(ring, mono({{ring.z_id(), 3}}));
  CHECK(img_z3.s_degree == 3);
  CHECK(img_z3.t == std::vector<long long>(5, 0));

  int idx_123 = ring.index_of_ideal.at(mask_of({1, 2, 3}));
  auto img_cancel = pi_image(
      ring, mono({{ring.x_id(idx_123), 1}, {ring.y_id(idx_123), 1}}));
  CHECK(img_cancel.s_degree == 2);
  CHECK(img_cancel.t == std::vector<long long>(5, 0));

  int idx_245 = ring.index_of_ideal.at(mask_of({2, 4, 5}));
  auto img = pi_image(
      ring, mono({{ring.x_id(idx_123), 1}, {ring.y_id(idx_245), 1}}));
  CHECK(img.s_degree == 2);
  CHECK(img.t == std::vector<long long>{1, 0, 1, -1, -1});

  // x_1 - z is not in the kernel; x_1 y_1 - z^2 is.
  PosetRing tiny(chain_poset(1));
  CHECK_FALSE(in_kernel(
      tiny, Binomial{mono({{tiny.x_id(0), 1}}), mono({{tiny.z_id(), 1}})}));
  CHECK(in_kernel(tiny,
                  Binomial{mono({{tiny.x_id(0), 1}, {tiny.y_id(0), 1}}),
                           mono({{tiny.z_id(), 2}})}));
}

TEST_CASE("normal form reduces deterministically and is idempotent") {
  PosetRing tiny(chain_poset(1));
  MarkedBasis tiny_basis(csym_binomial_basis(tiny), canonical_order(tiny));
  Monomial z3 = normal_form(
      mono({{tiny.x_id(0), 1}, {tiny.y_id(0), 1}, {tiny.z_id(), 1}}),
      tiny_basis);
  CHECK(z3 == mono({{tiny.z_id(), 3}}));
  // A monomial no lead divides is a fixed point.
  Monomial fixed = mono({{tiny.x_id(0), 2}, {tiny.z_id(), 1}});
  CHECK(normal_form(fixed, tiny_basis) == fixed);

  PosetRing ring(fixtures::example_2_1_poset());
  MarkedBasis basis(csym_binomial_basis(ring), canonical_order(ring));
  int i123 = ring.index_of_ideal.at(mask_of({1, 2, 3}));
  int i124 = ring.index_of_ideal.at(mask_of({1, 2, 4}));
  int i1234 = ring.index_of_ideal.at(mask_of({1, 2, 3, 4}));
  int i12 = ring.index_of_ideal.at(mask_of({1, 2}));
  Monomial reduced = normal_form(
      mono({{ring.x_id(i123), 1}, {ring.x_id(i124), 1}}), basis);
  Monomial expected = mono({{ring.x_id(i1234), 1}, {ring.x_id(i12), 1}});
  CHECK(reduced == expected);
  CHECK(normal_form(expected, basis) == expected);

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    Monomial m = random_monomial(ring, rng, 5);
    Monomial nf = normal_form(m, basis);
    CHECK(normal_form(nf, basis) == nf);
    for (const auto& g : basis.elements()) CHECK_FALSE(g.lead.divides(nf));
    CHECK(nf.deg == m.deg);
    CHECK(pi_image(ring, nf) == pi_image(ring, m));
  }
}

TEST_CASE("marking is validated") {
  PosetRing tiny(chain_poset(1));
  std::vector<Binomial> backwards{
      {mono({{tiny.z_id(), 2}}),
       mono({{tiny.x_id(0), 1}, {tiny.y_id(0), 1}})}};
  CHECK_THROWS_AS(MarkedBasis(backwards, canonical_order(tiny)),
                  NotMarkedError);
}

TEST_CASE("buchberger verification accepts the basis and rejects a fake") {
  PosetRing tiny(chain_poset(1));
  CHECK(buchberger_verify(csym_binomial_basis(tiny), canonical_order(tiny))
            .is_groebner);  // single binomial, no pairs

  // Fake basis on the 2-antichain ring: the S-binomial of the two leads
  // splits into y1*z^2 and x2*z^2, both irreducible, so the check must fail.
  PosetRing ring(antichain_poset(2));
  std::vector<Binomial> fake{
      {mono({{ring.x_id(0), 1}, {ring.x_id(1), 1}}),
       mono({{ring.z_id(), 2}})},
      {mono({{ring.x_id(0), 1}, {ring.y_id(0), 1}}),
       mono({{ring.z_id(), 2}})}};
  auto res = buchberger_verify(fake, canonical_order(ring));
  CHECK_FALSE(res.is_groebner);
  REQUIRE(res.failing_pair.has_value());
  CHECK(*res.failing_pair == std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST_CASE("buchberger passes for every poset up to d = 3, several orders") {
  for (int d = 1; d <= 3; ++d)
    for (const Poset& p : enumerate_all_posets(d)) {
      PosetRing ring(p);
      auto basis = csym_binomial_basis(ring);
      CHECK(buchberger_verify(basis, canonical_order(ring)).is_groebner);
      for (std::uint64_t seed = 1; seed <= 2; ++seed)
        CHECK(buchberger_verify(basis, random_compatible_order(ring, seed))
                  .is_groebner);
    }
}

TEST_CASE("buchberger passes on random posets with d = 5 and 6") {
  for (int d : {5, 6})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      PosetRing ring(random_poset(d, seed));
      auto basis = csym_binomial_basis(ring);
      CHECK(buchberger_verify(basis, canonical_order(ring)).is_groebner);
      CHECK(buchberger_verify(basis, random_compatible_order(ring, seed + 77))
                .is_groebner);
    }
}

TEST_CASE("standard monomial counts") {
  PosetRing tiny(chain_poset(1));
  auto basis = csym_binomial_basis(tiny);
  MonomialOrder ord = canonical_order(tiny);
  for (int t = 0; t <= 8; ++t)
    CHECK(standard_monomial_count(basis, ord, tiny.var_count(), t) ==
          Int(2 * t + 1));

  PosetRing ring(fixtures::example_2_1_poset());
  auto big_basis = csym_binomial_basis(ring);
  MonomialOrder big_ord = canonical_order(ring);
  CHECK(standard_monomial_count(big_basis, big_ord, ring.var_count(), 0) == 1);
  CHECK(standard_monomial_count(big_basis, big_ord, ring.var_count(), 1) ==
        Int(ring.var_count()));
  CHECK_THROWS_AS(
      standard_monomial_count(big_basis, big_ord, ring.var_count(), 99),
      CapExceededError);
}

TEST_CASE("semigroup degree counts") {
  PosetRing tiny(chain_poset(1));
  IntMatrix a_pm = centrally_symmetric(order_matrix(tiny.poset));
  CHECK(semigroup_degree_count(a_pm, 0) == 1);
  CHECK(semigroup_degree_count(a_pm, 1) == 3);  // distinct columns
  CHECK(semigroup_degree_count(a_pm, 2) == 5);  // first coords -2..2

  IntMatrix no_ones(2, 2);
  no_ones.at(0, 0) = 1;
  no_ones.at(1, 1) = 1;
  CHECK_THROWS_AS(semigroup_degree_count(no_ones, 1), RangeError);
  CHECK_THROWS_AS(semigroup_degree_count(a_pm, 99), CapExceededError);
}

TEST_CASE("degree-bounded kernel enumeration") {
  // Affinely independent columns: the kernel is trivial in low degree.
  IntMatrix simplex(4, 3);
  for (int c = 0; c < 3; ++c) {
    simplex.at(c, c) = 1;
    simplex.at(3, c) = 1;
  }
  CHECK(degree_bounded_kernel(simplex, 3).empty());

  PosetRing tiny(chain_poset(1));
  IntMatrix a_pm = centrally_symmetric(order_matrix(tiny.poset));
  auto kernel = degree_bounded_kernel(a_pm, 2);
  REQUIRE(kernel.size() == 1);
  // Columns: 0 = z, 1 = x, 2 = y; the one relation is x*y - z^2.
  CHECK(kernel[0].lead == mono({{1, 1}, {2, 1}}));
  CHECK(kernel[0].trail == mono({{0, 2}}));

  CHECK_THROWS_AS(degree_bounded_kernel(a_pm, 3, 2), CapExceededError);
}

TEST_CASE("kernel binomials of the poset ring agree with pi") {
  PosetRing ring(antichain_poset(2));
  IntMatrix a_pm = centrally_symmetric(order_matrix(ring.poset));
  for (const auto& b : degree_bounded_kernel(a_pm, 3)) {
    CHECK(in_kernel(ring, b));  // ids coincide with configuration columns
    CHECK(b.lead.deg == b.trail.deg);
    CHECK(b.lead != b.trail);
  }
}

TEST_CASE("quadratic generation holds for poset configurations") {
  for (const Poset& p :
       {chain_poset(1), antichain_poset(2), fixtures::example_2_1_poset()}) {
    IntMatrix a_pm = centrally_symmetric(order_matrix(p));
    MonomialOrder ord;
    ord.rank_of.resize(a_pm.cols);
    for (int i = 0; i < a_pm.cols; ++i) ord.rank_of[i] = i;
    auto res = quadratic_generation_test(a_pm, ord);
    CHECK(res.generated_in_degree_two_up_to_3);
    CHECK_FALSE(res.witness.has_value());
  }
  IntMatrix any(1, 1);
  any.at(0, 0) = 1;
  MonomialOrder ord;
  ord.rank_of = {0};
  CHECK_THROWS_AS(quadratic_generation_test(any, ord, 2), CompletionCapError);
}

TEST_CASE("triple count identity on all posets up to d = 3") {
  for (int d = 1; d <= 3; ++d)
    for (const Poset& p : enumerate_all_posets(d)) {
      PosetRing ring(p);
      auto basis = csym_binomial_basis(ring);
      MonomialOrder ord = canonical_order(ring);
      IntMatrix a_pm = centrally_symmetric(order_matrix(p));
      for (int t = 0; t <= 4; ++t)
        CHECK(standard_monomial_count(basis, ord, ring.var_count(), t) ==
              semigroup_degree_count(a_pm, t));
    }
}

TEST_CASE("basis text matches the frozen listing") {
  PosetRing ring(fixtures::example_2_1_poset());
  std::ostringstream got;
  for (const auto& b : csym_binomial_basis(ring))
    got << binomial_to_string(ring, b) << "\n";
  std::ifstream golden("data/example_2_1_basis.txt");
  REQUIRE(golden.good());
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(got.str() == want.str());
}
