#include "doctest.h"
#include "edgering/betti.hpp"
#include "edgering/depth.hpp"
#include "test_util.hpp"

using namespace edgering;

namespace {
ExponentVec ev(std::initializer_list<Int> v) { return ExponentVec(v); }

MonomialIdeal ideal_of(std::size_t nvars, std::initializer_list<const char*> monomials) {
  std::vector<ExponentVec> gens;
  for (const char* m : monomials) gens.push_back(parse_monomial(m, nvars));
  return MonomialIdeal(nvars, std::move(gens));
}
}  // namespace

TEST_CASE("minimalize keeps the divisibility antichain") {
  CHECK(minimalize(2, {ev({1, 0}), ev({1, 1})}).gens() == std::vector<ExponentVec>{ev({1, 0})});
  CHECK(minimalize(2, {}).is_zero());

  // type-I leads for k=3 are already minimal; x8 and x11=x_{2(k-1)+7}... the
  // even/odd complements do not appear
  MonomialIdeal iprime = ideal_of(12, {"x7*x10", "x7*x12", "x9*x12"});
  CHECK(iprime.gens().size() == 3);
  for (const ExponentVec& g : iprime.gens()) {
    CHECK(g[7] == 0);   // x8
    CHECK(g[10] == 0);  // x11
  }
}

TEST_CASE("intersection and sum") {
  MonomialIdeal a = ideal_of(3, {"x1"});
  MonomialIdeal b = ideal_of(3, {"x2"});
  CHECK(intersect(a, b) == ideal_of(3, {"x1*x2"}));
  CHECK(intersect(a, a) == a);
  CHECK(sum(a, b) == ideal_of(3, {"x1", "x2"}));
  CHECK_THROWS_AS(intersect(a, ideal_of(2, {"x1"})), InvalidInput);

  // paper decomposition at k=2: I1 cap I2 = in(I_G), I1 + I2 = (x1x4x5) + I1
  MonomialIdeal iprime = ideal_of(10, {"x7*x10"});
  MonomialIdeal i1 = sum(ideal_of(10, {"x7^2", "x7*x9", "x9^2"}), iprime);
  MonomialIdeal i2 = sum(ideal_of(10, {"x1*x4*x5"}), iprime);
  MonomialIdeal in_ideal =
      ideal_of(10, {"x7*x10", "x1*x4*x5*x7^2", "x1*x4*x5*x7*x9", "x1*x4*x5*x9^2"});
  CHECK(intersect(i1, i2) == in_ideal);
  CHECK(sum(i1, i2) == sum(ideal_of(10, {"x1*x4*x5"}), i1));
}

TEST_CASE("upper Koszul complexes of the named examples") {
  // principal, a = the generator: only the empty face
  SimplicialComplex k1 = upper_koszul_complex(ideal_of(1, {"x1"}), ev({1}));
  CHECK(k1.dim() == -1);
  CHECK(k1.face_count() == 1);

  SimplicialComplex k2 = upper_koszul_complex(ideal_of(2, {"x1*x2"}), ev({1, 1}));
  CHECK(k2.dim() == -1);

  SimplicialComplex k3 = upper_koszul_complex(ideal_of(3, {"x1*x2", "x2*x3"}), ev({1, 1, 1}));
  CHECK(k3.face_count() == 3);  // {}, {1}, {3}
  CHECK(k3.is_face(Face{1}));
  CHECK(k3.is_face(Face{3}));
  CHECK(!k3.is_face(Face{2}));

  // degree outside the ideal: void
  CHECK(upper_koszul_complex(ideal_of(2, {"x1*x2"}), ev({1, 0})).is_void());
}

TEST_CASE("betti tables of the classics") {
  // principal ideal: pd(S/I) = 1 with a single first syzygy entry
  BettiTable principal = betti_table(ideal_of(8, {"x1*x4*x5*x7^2"}));
  CHECK(principal.pd() == 1);
  CHECK(principal.at(1, ev({1, 0, 0, 1, 1, 0, 2, 0})) == 1);
  CHECK(principal.entries().size() == 2);  // beta_{0,0} and the generator

  // two Koszul variables
  BettiTable koszul = betti_table(ideal_of(2, {"x1", "x2"}));
  CHECK(koszul.pd() == 2);
  CHECK(koszul.at(1, ev({1, 0})) == 1);
  CHECK(koszul.at(1, ev({0, 1})) == 1);
  CHECK(koszul.at(2, ev({1, 1})) == 1);

  // the two-generator chain: beta_2 at x1x2x3
  BettiTable chain = betti_table(ideal_of(3, {"x1*x2", "x2*x3"}));
  CHECK(chain.pd() == 2);
  CHECK(chain.at(2, ev({1, 1, 1})) == 1);

  // zero ideal: S itself
  CHECK(betti_table(MonomialIdeal(4)).pd() == 0);
  CHECK(pd(MonomialIdeal(4)) == 0);
}

TEST_CASE("the two betti routes agree on small cases") {
  for (auto& ideal : {ideal_of(2, {"x1", "x2"}), ideal_of(3, {"x1*x2", "x2*x3"}),
                      ideal_of(3, {"x1^2", "x1*x2", "x2^3", "x3"})}) {
    CHECK(betti_table(ideal) == betti_gpw(ideal));
  }
}

TEST_CASE("betti routes agree on seeded random ideals") {
  testutil::Rng rng(20240817);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal ideal = testutil::random_monomial_ideal(rng);
    BettiTable a = betti_table(ideal);
    BettiTable b = betti_gpw(ideal);
    CHECK(a == b);
  }
}

TEST_CASE("pd of the family initial ideals and disjoint additivity") {
  MonomialOrder lex = MonomialOrder::lex();
  Int expected[] = {0, 1, 3, 5};  // 2k-1 for k = 1..3
  for (int k = 1; k <= 3; ++k) {
    MonomialIdeal in_ideal = initial_ideal(toric_ideal(family_gk6(k), lex));
    CHECK(pd(in_ideal) == expected[k]);
  }

  // (x1x4x5) + I with x1,x4,x5 absent from I: pd goes up by exactly 1
  MonomialIdeal iprime = ideal_of(10, {"x7*x10", "x9*x10"});
  MonomialIdeal with_cube = sum(ideal_of(10, {"x1*x4*x5"}), iprime);
  CHECK(pd(with_cube) == pd(iprime) + 1);
}

TEST_CASE("short exact sequence bound and syzygy ceiling") {
  testutil::Rng rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    MonomialIdeal a = testutil::random_monomial_ideal(rng, 5, 4, 2);
    MonomialIdeal b = testutil::random_monomial_ideal(rng, 5, 4, 2);
    while (b.nvars() != a.nvars()) b = testutil::random_monomial_ideal(rng, 5, 4, 2);
    Int pd_inter = pd(intersect(a, b));
    Int pd_a = pd(a), pd_b = pd(b), pd_sum = pd(sum(a, b));
    CHECK(pd_inter <= std::max({pd_a, pd_b, pd_sum - 1}));

    // Hilbert syzygy ceiling: pd bounded by the variables actually used
    Int used = 0;
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      bool appears = false;
      for (const ExponentVec& g : a.gens()) appears = appears || g[v] > 0;
      if (appears) ++used;
    }
    CHECK(pd_a <= used);
  }

  // the paper's I1, I2 for k <= 4
  MonomialOrder lex = MonomialOrder::lex();
  for (int k = 1; k <= 4; ++k) {
    std::size_t r = static_cast<std::size_t>(2 * k + 6);
    std::vector<ExponentVec> odd_pairs, ti_leads;
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j) {
        ExponentVec m(r, 0);
        m[static_cast<std::size_t>(2 * (i - 1) + 6)] += 1;
        m[static_cast<std::size_t>(2 * (j - 1) + 6)] += 1;
        odd_pairs.push_back(m);
        if (j > i) {
          ExponentVec t(r, 0);
          t[static_cast<std::size_t>(2 * (i - 1) + 6)] = 1;
          t[static_cast<std::size_t>(2 * (j - 1) + 7)] = 1;
          ti_leads.push_back(t);
        }
      }
    MonomialIdeal iprime(r, ti_leads);
    MonomialIdeal i1 = sum(MonomialIdeal(r, odd_pairs), iprime);
    ExponentVec x145(r, 0);
    x145[0] = x145[3] = x145[4] = 1;
    MonomialIdeal i2 = sum(MonomialIdeal(r, {x145}), iprime);
    Int lhs = pd(intersect(i1, i2));
    CHECK(lhs <= std::max({pd(i1), pd(i2), pd(sum(i1, i2)) - 1}));
  }
}

TEST_CASE("lattice guard trips") {
  BettiLimits limits;
  limits.max_lattice = 2;
  MonomialIdeal ideal = ideal_of(3, {"x1", "x2", "x3"});
  CHECK_THROWS_AS(lcm_lattice(ideal, limits), GuardLimit);
}
