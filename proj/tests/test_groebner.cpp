#include "doctest.h"
#include "edgering/groebner.hpp"
#include "edgering/toric.hpp"

#include <algorithm>
#include <random>

using namespace edgering;

namespace {
ExponentVec ev(std::initializer_list<Int> v) { return ExponentVec(v); }
const MonomialOrder kLex = MonomialOrder::lex();
}  // namespace

TEST_CASE("normal form basics") {
  // reduce an element by itself
  Binomial b = parse_binomial("x7*x10 - x8*x9", 10, kLex);
  CHECK(!normal_form(b, std::span<const Binomial>(&b, 1), kLex).has_value());

  // nothing divisible: returned unchanged
  Binomial c = parse_binomial("x1*x2 - x3*x4", 4, kLex);
  Binomial d = parse_binomial("x1^2 - x3*x4", 4, kLex);
  auto nf = normal_form(c, std::span<const Binomial>(&d, 1), kLex);
  CHECK(nf == c);
}

TEST_CASE("the type-I S-pair reduces through another type-I element") {
  // f, g are the 4-cycle binomials sharing their first path; k=3 family
  WalkBinomialSet walks = walk_binomials_family(3);
  const std::vector<Binomial>& t1 = walks.type_I;  // pairs (1,2),(1,3),(2,3)
  REQUIRE(t1.size() == 3);
  auto s = spair(t1[0], t1[1], kLex);
  REQUIRE(s.has_value());
  // reduces to zero via the (2,3) element times x8
  CHECK(!normal_form(*s, std::span<const Binomial>(t1.data(), t1.size()), kLex).has_value());
}

TEST_CASE("buchberger on tiny inputs") {
  // single generator: principal ideal, no pairs
  BinomialBasis one = buchberger({parse_binomial("x1 - x2", 2, kLex)}, kLex, 2);
  CHECK(one.elements.size() == 1);
  CHECK(to_string(one.elements[0]) == "x1 - x2");

  BinomialBasis empty = buchberger({}, kLex, 3);
  CHECK(empty.elements.empty());
  CHECK(empty.reduced);

  // k=1 family: the single type-II binomial is its own reduced basis
  WalkBinomialSet walks = walk_binomials_family(1);
  BinomialBasis gb = buchberger(walks.all(), kLex, walks.nvars);
  REQUIRE(gb.elements.size() == 1);
  CHECK(to_string(gb.elements[0]) == "x1*x4*x5*x7^2 - x2*x3*x6*x8^2");
}

TEST_CASE("k=2 walk binomials are already a reduced basis") {
  WalkBinomialSet walks = walk_binomials_family(2);
  std::vector<Binomial> gens = walks.all();
  REQUIRE(gens.size() == 4);
  BinomialBasis gb = buchberger(gens, kLex, walks.nvars);
  CHECK(gb.elements.size() == 4);
  std::vector<Binomial> sorted_input = auto_reduce(gens, kLex);
  CHECK(gb.elements == sorted_input);
}

TEST_CASE("reduced basis is invariant under generator permutation") {
  WalkBinomialSet walks = walk_binomials_family(3);
  std::vector<Binomial> gens = walks.all();
  BinomialBasis reference = buchberger(gens, kLex, walks.nvars);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(buchberger(gens, kLex, walks.nvars).elements == reference.elements);
  }
}

TEST_CASE("every input generator reduces to zero against the output") {
  WalkBinomialSet walks = walk_binomials_family(3);
  BinomialBasis gb = buchberger(walks.all(), kLex, walks.nvars);
  for (const Binomial& g : walks.all())
    CHECK(!normal_form(g, gb).has_value());
}

TEST_CASE("a basis with shared-factor output still reduces correctly") {
  // (x1x2 - x3x4, x1 - x3): the S-pair leaves x3*(x2 - x4)
  std::vector<Binomial> gens = {parse_binomial("x1*x2 - x3*x4", 4, kLex),
                                parse_binomial("x1 - x3", 4, kLex)};
  BinomialBasis gb = buchberger(gens, kLex, 4);
  Binomial mixed = parse_binomial("x2*x3 - x3*x4", 4, kLex);
  CHECK(!normal_form(mixed, gb).has_value());
  for (const Binomial& g : gens) CHECK(!normal_form(g, gb).has_value());
}

TEST_CASE("initial ideal of reduced bases") {
  WalkBinomialSet walks = walk_binomials_family(2);
  BinomialBasis gb = buchberger(walks.all(), kLex, walks.nvars);
  MonomialIdeal in = initial_ideal(gb);
  MonomialIdeal expected(10, {ev({0, 0, 0, 0, 0, 0, 1, 0, 0, 1}),    // x7*x10
                              ev({1, 0, 0, 1, 1, 0, 2, 0, 0, 0}),    // x1*x4*x5*x7^2
                              ev({1, 0, 0, 1, 1, 0, 1, 0, 1, 0}),    // x1*x4*x5*x7*x9
                              ev({1, 0, 0, 1, 1, 0, 0, 0, 2, 0})});  // x1*x4*x5*x9^2
  CHECK(in == expected);

  BinomialBasis not_reduced;
  not_reduced.nvars = 2;
  not_reduced.elements = {parse_binomial("x1 - x2", 2, kLex)};
  CHECK_THROWS_AS(initial_ideal(not_reduced), InvalidInput);

  BinomialBasis zero = buchberger({}, kLex, 5);
  CHECK(initial_ideal(zero).is_zero());
}

TEST_CASE("basis elements of toric inputs stay pure differences with equal t-degree") {
  Graph g = family_gk6(2);
  WalkBinomialSet walks = walk_binomials_family(2);
  BinomialBasis gb = buchberger(walks.all(), kLex, walks.nvars);
  for (const Binomial& b : gb.elements) {
    CHECK(b.disjoint_support());
    CHECK(t_degree(g, b.lead) == t_degree(g, b.trail));
  }
}
