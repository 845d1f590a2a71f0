#include "doctest.h"
#include "edgering/binomial.hpp"

using namespace edgering;

namespace {
ExponentVec ev(std::initializer_list<Int> v) { return ExponentVec(v); }
}  // namespace

TEST_CASE("lex comparison") {
  MonomialOrder lex = MonomialOrder::lex();
  // x1 beats x2^2: lex ignores total degree
  CHECK(lex.greater(ev({1, 0}), ev({0, 2})));
  CHECK(lex.compare(ev({1, 0}), ev({1, 0})) == std::strong_ordering::equal);
  CHECK_THROWS_AS(lex.compare(ev({1}), ev({1, 0})), InvalidInput);

  // lead of x1x4x5x7^2 - x2x3x6x8^2 under lex with x1 > ... > x8
  ExponentVec u = {1, 0, 0, 1, 1, 0, 2, 0};
  ExponentVec v = {0, 1, 1, 0, 0, 1, 0, 2};
  Binomial b = make_binomial(v, u, lex);
  CHECK(b.lead == u);
  CHECK(b.trail == v);
}

TEST_CASE("grevlex comparison") {
  MonomialOrder grevlex = MonomialOrder::grevlex();
  // higher total degree wins
  CHECK(grevlex.greater(ev({0, 2}), ev({1, 0})));
  // equal degree: smaller exponent on the last differing variable wins
  CHECK(grevlex.greater(ev({1, 1, 0}), ev({1, 0, 1})));
  CHECK(grevlex.greater(ev({2, 0, 0}), ev({0, 2, 0})));
}

TEST_CASE("block order dominates with the front block") {
  MonomialOrder block = MonomialOrder::block(2, OrderKind::Lex, OrderKind::Lex);
  // front block decides even against a big back block
  CHECK(block.greater(ev({0, 1, 0, 0}), ev({0, 0, 9, 9})));
  // equal front blocks fall through to the back
  CHECK(block.greater(ev({1, 0, 2, 0}), ev({1, 0, 1, 5})));
  CHECK_THROWS_AS(MonomialOrder::block(1, OrderKind::Block, OrderKind::Lex), InvalidInput);
}

TEST_CASE("binomial orientation and degenerate input") {
  MonomialOrder lex = MonomialOrder::lex();
  CHECK_THROWS_AS(make_binomial(ev({1, 0}), ev({1, 0}), lex), InvalidInput);
  CHECK(!oriented_or_zero(ev({1, 0}), ev({1, 0}), lex).has_value());
  Binomial b = make_binomial(ev({0, 1}), ev({1, 0}), lex);
  CHECK(b.lead == ev({1, 0}));
  CHECK(b.disjoint_support());
}

TEST_CASE("exponent vector helpers") {
  CHECK(divides(ev({1, 0, 2}), ev({1, 1, 2})));
  CHECK(!divides(ev({1, 0, 3}), ev({1, 1, 2})));
  CHECK(exp_lcm(ev({1, 0, 2}), ev({0, 3, 1})) == ev({1, 3, 2}));
  CHECK(coprime(ev({1, 0}), ev({0, 2})));
  CHECK(!coprime(ev({1, 1}), ev({0, 2})));
  CHECK(total_degree(ev({1, 2, 3})) == 6);
  CHECK_THROWS_AS(exp_sub(ev({0, 1}), ev({1, 0})), InvalidInput);
}

TEST_CASE("binomial text round-trip") {
  MonomialOrder lex = MonomialOrder::lex();
  std::string text = "x1*x4*x5*x7^2 - x2*x3*x6*x8^2";
  Binomial b = parse_binomial(text, 8, lex);
  CHECK(to_string(b) == text);
  CHECK(b.lead == ev({1, 0, 0, 1, 1, 0, 2, 0}));

  // orientation is normalized even when the input is written backwards
  Binomial c = parse_binomial("x2*x3*x6*x8^2 - x1*x4*x5*x7^2", 8, lex);
  CHECK(c == b);

  CHECK(monomial_string(ev({0, 0})) == "1");
  CHECK(parse_monomial("1", 3) == ev({0, 0, 0}));
  Binomial unit = parse_binomial("x1 - 1", 2, lex);
  CHECK(to_string(unit) == "x1 - 1");

  CHECK_THROWS_AS(parse_monomial("x9", 8), InvalidInput);
  CHECK_THROWS_AS(parse_monomial("y1", 3), InvalidInput);
  CHECK_THROWS_AS(parse_binomial("x1*x2", 3, lex), InvalidInput);
  CHECK_THROWS_AS(parse_binomial("x1 - x1", 3, lex), InvalidInput);
}
