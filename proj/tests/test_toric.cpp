#include "doctest.h"
#include "edgering/toric.hpp"

#include <set>

using namespace edgering;

namespace {

const MonomialOrder kLex = MonomialOrder::lex();

// Brute-force kernel oracle: all pure binomials x^u - x^v with disjoint
// supports, total degree of u at most `max_deg`, and equal incidence
// image. Independent of the Groebner machinery.
std::vector<std::pair<ExponentVec, ExponentVec>> kernel_binomials_upto(const Graph& g, Int max_deg) {
  std::size_t r = static_cast<std::size_t>(g.edge_count());
  std::vector<ExponentVec> monomials;
  ExponentVec cur(r, 0);
  // enumerate all exponent vectors of total degree <= max_deg
  std::function<void(std::size_t, Int)> rec = [&](std::size_t pos, Int left) {
    if (pos == r) {
      monomials.push_back(cur);
      return;
    }
    for (Int e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(0, max_deg);

  std::vector<std::pair<ExponentVec, ExponentVec>> found;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (std::size_t j = i + 1; j < monomials.size(); ++j) {
      const ExponentVec& u = monomials[i];
      const ExponentVec& v = monomials[j];
      if (!disjoint_supports(u, v)) continue;
      if (t_degree(g, u) == t_degree(g, v)) found.push_back({u, v});
    }
  return found;
}

}  // namespace

TEST_CASE("walk binomial counts and contents") {
  WalkBinomialSet w1 = walk_binomials_family(1);
  CHECK(w1.type_I.empty());
  CHECK(w1.type_III.empty());
  REQUIRE(w1.type_II.size() == 1);
  CHECK(to_string(w1.type_II[0]) == "x1*x4*x5*x7^2 - x2*x3*x6*x8^2");

  WalkBinomialSet w2 = walk_binomials_family(2);
  std::set<std::string> got;
  for (const Binomial& b : w2.all()) got.insert(to_string(b));
  std::set<std::string> expected = {
      "x7*x10 - x8*x9",
      "x1*x4*x5*x7^2 - x2*x3*x6*x8^2",
      "x1*x4*x5*x9^2 - x2*x3*x6*x10^2",
      "x1*x4*x5*x7*x9 - x2*x3*x6*x8*x10",
  };
  CHECK(got == expected);

  for (int k = 1; k <= 5; ++k) {
    WalkBinomialSet w = walk_binomials_family(k);
    std::size_t kk = static_cast<std::size_t>(k);
    CHECK(w.type_I.size() == kk * (kk - 1) / 2);
    CHECK(w.type_II.size() == kk);
    CHECK(w.type_III.size() == kk * (kk - 1) / 2);
    CHECK(w.all().size() == kk * kk);
    Graph g = family_gk6(k);
    for (const Binomial& b : w.all()) {
      CHECK(b.disjoint_support());
      CHECK(t_degree(g, b.lead) == t_degree(g, b.trail));
    }
  }
  CHECK_THROWS_AS(walk_binomials_family(0), InvalidInput);
}

TEST_CASE("toric ideal of a triangle is zero") {
  Graph k3 = new_graph(3, {{1, 2}, {1, 3}, {2, 3}});
  // oracle first: no kernel binomials up to degree 3
  CHECK(kernel_binomials_upto(k3, 3).empty());
  BinomialBasis basis = toric_ideal(k3, kLex);
  CHECK(basis.elements.empty());
  CHECK(basis.reduced);
}

TEST_CASE("toric ideal of a 4-cycle is one quadric") {
  Graph c4 = new_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  // oracle: exactly one kernel binomial with lead degree <= 2
  auto pairs = kernel_binomials_upto(c4, 2);
  REQUIRE(pairs.size() == 1);
  BinomialBasis basis = toric_ideal(c4, kLex);
  REQUIRE(basis.elements.size() == 1);
  CHECK(to_string(basis.elements[0]) == "x1*x3 - x2*x4");
}

TEST_CASE("family k=1 toric ideal matches the walk binomial") {
  BinomialBasis basis = toric_ideal(family_gk6(1), kLex);
  REQUIRE(basis.elements.size() == 1);
  CHECK(to_string(basis.elements[0]) == "x1*x4*x5*x7^2 - x2*x3*x6*x8^2");
}

TEST_CASE("walks and elimination agree for small k") {
  for (int k = 1; k <= 3; ++k) {
    GbComparison cmp = verify_family_gb(k);
    CHECK(cmp.equal_reduced);
    CHECK(cmp.equal_raw);
    CHECK(cmp.walks_already_reduced);
    CHECK(cmp.only_walks.empty());
    CHECK(cmp.only_elimination.empty());
  }
  GbComparison c3 = verify_family_gb(3);
  CHECK(toric_ideal(family_gk6(3), kLex).elements.size() == 9);
  CHECK(c3.equal_reduced);
}

TEST_CASE("toric basis elements are t-homogeneous") {
  for (int k = 1; k <= 3; ++k) {
    Graph g = family_gk6(k);
    BinomialBasis basis = toric_ideal(g, kLex);
    for (const Binomial& b : basis.elements) {
      CHECK(b.disjoint_support());
      CHECK(t_degree(g, b.lead) == t_degree(g, b.trail));
    }
  }
}

TEST_CASE("pendant edge variables never appear in the basis") {
  Graph g = theorem_construction(9, 10);  // family k=2 plus pendants at 11, 12
  BinomialBasis basis = toric_ideal(g, kLex);
  CHECK(!basis.elements.empty());
  for (const Binomial& b : basis.elements) {
    for (std::size_t l = 10; l < 12; ++l) {  // the two pendant columns
      CHECK(b.lead[l] == 0);
      CHECK(b.trail[l] == 0);
    }
  }
}

TEST_CASE("grevlex route reorients the same ideal") {
  BinomialBasis basis = toric_ideal(family_gk6(1), MonomialOrder::grevlex());
  REQUIRE(basis.elements.size() == 1);
  CHECK(to_string(basis.elements[0]) == "x1*x4*x5*x7^2 - x2*x3*x6*x8^2");
}
