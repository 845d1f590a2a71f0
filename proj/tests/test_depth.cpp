#include "doctest.h"
#include "edgering/depth.hpp"

using namespace edgering;

namespace {
const MonomialOrder kLex = MonomialOrder::lex();
}

TEST_CASE("depth lower bounds via the initial ideal") {
  LowerBoundResult k1 = depth_lower(family_gk6(1), kLex);
  CHECK(k1.pd_initial == 1);
  CHECK(k1.value == 7);  // 8 - 1

  LowerBoundResult k2 = depth_lower(family_gk6(2), kLex);
  CHECK(k2.pd_initial == 3);
  CHECK(k2.value == 7);  // 10 - 3

  LowerBoundResult k3 = depth_lower(new_graph(3, {{1, 2}, {1, 3}, {2, 3}}), kLex);
  CHECK(k3.pd_initial == 0);
  CHECK(k3.value == 3);

  CHECK_THROWS_AS(depth_lower(new_graph(4, {{1, 2}, {3, 4}}), kLex), InvalidInput);
}

TEST_CASE("candidate degrees recover the paper degree") {
  std::vector<DegreeVec> k1 = candidate_degrees(family_gk6(1), kLex);
  REQUIRE(!k1.empty());
  CHECK(k1.front() == paper_degree(1));

  std::vector<DegreeVec> k2 = candidate_degrees(family_gk6(2), kLex);
  REQUIRE(!k2.empty());
  CHECK(k2.front() == paper_degree(2));
  // the top Betti witness maps to the same degree
  bool found = false;
  for (const DegreeVec& s : k2) found = found || s == paper_degree(2);
  CHECK(found);

  CHECK(candidate_degrees(new_graph(3, {{1, 2}, {1, 3}, {2, 3}}), kLex).empty());
}

TEST_CASE("depth upper bounds from homology certificates") {
  Graph g1 = family_gk6(1);
  UpperBoundResult u1 = depth_upper(g1, {paper_degree(1)});
  CHECK(u1.certified);
  CHECK(u1.value == 7);  // H~_0 != 0 gives pd >= 1, depth <= 8-1

  Graph g2 = family_gk6(2);
  UpperBoundResult u2 = depth_upper(g2, {paper_degree(2)});
  CHECK(u2.certified);
  CHECK(u2.value == 7);  // H~_2 != 0 gives pd >= 3, depth <= 10-3
  bool has_top = false;
  for (const DepthCertificate& c : u2.certificates) has_top = has_top || (c.j == 2 && c.dim >= 1);
  CHECK(has_top);

  // a degree outside the semigroup contributes nothing
  UpperBoundResult skip = depth_upper(g1, {DegreeVec{1, 0, 0, 0, 0, 0, 0}});
  CHECK(!skip.certified);
}

TEST_CASE("depth reports for the family and the triangle") {
  for (int k = 1; k <= 2; ++k) {
    DepthReport rep = depth_report(family_gk6(k));
    CHECK(rep.exact);
    CHECK(rep.depth_lower == 7);
    CHECK(rep.depth_upper == 7);
    CHECK(rep.krull == k + 6);
    CHECK(rep.order_name == "lex");
  }

  DepthReport tri = depth_report(new_graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(tri.exact);
  CHECK(tri.depth_lower == 3);
  CHECK(tri.depth_upper == 3);
  CHECK(tri.krull == 3);
  CHECK(!tri.upper_certified);  // the dimension bound closes the gap
}

TEST_CASE("pendant edge shifts every quantity by one") {
  Graph base = family_gk6(1);
  DepthReport rep0 = depth_report(base);
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : base.edges()) edges.push_back({e.u, e.v});
  edges.push_back({1, 8});
  DepthReport rep1 = depth_report(new_graph(8, edges));
  CHECK(rep1.r == rep0.r + 1);
  CHECK(rep1.krull == rep0.krull + 1);
  CHECK(rep1.depth_lower == rep0.depth_lower + 1);
  CHECK(rep1.depth_upper == rep0.depth_upper + 1);
}

TEST_CASE("theorem construction reports") {
  DepthReport rep = depth_report(theorem_construction(8, 8));
  CHECK(rep.exact);
  CHECK(rep.depth_lower == 8);
  CHECK(rep.krull == 8);
}

TEST_CASE("additivity checks") {
  CHECK(verify_additivity(7, 7));
  CHECK(verify_additivity(8, 8));
  CHECK_THROWS_AS(verify_additivity(6, 7), InvalidInput);
  CHECK_THROWS_AS(verify_additivity(7, 20), GuardLimit);
}

TEST_CASE("family recognition") {
  CHECK(recognize_family(family_gk6(3)) == 3);
  CHECK(!recognize_family(new_graph(3, {{1, 2}, {1, 3}, {2, 3}})).has_value());
  CHECK(!recognize_family(theorem_construction(8, 8)).has_value());
}

TEST_CASE("verify_paper checklist passes for k=1") {
  std::vector<PaperCheckResult> checks = verify_paper(1);
  CHECK(checks.size() >= 7);
  for (const PaperCheckResult& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}
