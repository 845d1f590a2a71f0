#ifndef EDGERING_TORIC_HPP
#define EDGERING_TORIC_HPP

#include "edgering/groebner.hpp"

namespace edgering {

/// The primitive even closed walk binomials of family_gk6(k), oriented for
/// the lex order. Type I are the 4-cycles between two connecting paths;
/// types II/III run through both triangles via one resp. two paths.
struct WalkBinomialSet {
  int k = 0;
  std::size_t nvars = 0;
  std::vector<Binomial> type_I;    // C(k,2)
  std::vector<Binomial> type_II;   // k
  std::vector<Binomial> type_III;  // C(k,2)

  std::vector<Binomial> all() const;
};

WalkBinomialSet walk_binomials_family(int k);

/// Toric ideal of an arbitrary graph as a reduced Groebner basis under
/// `order`: eliminate the vertex variables from (x_l - t_i t_j) under a
/// block order, then re-reduce the edge-variable part.
BinomialBasis toric_ideal(const Graph& g, const MonomialOrder& order,
                          const BuchbergerLimits& limits = {});

/// Lemma check for the family: the walk binomials vs. the elimination
/// route must give the same reduced lex basis.
struct GbComparison {
  bool equal_raw = false;      // computed reduced GB == walk set as listed
  bool equal_reduced = false;  // computed reduced GB == auto-reduced walk set
  bool walks_already_reduced = false;
  std::vector<Binomial> only_walks;        // symmetric difference, walk side
  std::vector<Binomial> only_elimination;  // symmetric difference, elimination side
};

GbComparison verify_family_gb(int k, const BuchbergerLimits& limits = {});

}  // namespace edgering

#endif
