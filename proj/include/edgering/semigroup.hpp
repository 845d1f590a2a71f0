#ifndef EDGERING_SEMIGROUP_HPP
#define EDGERING_SEMIGROUP_HPP

#include "edgering/graph.hpp"
#include "edgering/simplicial.hpp"

namespace edgering {

/// Outcome of a semigroup membership query. The certificate c satisfies
/// A_G * c = s exactly when member is true.
struct MembershipResult {
  bool member = false;
  ExponentVec certificate;
};

/// Exhaustive decision of s in S_G by depth-first search over incident
/// edges of the smallest uncovered vertex, with failed residuals memoized
/// per query.
MembershipResult member(const Graph& g, const DegreeVec& s);

struct DeltaLimits {
  int max_r = 20;
  std::size_t max_faces = 2000000;
};

/// The degree-s complex on edge indices [1..r]: F is a face iff
/// s - n_F lies in S_G. Void when s itself is outside.
struct DeltaComplex {
  SimplicialComplex complex;
  DegreeVec degree;
};

DeltaComplex delta_complex(const Graph& g, const DegreeVec& s, const DeltaLimits& limits = {});

std::vector<Face> facets(const DeltaComplex& delta);

/// (1, 1, k+1, k+1, 1, 1, 2, ..., 2) on k+6 vertices.
DegreeVec paper_degree(int k);

}  // namespace edgering

#endif
