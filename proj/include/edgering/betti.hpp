#ifndef EDGERING_BETTI_HPP
#define EDGERING_BETTI_HPP

#include <iosfwd>
#include <map>

#include "edgering/homology.hpp"
#include "edgering/monomial_ideal.hpp"

namespace edgering {

/// Multigraded Betti numbers of the quotient S/I: (homological index,
/// multidegree) -> dimension. beta_{0,0} = 1 is always present.
class BettiTable {
public:
  void add(int i, const ExponentVec& a, Int dim);
  Int at(int i, const ExponentVec& a) const;
  const std::map<std::pair<int, ExponentVec>, Int>& entries() const { return entries_; }
  Int pd() const;

  /// Aggregated beta_{i,j} over total degree j, Macaulay-style layout.
  void print_triangular(std::ostream& out) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  std::map<std::pair<int, ExponentVec>, Int> entries_;
};

struct BettiLimits {
  std::size_t max_lattice = 200000;
  std::size_t max_complex_faces = 2000000;
};

/// Join closure of the minimal generators, sorted canonically.
std::vector<ExponentVec> lcm_lattice(const MonomialIdeal& ideal, const BettiLimits& limits = {});

/// Simplicial complex on supp(a) with W a face iff x^(a - 1_W) lies in
/// the ideal. Void when x^a itself is outside.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVec& a,
                                       const BettiLimits& limits = {});

/// Betti numbers via upper Koszul complexes over the lcm lattice:
/// beta_{i+1,a}(S/I) = dim H~_{i-1}(K^a(I)).
BettiTable betti_table(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::Q(),
                       int jobs = 1, const BettiLimits& limits = {});

/// Independent route: order complexes of open intervals (0,a) in the lcm
/// lattice give the same numbers.
BettiTable betti_gpw(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::Q(),
                     int jobs = 1, const BettiLimits& limits = {});

/// Projective dimension of S/I (0 for the zero ideal).
Int pd(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::Q(), int jobs = 1,
       const BettiLimits& limits = {});

}  // namespace edgering

#endif
