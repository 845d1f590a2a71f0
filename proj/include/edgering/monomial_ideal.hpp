#ifndef EDGERING_MONOMIAL_IDEAL_HPP
#define EDGERING_MONOMIAL_IDEAL_HPP

#include <vector>

#include "edgering/binomial.hpp"

namespace edgering {

/// Monomial ideal held by its minimal generating set (an antichain under
/// divisibility, sorted canonically). Empty generator list = zero ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVec> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVec>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Membership of a monomial: divisibility by some generator.
  bool contains(const ExponentVec& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t nvars_;
  std::vector<ExponentVec> gens_;
};

MonomialIdeal minimalize(std::size_t nvars, const std::vector<ExponentVec>& gens);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace edgering

#endif
