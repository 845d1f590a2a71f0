#include "edgering/monomial_ideal.hpp"

#include <algorithm>

namespace edgering {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVec> generators) : nvars_(nvars) {
  for (const ExponentVec& g : generators) {
    if (g.size() != nvars) throw InvalidInput("monomial ideal: generator length does not match nvars");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i != j && divides(generators[j], generators[i])) {
        // ties were removed by unique(); strict divisibility only here
        redundant = true;
      }
    }
    if (!redundant) gens_.push_back(generators[i]);
  }
}

bool MonomialIdeal::contains(const ExponentVec& m) const {
  for (const ExponentVec& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal minimalize(std::size_t nvars, const std::vector<ExponentVec>& gens) {
  return MonomialIdeal(nvars, gens);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("monomial ideals: ambient mismatch");
  std::vector<ExponentVec> lcms;
  lcms.reserve(a.gens().size() * b.gens().size());
  for (const ExponentVec& g : a.gens())
    for (const ExponentVec& h : b.gens()) lcms.push_back(exp_lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(lcms));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("monomial ideals: ambient mismatch");
  std::vector<ExponentVec> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

}  // namespace edgering
