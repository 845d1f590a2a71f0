#ifndef EDGERING_GROEBNER_HPP
#define EDGERING_GROEBNER_HPP

#include <optional>
#include <span>
#include <vector>

#include "edgering/binomial.hpp"
#include "edgering/monomial_ideal.hpp"

namespace edgering {

/// S-polynomial of two pure-difference binomials; stays a pure difference
/// or collapses to zero.
std::optional<Binomial> spair(const Binomial& f, const Binomial& g, const MonomialOrder& order);

/// Full normal form (lead and trail both reduced). Terminates by the
/// well-ordering of monomials.
std::optional<Binomial> normal_form(Binomial b, std::span<const Binomial> basis,
                                    const MonomialOrder& order);
std::optional<Binomial> normal_form(const Binomial& b, const BinomialBasis& basis);

struct BuchbergerLimits {
  std::size_t max_basis = 200000;
  std::size_t max_pairs = 20000000;  // pairs processed, not queued
};

/// Reduced Groebner basis via Buchberger with the Gebauer-Moeller pair
/// criteria and normal (smallest-lcm) selection. Pure-difference input
/// needs no coefficient arithmetic; every intermediate stays a pure
/// difference.
BinomialBasis buchberger(std::vector<Binomial> gens, const MonomialOrder& order, std::size_t nvars,
                         const BuchbergerLimits& limits = {});

/// Auto-reduce a set that is already a Groebner basis: minimal leads,
/// reduced trails, canonical sort.
std::vector<Binomial> auto_reduce(std::vector<Binomial> basis, const MonomialOrder& order);

/// Minimal generators of the ideal of lead terms. Input must be reduced.
MonomialIdeal initial_ideal(const BinomialBasis& basis);

}  // namespace edgering

#endif
