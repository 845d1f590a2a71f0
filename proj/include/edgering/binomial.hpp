#ifndef EDGERING_BINOMIAL_HPP
#define EDGERING_BINOMIAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/order.hpp"

namespace edgering {

// Exponent vector helpers. All operands must share one length.
bool divides(const ExponentVec& a, const ExponentVec& b);  // x^a | x^b
bool coprime(const ExponentVec& a, const ExponentVec& b);
bool disjoint_supports(const ExponentVec& a, const ExponentVec& b);
ExponentVec exp_lcm(const ExponentVec& a, const ExponentVec& b);
ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b);
ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b);  // requires a >= b
Int total_degree(const ExponentVec& a);

/// Pure-difference binomial x^lead - x^trail with lead > trail under the
/// ambient order. Toric elements have disjoint supports; intermediate
/// reduction results need not.
struct Binomial {
  ExponentVec lead, trail;

  bool disjoint_support() const { return disjoint_supports(lead, trail); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Orients x^u - x^v so the lead is the larger term; rejects u == v.
Binomial make_binomial(ExponentVec u, ExponentVec v, const MonomialOrder& order);

/// Same, but u == v collapses to "zero" (nullopt).
std::optional<Binomial> oriented_or_zero(ExponentVec u, ExponentVec v, const MonomialOrder& order);

struct BinomialBasis {
  std::size_t nvars = 0;
  MonomialOrder order = MonomialOrder::lex();
  std::vector<Binomial> elements;  // canonically sorted once reduced
  bool reduced = false;
};

/// Text forms: "x1*x4*x5*x7^2" for monomials ("1" when empty) and
/// "x1*x4*x5*x7^2 - x2*x3*x6*x8^2" for binomials. Parser and printer
/// round-trip.
std::string monomial_string(const ExponentVec& m);
ExponentVec parse_monomial(std::string_view text, std::size_t nvars);
std::string to_string(const Binomial& b);
Binomial parse_binomial(std::string_view text, std::size_t nvars, const MonomialOrder& order);

}  // namespace edgering

#endif
