#ifndef EDGERING_DEPTH_HPP
#define EDGERING_DEPTH_HPP

#include <optional>
#include <string>

#include "edgering/betti.hpp"
#include "edgering/semigroup.hpp"
#include "edgering/toric.hpp"

namespace edgering {

struct DepthOptions {
  MonomialOrder order = MonomialOrder::lex();
  FieldChoice field = FieldChoice::Q();
  int jobs = 1;
  BuchbergerLimits gb_limits{};
  BettiLimits betti_limits{};
  DeltaLimits delta_limits{};
  std::size_t max_candidate_degrees = 16;
};

/// Homology certificate: H~_j(Delta_s) = dim > 0 forces pd(K[G]) >= j+1,
/// hence depth <= r - (j+1).
struct DepthCertificate {
  DegreeVec s;
  int j = 0;
  Int dim = 0;
};

struct DepthReport {
  std::string graph_id;
  int d = 0;
  int r = 0;
  int krull = 0;
  Int depth_lower = 0;
  Int depth_upper = 0;
  Int pd_initial = 0;
  bool exact = false;
  bool upper_certified = false;  // a homology certificate attained the bound
  std::string order_name;
  std::string field_name;
  std::vector<DepthCertificate> certificates;
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct LowerBoundResult {
  Int value = 0;       // r - pd(S/in(I_G))
  Int pd_initial = 0;
  BinomialBasis gb;
  MonomialIdeal initial{0};
  BettiTable betti;
};

/// Initial-ideal route: depth K[G] >= r - pd(S/in(I_G)).
LowerBoundResult depth_lower(const Graph& g, const MonomialOrder& order, const DepthOptions& opt = {});

struct UpperBoundResult {
  Int value = 0;
  bool certified = false;
  std::vector<DepthCertificate> certificates;
};

/// Betti-certificate route over the supplied degrees; without any
/// nonvanishing homology the Krull dimension is the only bound.
UpperBoundResult depth_upper(const Graph& g, const std::vector<DegreeVec>& degrees,
                             const DepthOptions& opt = {});

/// Degrees worth probing: t-degrees of the top Betti multidegrees of the
/// initial ideal, with the family's special degree prepended when the
/// graph is recognized as family_gk6(k).
std::vector<DegreeVec> candidate_degrees(const Graph& g, const MonomialOrder& order,
                                         const DepthOptions& opt = {});
std::vector<DegreeVec> candidate_degrees_from(const Graph& g, const BettiTable& initial_betti,
                                              std::size_t max_degrees);

/// k with g == family_gk6(k), if any.
std::optional<int> recognize_family(const Graph& g);

DepthReport depth_report(const Graph& g, const DepthOptions& opt = {}, const std::string& id = "");

/// depth(theorem_construction(f,d)) must be exact and equal
/// depth(family_gk6(d-f+1)) + (f-7). Guarded to d-f+1 <= 4.
bool verify_additivity(int f, int d, const DepthOptions& opt = {});

struct PaperCheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Full pipeline for family_gk6(k): Groebner match, initial ideal and its
/// decomposition, facet structure, homology, pd bounds, exact depth 7.
std::vector<PaperCheckResult> verify_paper(int k, const DepthOptions& opt = {});

}  // namespace edgering

#endif
