#include "edgering/toric.hpp"

#include <algorithm>
#include <set>

namespace edgering {

std::vector<Binomial> WalkBinomialSet::all() const {
  std::vector<Binomial> out;
  out.reserve(type_I.size() + type_II.size() + type_III.size());
  out.insert(out.end(), type_I.begin(), type_I.end());
  out.insert(out.end(), type_II.begin(), type_II.end());
  out.insert(out.end(), type_III.begin(), type_III.end());
  return out;
}

WalkBinomialSet walk_binomials_family(int k) {
  if (k < 1) throw InvalidInput("walk_binomials_family requires k >= 1");
  WalkBinomialSet set;
  set.k = k;
  set.nvars = static_cast<std::size_t>(2 * k + 6);
  MonomialOrder lex = MonomialOrder::lex();

  auto var = [&](int one_based) { return static_cast<std::size_t>(one_based - 1); };
  auto odd = [](int i) { return 2 * (i - 1) + 7; };   // path edge at the left triangle
  auto even = [](int i) { return 2 * (i - 1) + 8; };  // path edge at the right triangle

  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      ExponentVec u(set.nvars, 0), v(set.nvars, 0);
      u[var(odd(i))] = 1;
      u[var(even(j))] = 1;
      v[var(even(i))] = 1;
      v[var(odd(j))] = 1;
      set.type_I.push_back(make_binomial(std::move(u), std::move(v), lex));
    }
  }
  auto two_triangle = [&](int i, int j) {
    ExponentVec u(set.nvars, 0), v(set.nvars, 0);
    u[var(1)] = u[var(4)] = u[var(5)] = 1;
    u[var(odd(i))] += 1;
    u[var(odd(j))] += 1;
    v[var(2)] = v[var(3)] = v[var(6)] = 1;
    v[var(even(i))] += 1;
    v[var(even(j))] += 1;
    return make_binomial(std::move(u), std::move(v), lex);
  };
  for (int i = 1; i <= k; ++i) set.type_II.push_back(two_triangle(i, i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) set.type_III.push_back(two_triangle(i, j));
  return set;
}

BinomialBasis toric_ideal(const Graph& g, const MonomialOrder& order, const BuchbergerLimits& limits) {
  std::size_t d = static_cast<std::size_t>(g.vertex_count());
  std::size_t r = static_cast<std::size_t>(g.edge_count());
  std::size_t total = d + r;

  if (order.kind() == OrderKind::Block)
    throw InvalidInput("toric_ideal: block orders are reserved for internal elimination");
  // Variables t_1..t_d then x_1..x_r; the t block dominates so the
  // elimination theorem applies.
  MonomialOrder elim = MonomialOrder::block(d, OrderKind::Lex, order.kind());

  std::vector<Binomial> gens;
  gens.reserve(r);
  for (std::size_t l = 0; l < r; ++l) {
    const Edge& e = g.edges()[l];
    ExponentVec u(total, 0), v(total, 0);
    u[static_cast<std::size_t>(e.u - 1)] = 1;
    u[static_cast<std::size_t>(e.v - 1)] = 1;
    v[d + l] = 1;
    gens.push_back(make_binomial(std::move(u), std::move(v), elim));
  }

  BinomialBasis big = buchberger(std::move(gens), elim, total, limits);

  // Keep the elements free of t variables (lead t-free forces the trail
  // t-free under a block order) and strip to the x coordinates.
  std::vector<Binomial> xonly;
  for (const Binomial& b : big.elements) {
    bool tfree = true;
    for (std::size_t i = 0; i < d && tfree; ++i)
      if (b.lead[i] != 0 || b.trail[i] != 0) tfree = false;
    if (!tfree) continue;
    ExponentVec u(b.lead.begin() + static_cast<std::ptrdiff_t>(d), b.lead.end());
    ExponentVec v(b.trail.begin() + static_cast<std::ptrdiff_t>(d), b.trail.end());
    xonly.push_back(make_binomial(std::move(u), std::move(v), order));
  }

  return buchberger(std::move(xonly), order, r, limits);
}

GbComparison verify_family_gb(int k, const BuchbergerLimits& limits) {
  MonomialOrder lex = MonomialOrder::lex();
  WalkBinomialSet walks = walk_binomials_family(k);
  std::vector<Binomial> raw = walks.all();
  std::vector<Binomial> reduced_walks = auto_reduce(raw, lex);
  BinomialBasis elim = toric_ideal(family_gk6(k), lex, limits);

  auto key = [](const Binomial& b) { return std::make_pair(b.lead, b.trail); };
  std::set<std::pair<ExponentVec, ExponentVec>> walk_set, elim_set, raw_set;
  for (const Binomial& b : reduced_walks) walk_set.insert(key(b));
  for (const Binomial& b : raw) raw_set.insert(key(b));
  for (const Binomial& b : elim.elements) elim_set.insert(key(b));

  GbComparison cmp;
  cmp.equal_reduced = walk_set == elim_set;
  cmp.equal_raw = raw_set == elim_set;
  cmp.walks_already_reduced = raw_set == walk_set;
  for (const Binomial& b : reduced_walks)
    if (!elim_set.count(key(b))) cmp.only_walks.push_back(b);
  for (const Binomial& b : elim.elements)
    if (!walk_set.count(key(b))) cmp.only_elimination.push_back(b);
  return cmp;
}

}  // namespace edgering
