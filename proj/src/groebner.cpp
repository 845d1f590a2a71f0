#include "edgering/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace edgering {

std::optional<Binomial> spair(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  ExponentVec lcm = exp_lcm(f.lead, g.lead);
  ExponentVec u = exp_add(exp_sub(lcm, f.lead), f.trail);
  ExponentVec v = exp_add(exp_sub(lcm, g.lead), g.trail);
  return oriented_or_zero(std::move(u), std::move(v), order);
}

std::optional<Binomial> normal_form(Binomial b, std::span<const Binomial> basis,
                                    const MonomialOrder& order) {
  auto find_divisor = [&](const ExponentVec& term) -> const Binomial* {
    for (const Binomial& g : basis)
      if (divides(g.lead, term)) return &g;
    return nullptr;
  };
  while (true) {
    if (const Binomial* g = find_divisor(b.lead)) {
      // replace the lead term by (lead / g.lead) * g.trail
      ExponentVec next = exp_add(exp_sub(b.lead, g->lead), g->trail);
      auto cmp = order.compare(next, b.trail);
      if (cmp == std::strong_ordering::equal) return std::nullopt;
      if (cmp == std::strong_ordering::less) {
        b.lead = std::move(b.trail);
        b.trail = std::move(next);
      } else {
        b.lead = std::move(next);
      }
      continue;
    }
    if (const Binomial* g = find_divisor(b.trail)) {
      ExponentVec next = exp_add(exp_sub(b.trail, g->lead), g->trail);
      if (next == b.lead) return std::nullopt;
      b.trail = std::move(next);  // strictly smaller than the old trail
      continue;
    }
    return b;
  }
}

std::optional<Binomial> normal_form(const Binomial& b, const BinomialBasis& basis) {
  return normal_form(b, std::span<const Binomial>(basis.elements), basis.order);
}

namespace {

void sort_canonical(std::vector<Binomial>& v, const MonomialOrder& order) {
  std::sort(v.begin(), v.end(), [&](const Binomial& a, const Binomial& b) {
    auto c = order.compare(a.lead, b.lead);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return order.less(a.trail, b.trail);
  });
}

}  // namespace

std::vector<Binomial> auto_reduce(std::vector<Binomial> basis, const MonomialOrder& order) {
  sort_canonical(basis, order);
  // Ascending leads: a divisor is never larger than its multiple, so one
  // forward pass keeps exactly the minimal leads.
  std::vector<Binomial> kept;
  for (Binomial& b : basis) {
    bool redundant = false;
    for (const Binomial& k : kept) {
      if (divides(k.lead, b.lead)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(b));
  }
  std::vector<Binomial> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Binomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    auto nf = normal_form(kept[i], others, order);
    // Leads form an antichain, so only the trail moved and the element
    // cannot vanish.
    out.push_back(*std::move(nf));
  }
  sort_canonical(out, order);
  return out;
}

namespace {

struct Pair {
  int i, j;
  ExponentVec lcm;
};

}  // namespace

BinomialBasis buchberger(std::vector<Binomial> gens, const MonomialOrder& order, std::size_t nvars,
                         const BuchbergerLimits& limits) {
  for (const Binomial& g : gens) {
    if (g.lead.size() != nvars || g.trail.size() != nvars)
      throw InvalidInput("buchberger: generator length does not match nvars");
  }

  std::vector<Binomial> basis;
  std::vector<Pair> pairs;

  // Gebauer-Moeller update: prune new pairs by the M/F criteria, drop
  // coprime-lead pairs, filter old pairs by the B criterion.
  auto update = [&](Binomial h) {
    int t = static_cast<int>(basis.size());
    struct Cand {
      int i;
      ExponentVec lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      cands.push_back({i, exp_lcm(basis[static_cast<std::size_t>(i)].lead, h.lead),
                       coprime(basis[static_cast<std::size_t>(i)].lead, h.lead)});
    std::vector<Cand> survivors;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      const Cand& c = cands[idx];
      bool keep = c.coprime;
      if (!keep) {
        bool dominated = false;
        for (std::size_t j = idx + 1; j < cands.size() && !dominated; ++j)
          if (divides(cands[j].lcm, c.lcm)) dominated = true;
        for (std::size_t j = 0; j < survivors.size() && !dominated; ++j)
          if (divides(survivors[j].lcm, c.lcm)) dominated = true;
        keep = !dominated;
      }
      if (keep) survivors.push_back(c);
    }
    std::vector<Pair> old_kept;
    old_kept.reserve(pairs.size());
    for (Pair& p : pairs) {
      const ExponentVec& li = basis[static_cast<std::size_t>(p.i)].lead;
      const ExponentVec& lj = basis[static_cast<std::size_t>(p.j)].lead;
      if (!divides(h.lead, p.lcm) || exp_lcm(li, h.lead) == p.lcm || exp_lcm(lj, h.lead) == p.lcm)
        old_kept.push_back(std::move(p));
    }
    pairs = std::move(old_kept);
    for (Cand& c : survivors)
      if (!c.coprime) pairs.push_back({c.i, t, std::move(c.lcm)});
    basis.push_back(std::move(h));
  };

  for (Binomial& g : gens) {
    auto h = normal_form(std::move(g), basis, order);
    if (h) update(*std::move(h));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > limits.max_pairs) throw GuardLimit("buchberger: pair limit exceeded");
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      auto c = order.compare(pairs[p].lcm, pairs[best].lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal &&
           std::tie(pairs[p].i, pairs[p].j) < std::tie(pairs[best].i, pairs[best].j)))
        best = p;
    }
    Pair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    auto s = spair(basis[static_cast<std::size_t>(pr.i)], basis[static_cast<std::size_t>(pr.j)], order);
    if (!s) continue;
    auto h = normal_form(std::move(*s), basis, order);
    if (!h) continue;
    if (basis.size() >= limits.max_basis) throw GuardLimit("buchberger: basis size limit exceeded");
    update(*std::move(h));
  }

  BinomialBasis result;
  result.nvars = nvars;
  result.order = order;
  result.elements = auto_reduce(std::move(basis), order);
  result.reduced = true;
  return result;
}

MonomialIdeal initial_ideal(const BinomialBasis& basis) {
  if (!basis.reduced) throw InvalidInput("initial_ideal requires a reduced basis");
  std::vector<ExponentVec> leads;
  leads.reserve(basis.elements.size());
  for (const Binomial& b : basis.elements) leads.push_back(b.lead);
  return MonomialIdeal(basis.nvars, std::move(leads));
}

}  // namespace edgering
