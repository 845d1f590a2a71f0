#include "edgering/betti.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace edgering {

void BettiTable::add(int i, const ExponentVec& a, Int dim) {
  if (dim == 0) return;
  entries_[{i, a}] += dim;
}

Int BettiTable::at(int i, const ExponentVec& a) const {
  auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

Int BettiTable::pd() const {
  Int top = 0;
  for (const auto& [key, dim] : entries_)
    if (dim != 0) top = std::max<Int>(top, key.first);
  return top;
}

void BettiTable::print_triangular(std::ostream& out) const {
  // column = homological index i, row = total degree minus i
  std::map<std::pair<Int, int>, Int> graded;  // (j - i, i) -> dim
  int max_i = 0;
  Int max_row = 0;
  for (const auto& [key, dim] : entries_) {
    const auto& [i, a] = key;
    Int row = total_degree(a) - i;
    graded[{row, i}] += dim;
    max_i = std::max(max_i, i);
    max_row = std::max(max_row, row);
  }
  std::vector<Int> totals(static_cast<std::size_t>(max_i) + 1, 0);
  for (const auto& [key, dim] : graded) totals[static_cast<std::size_t>(key.second)] += dim;

  auto cell = [](Int v) { return v == 0 ? std::string(".") : std::to_string(v); };
  out << "       ";
  for (int i = 0; i <= max_i; ++i) out << ' ' << i << "\t";
  out << "\ntotal: ";
  for (int i = 0; i <= max_i; ++i) out << ' ' << totals[static_cast<std::size_t>(i)] << "\t";
  out << '\n';
  for (Int row = 0; row <= max_row; ++row) {
    out << row << ":     ";
    for (int i = 0; i <= max_i; ++i) {
      auto it = graded.find({row, i});
      out << ' ' << cell(it == graded.end() ? 0 : it->second) << "\t";
    }
    out << '\n';
  }
}

std::vector<ExponentVec> lcm_lattice(const MonomialIdeal& ideal, const BettiLimits& limits) {
  std::set<ExponentVec> seen;
  std::vector<ExponentVec> queue;
  for (const ExponentVec& g : ideal.gens())
    if (seen.insert(g).second) queue.push_back(g);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ExponentVec cur = queue[qi];  // the queue may reallocate below
    for (const ExponentVec& g : ideal.gens()) {
      ExponentVec join = exp_lcm(cur, g);
      if (seen.insert(join).second) {
        if (seen.size() > limits.max_lattice) throw GuardLimit("lcm lattice size limit exceeded");
        queue.push_back(std::move(join));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVec& a,
                                       const BettiLimits& limits) {
  if (a.size() != ideal.nvars()) throw InvalidInput("upper Koszul: degree length does not match nvars");
  std::vector<int> supp;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) supp.push_back(static_cast<int>(i) + 1);
  if (!ideal.contains(a)) return SimplicialComplex::void_complex(supp);

  std::vector<Face> faces = {Face{}};
  std::vector<Face> frontier = {Face{}};
  ExponentVec residual = a;
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const Face& f : frontier) {
      for (int v : supp) {
        if (!f.empty() && v <= f.back()) continue;
        residual = a;
        for (int u : f) --residual[static_cast<std::size_t>(u - 1)];
        --residual[static_cast<std::size_t>(v - 1)];
        if (!ideal.contains(residual)) continue;
        Face cand = f;
        cand.push_back(v);
        next.push_back(std::move(cand));
      }
    }
    faces.insert(faces.end(), next.begin(), next.end());
    if (faces.size() > limits.max_complex_faces) throw GuardLimit("upper Koszul face limit exceeded");
    frontier = std::move(next);
  }
  return SimplicialComplex::from_faces(supp, std::move(faces));
}

namespace {

void collect_entries(const SimplicialComplex& complex, const FieldChoice& field,
                     std::vector<std::pair<int, Int>>& out) {
  HomologyDims h = reduced_homology_dims(complex, field);
  for (int j = -1; j <= h.max_index(); ++j) {
    Int dim = h.at(j);
    if (dim > 0) out.push_back({j + 2, dim});  // beta_{j+2, a}(S/I)
  }
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldChoice& field, int jobs,
                       const BettiLimits& limits) {
  BettiTable table;
  table.add(0, ExponentVec(ideal.nvars(), 0), 1);
  if (ideal.is_zero()) return table;

  std::vector<ExponentVec> lattice = lcm_lattice(ideal, limits);
  std::vector<std::vector<std::pair<int, Int>>> partial(lattice.size());
  parallel_for(lattice.size(), jobs, [&](std::size_t idx) {
    const ExponentVec& a = lattice[idx];
    ExponentVec core = a;
    for (Int& e : core)
      if (e > 0) --e;
    if (ideal.contains(core)) return;  // K^a is the full simplex: acyclic
    collect_entries(upper_koszul_complex(ideal, a, limits), field, partial[idx]);
  });
  for (std::size_t idx = 0; idx < lattice.size(); ++idx)
    for (const auto& [i, dim] : partial[idx]) table.add(i, lattice[idx], dim);
  return table;
}

BettiTable betti_gpw(const MonomialIdeal& ideal, const FieldChoice& field, int jobs,
                     const BettiLimits& limits) {
  BettiTable table;
  table.add(0, ExponentVec(ideal.nvars(), 0), 1);
  if (ideal.is_zero()) return table;

  std::vector<ExponentVec> lattice = lcm_lattice(ideal, limits);
  std::vector<std::vector<std::pair<int, Int>>> partial(lattice.size());
  parallel_for(lattice.size(), jobs, [&](std::size_t idx) {
    const ExponentVec& a = lattice[idx];
    std::vector<const ExponentVec*> interval;  // lattice elements strictly below a
    for (const ExponentVec& b : lattice)
      if (b != a && divides(b, a)) interval.push_back(&b);

    int m = static_cast<int>(interval.size());
    std::vector<std::vector<char>> comparable(static_cast<std::size_t>(m),
                                              std::vector<char>(static_cast<std::size_t>(m), 0));
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        bool cmp = divides(*interval[static_cast<std::size_t>(p)], *interval[static_cast<std::size_t>(q)]) ||
                   divides(*interval[static_cast<std::size_t>(q)], *interval[static_cast<std::size_t>(p)]);
        comparable[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = cmp;
        comparable[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = cmp;
      }
    // an element comparable with all others cones the order complex
    bool cone = false;
    for (int p = 0; p < m && !cone; ++p) {
      bool all = true;
      for (int q = 0; q < m && all; ++q)
        if (q != p && !comparable[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) all = false;
      cone = all;
    }
    if (cone) return;

    // order complex: faces are chains, i.e. cliques of comparability
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) labels[static_cast<std::size_t>(p)] = p + 1;
    std::vector<Face> faces = {Face{}};
    std::vector<Face> frontier = {Face{}};
    while (!frontier.empty()) {
      std::vector<Face> next;
      for (const Face& f : frontier) {
        int start = f.empty() ? 1 : f.back() + 1;
        for (int v = start; v <= m; ++v) {
          bool chain = true;
          for (int u : f)
            if (!comparable[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)]) {
              chain = false;
              break;
            }
          if (!chain) continue;
          Face cand = f;
          cand.push_back(v);
          next.push_back(std::move(cand));
        }
      }
      faces.insert(faces.end(), next.begin(), next.end());
      if (faces.size() > limits.max_complex_faces) throw GuardLimit("order complex face limit exceeded");
      frontier = std::move(next);
    }
    collect_entries(SimplicialComplex::from_faces(labels, std::move(faces)), field, partial[idx]);
  });
  for (std::size_t idx = 0; idx < lattice.size(); ++idx)
    for (const auto& [i, dim] : partial[idx]) table.add(i, lattice[idx], dim);
  return table;
}

Int pd(const MonomialIdeal& ideal, const FieldChoice& field, int jobs, const BettiLimits& limits) {
  return betti_table(ideal, field, jobs, limits).pd();
}

}  // namespace edgering
