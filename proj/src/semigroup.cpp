#include "edgering/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace edgering {

MembershipResult member(const Graph& g, const DegreeVec& s) {
  std::size_t d = static_cast<std::size_t>(g.vertex_count());
  std::size_t r = static_cast<std::size_t>(g.edge_count());
  if (s.size() != d) throw InvalidInput("degree vector length does not match vertex count");
  for (Int e : s)
    if (e < 0) return {};

  Int total = 0;
  for (Int e : s) total = checked_add(total, e);
  if (total % 2 != 0) return {};  // every generator contributes 2
  if (total > 20000) throw GuardLimit("membership query degree too large");
  if (total == 0) return {true, ExponentVec(r, 0)};

  auto inc = g.incidence_lists();
  DegreeVec residual = s;
  ExponentVec cert(r, 0);
  std::unordered_set<DegreeVec, VecHash<DegreeVec>> failed;

  std::function<bool()> dfs = [&]() -> bool {
    std::size_t v = 0;
    while (v < d && residual[v] == 0) ++v;
    if (v == d) return true;
    if (failed.contains(residual)) return false;
    for (auto [l, w] : inc[v + 1]) {
      std::size_t wi = static_cast<std::size_t>(w - 1);
      if (residual[wi] < 1 || residual[v] < 1) continue;
      --residual[v];
      --residual[wi];
      ++cert[static_cast<std::size_t>(l - 1)];
      if (dfs()) return true;
      ++residual[v];
      ++residual[wi];
      --cert[static_cast<std::size_t>(l - 1)];
    }
    failed.insert(residual);
    return false;
  };

  if (dfs()) return {true, std::move(cert)};
  return {};
}

DeltaComplex delta_complex(const Graph& g, const DegreeVec& s, const DeltaLimits& limits) {
  int r = g.edge_count();
  if (r > limits.max_r)
    throw GuardLimit("delta complex: edge count " + std::to_string(r) + " exceeds guard " +
                     std::to_string(limits.max_r));
  std::vector<int> verts(static_cast<std::size_t>(r));
  for (int l = 1; l <= r; ++l) verts[static_cast<std::size_t>(l - 1)] = l;

  if (!member(g, s).member) return {SimplicialComplex::void_complex(verts), s};

  IncidenceColumns cols = incidence_columns(g);
  std::vector<Face> faces = {Face{}};
  std::vector<Face> level = {Face{}};
  while (!level.empty()) {
    std::vector<Face> next;
    for (const Face& f : level) {
      int start = f.empty() ? 1 : f.back() + 1;
      for (int l = start; l <= r; ++l) {
        Face cand = f;
        cand.push_back(l);
        // monotone pruning: every one-smaller subset must already be a face
        bool closed = true;
        Face sub;
        sub.reserve(cand.size() - 1);
        for (std::size_t skip = 0; closed && skip + 1 < cand.size(); ++skip) {
          sub.clear();
          for (std::size_t i = 0; i < cand.size(); ++i)
            if (i != skip) sub.push_back(cand[i]);
          closed = std::binary_search(level.begin(), level.end(), sub);
        }
        if (!closed) continue;
        DegreeVec residual = s;
        bool nonneg = true;
        for (int e : cand) {
          const DegreeVec& col = cols.columns[static_cast<std::size_t>(e - 1)];
          for (std::size_t i = 0; i < residual.size(); ++i) {
            residual[i] -= col[i];
            if (residual[i] < 0) nonneg = false;
          }
          if (!nonneg) break;
        }
        if (!nonneg) continue;
        if (member(g, residual).member) next.push_back(std::move(cand));
      }
    }
    std::sort(next.begin(), next.end());
    faces.insert(faces.end(), next.begin(), next.end());
    if (faces.size() > limits.max_faces) throw GuardLimit("delta complex face limit exceeded");
    level = std::move(next);
  }
  return {SimplicialComplex::from_faces(verts, std::move(faces)), s};
}

std::vector<Face> facets(const DeltaComplex& delta) { return delta.complex.facets(); }

DegreeVec paper_degree(int k) {
  if (k < 1) throw InvalidInput("paper_degree requires k >= 1");
  DegreeVec s = {1, 1, k + 1, k + 1, 1, 1};
  s.insert(s.end(), static_cast<std::size_t>(k), 2);
  return s;
}

}  // namespace edgering
