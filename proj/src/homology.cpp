#include "edgering/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace edgering {

FieldChoice FieldChoice::Fp(int p) {
  if (p < 2 || p > (1 << 30)) throw InvalidInput("prime field: modulus out of range");
  for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
    if (p % q == 0) throw InvalidInput("prime field: modulus " + std::to_string(p) + " is not prime");
  return FieldChoice{false, p};
}

std::string FieldChoice::name() const {
  return rational ? std::string("Q") : "F" + std::to_string(prime);
}

FieldChoice parse_field(std::string_view text) {
  if (text == "q" || text == "Q") return FieldChoice::Q();
  if (text.starts_with("fp:")) {
    int p = 0;
    try {
      p = std::stoi(std::string(text.substr(3)));
    } catch (const std::exception&) {
      throw InvalidInput("field: expected fp:<prime>");
    }
    return FieldChoice::Fp(p);
  }
  throw InvalidInput("field: expected \"q\" or \"fp:P\"");
}

namespace detail {

namespace {

void normalize_row(std::vector<std::pair<int, Int>>& row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : row) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

Int row_value_at(const std::vector<std::pair<int, Int>>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return 0;
  return it->second;
}

// dst = a*dst + b*src, merged by column; checked arithmetic.
std::vector<std::pair<int, Int>> combine(const std::vector<std::pair<int, Int>>& dst, Int a,
                                         const std::vector<std::pair<int, Int>>& src, Int b) {
  std::vector<std::pair<int, Int>> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back({dst[i].first, checked_mul(a, dst[i].second)});
      ++i;
    } else if (i >= dst.size() || src[j].first < dst[i].first) {
      out.push_back({src[j].first, checked_mul(b, src[j].second)});
      ++j;
    } else {
      Int v = checked_add(checked_mul(a, dst[i].second), checked_mul(b, src[j].second));
      if (v != 0) out.push_back({dst[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Int rank_exact(SparseMat m) {
  for (auto& row : m.rows) {
    std::sort(row.begin(), row.end());
    normalize_row(row);
  }
  std::vector<char> active(m.rows.size(), 1);
  Int rank = 0;
  while (true) {
    // pivot: prefer unit entries, then sparse rows, then small values
    int best_row = -1, best_col = -1;
    std::tuple<int, std::size_t, Int, int> best_score{2, 0, 0, 0};
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (!active[r] || m.rows[r].empty()) continue;
      for (const auto& [c, v] : m.rows[r]) {
        Int av = v < 0 ? -v : v;
        std::tuple<int, std::size_t, Int, int> score{av == 1 ? 0 : 1, m.rows[r].size(), av, c};
        if (best_row < 0 || score < best_score) {
          best_score = score;
          best_row = static_cast<int>(r);
          best_col = c;
        }
      }
    }
    if (best_row < 0) break;
    const auto pivot_row = m.rows[static_cast<std::size_t>(best_row)];
    Int pivot_val = row_value_at(pivot_row, best_col);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (!active[r] || static_cast<int>(r) == best_row || m.rows[r].empty()) continue;
      Int v = row_value_at(m.rows[r], best_col);
      if (v == 0) continue;
      m.rows[r] = combine(m.rows[r], pivot_val, pivot_row, -v);
      normalize_row(m.rows[r]);
    }
    active[static_cast<std::size_t>(best_row)] = 0;
    ++rank;
  }
  return rank;
}

Int rank_mod_p(SparseMat m, int p) {
  const Int P = p;
  auto norm = [&](std::vector<std::pair<int, Int>>& row) {
    for (auto& [c, v] : row) v = ((v % P) + P) % P;
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
  };
  auto mod_inv = [&](Int a) {
    // Fermat: p prime
    Int result = 1, base = a % P, e = P - 2;
    while (e > 0) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m.rows) {
    std::sort(row.begin(), row.end());
    norm(row);
  }
  std::vector<char> active(m.rows.size(), 1);
  Int rank = 0;
  while (true) {
    int best_row = -1, best_col = -1;
    std::size_t best_nnz = 0;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (!active[r] || m.rows[r].empty()) continue;
      if (best_row < 0 || m.rows[r].size() < best_nnz) {
        best_row = static_cast<int>(r);
        best_nnz = m.rows[r].size();
        best_col = m.rows[r].front().first;
      }
    }
    if (best_row < 0) break;
    const auto pivot_row = m.rows[static_cast<std::size_t>(best_row)];
    Int inv = mod_inv(row_value_at(pivot_row, best_col));
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (!active[r] || static_cast<int>(r) == best_row || m.rows[r].empty()) continue;
      Int v = row_value_at(m.rows[r], best_col);
      if (v == 0) continue;
      Int factor = (P - v * inv % P) % P;
      m.rows[r] = combine(m.rows[r], 1, pivot_row, factor);
      norm(m.rows[r]);
    }
    active[static_cast<std::size_t>(best_row)] = 0;
    ++rank;
  }
  return rank;
}

}  // namespace detail

namespace {

// Boundary from card-c faces down to card-(c-1) faces; the face obtained
// by deleting the i-th smallest vertex carries sign (-1)^i. Rows are the
// card-c faces (rank is transpose-invariant).
detail::SparseMat boundary_matrix(const SimplicialComplex& complex, std::size_t card) {
  const std::vector<Face>& sources = complex.faces_of_card(card);
  const std::vector<Face>& targets = complex.faces_of_card(card - 1);
  detail::SparseMat m;
  m.nrows = static_cast<int>(sources.size());
  m.ncols = static_cast<int>(targets.size());
  m.rows.resize(sources.size());
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const Face& f = sources[s];
    Face sub;
    sub.reserve(card - 1);
    for (std::size_t skip = 0; skip < card; ++skip) {
      sub.clear();
      for (std::size_t i = 0; i < card; ++i)
        if (i != skip) sub.push_back(f[i]);
      auto it = std::lower_bound(targets.begin(), targets.end(), sub);
      int col = static_cast<int>(it - targets.begin());
      m.rows[s].push_back({col, (skip % 2 == 0) ? 1 : -1});
    }
  }
  return m;
}

}  // namespace

HomologyDims reduced_homology_dims(const SimplicialComplex& c, const FieldChoice& field) {
  HomologyDims h;
  if (c.is_void()) return h;
  int top_card = c.dim() + 1;

  auto rank_of = [&](detail::SparseMat m) {
    return field.rational ? detail::rank_exact(std::move(m)) : detail::rank_mod_p(std::move(m), field.prime);
  };

  // rank_bd[c] = rank of the boundary map from card-c faces to card-(c-1)
  std::vector<Int> rank_bd(static_cast<std::size_t>(top_card) + 2, 0);
  for (int card = 1; card <= top_card; ++card)
    rank_bd[static_cast<std::size_t>(card)] = rank_of(boundary_matrix(c, static_cast<std::size_t>(card)));

  h.dims.resize(static_cast<std::size_t>(top_card) + 1);
  for (int card = 0; card <= top_card; ++card) {
    Int faces = static_cast<Int>(c.faces_of_card(static_cast<std::size_t>(card)).size());
    h.dims[static_cast<std::size_t>(card)] =
        faces - rank_bd[static_cast<std::size_t>(card)] - rank_bd[static_cast<std::size_t>(card) + 1];
  }
  return h;
}

MayerVietorisResult mayer_vietoris_check(const SimplicialComplex& c1, const SimplicialComplex& c2,
                                         const FieldChoice& field) {
  MayerVietorisResult result;
  HomologyDims h1 = reduced_homology_dims(c1, field);
  HomologyDims h2 = reduced_homology_dims(c2, field);
  result.applicable = h1.all_zero() && h2.all_zero();
  if (!result.applicable) {
    result.detail = "pieces are not acyclic; the isomorphism is not applicable";
    return result;
  }
  SimplicialComplex uni = c1.set_union(c2);
  SimplicialComplex inter = c1.set_intersection(c2);
  HomologyDims hu = reduced_homology_dims(uni, field);
  HomologyDims hi = reduced_homology_dims(inter, field);

  result.holds = true;
  std::ostringstream detail;
  int hi_index = std::max(hu.max_index(), hi.max_index() + 1);
  for (int i = -1; i <= hi_index; ++i) {
    Int left = hu.at(i);
    Int right = hi.at(i - 1);
    if (left != right) {
      result.holds = false;
      detail << "H~_" << i << "(union)=" << left << " != H~_" << (i - 1) << "(intersection)=" << right
             << "; ";
    }
  }
  if (result.holds) detail << "dim H~_i(union) = dim H~_{i-1}(intersection) for all i";
  result.detail = detail.str();
  return result;
}

}  // namespace edgering
