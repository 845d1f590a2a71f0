#include "edgering/simplicial.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace edgering {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void sort_level(std::vector<Face>& level) {
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> vertices) {
  SimplicialComplex c;
  c.vertices_ = sorted_unique(std::move(vertices));
  return c;
}

SimplicialComplex SimplicialComplex::irrelevant(std::vector<int> vertices) {
  SimplicialComplex c;
  c.vertices_ = sorted_unique(std::move(vertices));
  c.by_card_.push_back({Face{}});
  return c;
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<int> vertices) {
  std::vector<int> verts = sorted_unique(std::move(vertices));
  return from_facets(verts, {verts});
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<int> vertices, std::vector<Face> faces) {
  SimplicialComplex c;
  c.vertices_ = sorted_unique(std::move(vertices));
  if (faces.empty()) return c;

  std::size_t max_card = 0;
  for (Face& f : faces) {
    f = sorted_unique(std::move(f));
    for (int v : f)
      if (!std::binary_search(c.vertices_.begin(), c.vertices_.end(), v))
        throw InvalidInput("simplicial complex: face uses a vertex outside the universe");
    max_card = std::max(max_card, f.size());
  }
  c.by_card_.resize(max_card + 1);
  for (Face& f : faces) c.by_card_[f.size()].push_back(std::move(f));
  for (auto& level : c.by_card_) sort_level(level);

  if (c.by_card_[0].empty()) throw InvalidInput("simplicial complex: missing the empty face");
  for (std::size_t card = 1; card < c.by_card_.size(); ++card) {
    for (const Face& f : c.by_card_[card]) {
      Face sub;
      sub.reserve(card - 1);
      for (std::size_t skip = 0; skip < card; ++skip) {
        sub.clear();
        for (std::size_t i = 0; i < card; ++i)
          if (i != skip) sub.push_back(f[i]);
        if (!std::binary_search(c.by_card_[card - 1].begin(), c.by_card_[card - 1].end(), sub))
          throw InvalidInput("simplicial complex: not downward closed");
      }
    }
  }
  while (!c.by_card_.empty() && c.by_card_.back().empty()) c.by_card_.pop_back();
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<int> vertices, const std::vector<Face>& facets) {
  SimplicialComplex c;
  c.vertices_ = sorted_unique(std::move(vertices));
  std::size_t max_card = 0;
  for (const Face& f : facets) max_card = std::max(max_card, f.size());
  std::vector<std::set<Face>> levels(max_card + 1);
  levels[0].insert(Face{});
  for (const Face& raw : facets) {
    Face f = sorted_unique(raw);
    for (int v : f)
      if (!std::binary_search(c.vertices_.begin(), c.vertices_.end(), v))
        throw InvalidInput("simplicial complex: facet uses a vertex outside the universe");
    // all subsets of f
    std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) sub.push_back(f[i]);
      levels[sub.size()].insert(std::move(sub));
    }
  }
  c.by_card_.resize(levels.size());
  for (std::size_t card = 0; card < levels.size(); ++card)
    c.by_card_[card].assign(levels[card].begin(), levels[card].end());
  while (!c.by_card_.empty() && c.by_card_.back().empty()) c.by_card_.pop_back();
  return c;
}

const std::vector<Face>& SimplicialComplex::faces_of_card(std::size_t card) const {
  static const std::vector<Face> empty;
  if (card >= by_card_.size()) return empty;
  return by_card_[card];
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& level : by_card_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  f.reserve(by_card_.size());
  for (const auto& level : by_card_) f.push_back(level.size());
  return f;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& level : by_card_) n += level.size();
  return n;
}

bool SimplicialComplex::is_face(const Face& f) const {
  if (f.size() >= by_card_.size()) return false;
  return std::binary_search(by_card_[f.size()].begin(), by_card_[f.size()].end(), f);
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (std::size_t card = 0; card < by_card_.size(); ++card) {
    for (const Face& f : by_card_[card]) {
      bool maximal = true;
      for (int v : vertices_) {
        if (std::binary_search(f.begin(), f.end(), v)) continue;
        Face ext = f;
        ext.insert(std::lower_bound(ext.begin(), ext.end(), v), v);
        if (is_face(ext)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

std::optional<int> SimplicialComplex::cone_apex() const {
  if (is_void()) return std::nullopt;
  std::vector<Face> max_faces = facets();
  if (max_faces.empty() || max_faces.front().empty()) return std::nullopt;
  Face common = max_faces.front();
  for (const Face& f : max_faces) {
    Face next;
    std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) return std::nullopt;
  }
  return common.front();
}

SimplicialComplex SimplicialComplex::set_union(const SimplicialComplex& other) const {
  SimplicialComplex c;
  std::vector<int> verts = vertices_;
  verts.insert(verts.end(), other.vertices_.begin(), other.vertices_.end());
  c.vertices_ = sorted_unique(std::move(verts));
  c.by_card_.resize(std::max(by_card_.size(), other.by_card_.size()));
  for (std::size_t card = 0; card < c.by_card_.size(); ++card) {
    const auto& a = faces_of_card(card);
    const auto& b = other.faces_of_card(card);
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c.by_card_[card]));
  }
  while (!c.by_card_.empty() && c.by_card_.back().empty()) c.by_card_.pop_back();
  return c;
}

SimplicialComplex SimplicialComplex::set_intersection(const SimplicialComplex& other) const {
  SimplicialComplex c;
  std::vector<int> verts = vertices_;
  verts.insert(verts.end(), other.vertices_.begin(), other.vertices_.end());
  c.vertices_ = sorted_unique(std::move(verts));
  c.by_card_.resize(std::min(by_card_.size(), other.by_card_.size()));
  for (std::size_t card = 0; card < c.by_card_.size(); ++card) {
    const auto& a = faces_of_card(card);
    const auto& b = other.faces_of_card(card);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c.by_card_[card]));
  }
  while (!c.by_card_.empty() && c.by_card_.back().empty()) c.by_card_.pop_back();
  return c;
}

SimplicialComplex SimplicialComplex::cone(int apex) const {
  if (std::binary_search(vertices_.begin(), vertices_.end(), apex))
    throw InvalidInput("cone apex must be a fresh vertex");
  std::vector<Face> faces = all_faces();
  std::vector<Face> with_apex = faces;
  for (Face f : faces) {
    f.insert(std::lower_bound(f.begin(), f.end(), apex), apex);
    with_apex.push_back(std::move(f));
  }
  std::vector<int> verts = vertices_;
  verts.push_back(apex);
  if (with_apex.empty()) return from_faces(std::move(verts), {Face{}, Face{apex}});  // cone(void) = point
  return from_faces(std::move(verts), std::move(with_apex));
}

std::ostream& operator<<(std::ostream& out, const Face& f) {
  out << '{';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << ',';
    out << f[i];
  }
  return out << '}';
}

std::ostream& operator<<(std::ostream& out, const SimplicialComplex& c) {
  if (c.is_void()) return out << "(void complex)";
  std::vector<Face> max_faces = c.facets();
  out << "complex<dim " << c.dim() << "; facets";
  for (const Face& f : max_faces) out << ' ' << f;
  return out << '>';
}

}  // namespace edgering
