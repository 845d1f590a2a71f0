#ifndef EDGERING_SIMPLICIAL_HPP
#define EDGERING_SIMPLICIAL_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "edgering/util.hpp"

namespace edgering {

/// A face: sorted list of vertex labels. The empty face is {}.
using Face = std::vector<int>;

/// Downward-closed face family over an integer-labeled vertex set. Faces
/// are stored per cardinality; the empty face is present exactly when the
/// complex is nonvoid. The void complex (no faces at all) and the
/// irrelevant complex {empty} are distinct values.
class SimplicialComplex {
public:
  static SimplicialComplex void_complex(std::vector<int> vertices);
  static SimplicialComplex irrelevant(std::vector<int> vertices);
  static SimplicialComplex full_simplex(std::vector<int> vertices);
  /// Validates downward closure (and the presence of the empty face).
  static SimplicialComplex from_faces(std::vector<int> vertices, std::vector<Face> faces);
  /// Closes the given faces downward.
  static SimplicialComplex from_facets(std::vector<int> vertices, const std::vector<Face>& facets);

  const std::vector<int>& vertices() const { return vertices_; }
  bool is_void() const { return by_card_.empty(); }
  /// -2 for the void complex, -1 for {empty}, else max face cardinality - 1.
  int dim() const { return static_cast<int>(by_card_.size()) - 2; }

  const std::vector<Face>& faces_of_card(std::size_t card) const;
  std::vector<Face> all_faces() const;
  std::vector<std::size_t> f_vector() const;  // counts per cardinality, index 0 = empty face
  std::size_t face_count() const;
  bool is_face(const Face& f) const;

  std::vector<Face> facets() const;
  /// Apex vertex contained in every facet, if any.
  std::optional<int> cone_apex() const;

  SimplicialComplex set_union(const SimplicialComplex& other) const;
  SimplicialComplex set_intersection(const SimplicialComplex& other) const;
  /// Cone over this complex with a fresh apex vertex.
  SimplicialComplex cone(int apex) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  SimplicialComplex() = default;

  std::vector<int> vertices_;               // sorted universe
  std::vector<std::vector<Face>> by_card_;  // by_card_[c]: sorted faces with c vertices
};

std::ostream& operator<<(std::ostream& out, const Face& f);
std::ostream& operator<<(std::ostream& out, const SimplicialComplex& c);

}  // namespace edgering

#endif
