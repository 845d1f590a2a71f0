#ifndef EDGERING_HOMOLOGY_HPP
#define EDGERING_HOMOLOGY_HPP

#include <string>

#include "edgering/simplicial.hpp"

namespace edgering {

/// Coefficient field for homology: exact rationals or a prime field.
struct FieldChoice {
  bool rational = true;
  int prime = 0;

  static FieldChoice Q() { return FieldChoice{true, 0}; }
  static FieldChoice Fp(int p);

  std::string name() const;
  friend bool operator==(const FieldChoice&, const FieldChoice&) = default;
};

FieldChoice parse_field(std::string_view text);  // "q" or "fp:P"

/// Reduced homology dimensions, indexed from j = -1 (the empty-face slot)
/// up to the complex dimension. Out-of-range indices read as zero.
struct HomologyDims {
  std::vector<Int> dims;  // dims[t] = dim H~_{t-1}

  Int at(int j) const {
    int t = j + 1;
    if (t < 0 || t >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(t)];
  }
  int max_index() const { return static_cast<int>(dims.size()) - 2; }
  bool all_zero() const {
    for (Int d : dims)
      if (d != 0) return false;
    return true;
  }
};

HomologyDims reduced_homology_dims(const SimplicialComplex& c, const FieldChoice& field);

struct MayerVietorisResult {
  bool applicable = false;  // both pieces have vanishing reduced homology
  bool holds = false;       // dim H~_i(union) == dim H~_{i-1}(intersection) for all i
  std::string detail;
};

MayerVietorisResult mayer_vietoris_check(const SimplicialComplex& c1, const SimplicialComplex& c2,
                                         const FieldChoice& field);

namespace detail {

/// Sparse integer matrix as rows of (column, value) pairs.
struct SparseMat {
  int nrows = 0, ncols = 0;
  std::vector<std::vector<std::pair<int, Int>>> rows;
};

/// Exact rank over the rationals: integer elimination with gcd-normalized
/// rows (row scaling preserves rank). Overflow raises, never wraps.
Int rank_exact(SparseMat m);
Int rank_mod_p(SparseMat m, int p);

}  // namespace detail

}  // namespace edgering

#endif
