#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "edgereg/field.hpp"

namespace edgereg::res {

using Face = std::vector<int>;  // strictly increasing vertex indices

/// Finite abstract simplicial complex with every face materialized.
/// The void complex has no faces at all; the empty complex has only the
/// empty face.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int vertex_count);
  static SimplicialComplex empty_complex(int vertex_count);
  /// Closes `facets` under taking subsets (the empty face included).
  static SimplicialComplex from_facets(int vertex_count, const std::vector<Face>& facets);
  /// `faces` must already be closed under subsets; the empty face is added
  /// if missing. Throws std::invalid_argument otherwise.
  static SimplicialComplex from_faces(int vertex_count, std::vector<Face> faces);

  int vertex_count() const { return vertex_count_; }
  bool is_void() const { return by_dimension_.empty(); }
  /// -1 for the empty complex, -2 for the void complex.
  int dimension() const { return static_cast<int>(by_dimension_.size()) - 2; }
  /// Faces of dimension d >= -1, sorted.
  const std::vector<Face>& faces(int d) const;
  std::size_t face_count() const;

 private:
  SimplicialComplex() = default;

  int vertex_count_ = 0;
  std::vector<std::vector<Face>> by_dimension_;  // [0] holds the empty face
};

/// Nonzero ranks of reduced homology over `field`, keyed by dimension.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& c, const Field& field);

}  // namespace edgereg::res
