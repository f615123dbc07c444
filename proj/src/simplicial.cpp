#include "edgereg/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgereg/linalg.hpp"

namespace edgereg::res {

namespace {

void check_face(int vertex_count, const Face& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= vertex_count) throw std::invalid_argument("face vertex out of range");
    if (i > 0 && f[i - 1] >= f[i]) throw std::invalid_argument("face vertices must be strictly increasing");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  return c;
}

SimplicialComplex SimplicialComplex::empty_complex(int vertex_count) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  c.by_dimension_.push_back({Face{}});
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count, const std::vector<Face>& facets) {
  std::set<Face> all{Face{}};
  for (const auto& facet : facets) {
    check_face(vertex_count, facet);
    if (facet.size() > 30) throw std::invalid_argument("facet too large to close under subsets");
    const std::size_t k = facet.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) f.push_back(facet[i]);
      all.insert(std::move(f));
    }
  }
  return from_faces(vertex_count, std::vector<Face>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::vector<Face> faces) {
  std::set<Face> all(faces.begin(), faces.end());
  all.insert(Face{});
  for (const auto& f : all) {
    check_face(vertex_count, f);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!all.contains(sub)) throw std::invalid_argument("face list is not closed under subsets");
    }
  }
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  for (const auto& f : all) {
    if (c.by_dimension_.size() <= f.size()) c.by_dimension_.resize(f.size() + 1);
    c.by_dimension_[f.size()].push_back(f);
  }
  return c;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
  static const std::vector<Face> none;
  const int slot = d + 1;
  if (slot < 0 || slot >= static_cast<int>(by_dimension_.size())) return none;
  return by_dimension_[static_cast<std::size_t>(slot)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dimension_) total += level.size();
  return total;
}

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& c, const Field& field) {
  std::map<int, std::size_t> out;
  if (c.is_void()) return out;
  const int top = c.dimension();
  // boundary_rank[d] = rank of the boundary map from d-faces to (d-1)-faces,
  // with the augmentation as the map from vertices to the empty face.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) {
    const auto& lower = c.faces(d - 1);
    const auto& upper = c.faces(d);
    SparseMatrix m;
    m.rows = lower.size();
    m.columns.resize(upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const Face& f = upper[j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto row = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), sub) - lower.begin());
        m.columns[j].emplace_back(row, drop % 2 == 0 ? 1 : -1);
      }
    }
    boundary_rank[static_cast<std::size_t>(d + 1)] = rank(m, field);
  }
  for (int d = -1; d <= top; ++d) {
    const std::size_t faces = c.faces(d).size();
    const std::size_t r = faces - boundary_rank[static_cast<std::size_t>(d + 1)] - boundary_rank[static_cast<std::size_t>(d + 2)];
    if (r != 0) out[d] = r;
  }
  return out;
}

}  // namespace edgereg::res
