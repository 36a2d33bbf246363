// Simplicial complexes on a small vertex set and their reduced cohomology.

#ifndef LCPOL_SIMPLICIAL_HPP
#define LCPOL_SIMPLICIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcpol/exact_linalg.hpp"

namespace lcpol {

/// Subset of the vertex set {0, ..., n-1}; bit v set iff v is in the face.
using FaceMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 62;

int face_dimension(FaceMask f);
std::vector<std::size_t> face_vertices(FaceMask f);
FaceMask face_from_vertices(const std::vector<std::size_t>& vertices);

/// A downward-closed family of faces, all faces materialized.
///
/// The void complex has no faces at all; the irrelevant complex {∅} has
/// only the empty face. Both are valid and distinct.
class SimplicialComplex {
public:
  static SimplicialComplex void_complex(std::size_t n_vertices);
  static SimplicialComplex irrelevant(std::size_t n_vertices);
  /// Downward closure of the given faces. An empty list yields the void complex.
  static SimplicialComplex from_faces(std::size_t n_vertices, const std::vector<FaceMask>& faces);
  /// Faces already closed under subsets; only sorted, not closed again.
  /// Throws std::invalid_argument if some face misses one of its facets.
  static SimplicialComplex from_closed_faces(std::size_t n_vertices, std::vector<FaceMask> faces);
  static SimplicialComplex from_facets(std::size_t n_vertices,
                                       const std::vector<std::vector<std::size_t>>& facets);

  std::size_t n_vertices() const noexcept { return n_; }
  bool is_void() const noexcept { return faces_.empty(); }
  bool contains(FaceMask f) const;

  /// Faces ordered by dimension, then by mask value.
  const std::vector<FaceMask>& faces() const noexcept { return faces_; }
  std::vector<FaceMask> faces_of_dimension(int d) const;
  /// Inclusion-maximal faces, ordered like faces().
  std::vector<FaceMask> facets() const;
  int dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  SimplicialComplex(std::size_t n, std::vector<FaceMask> faces);
  std::size_t n_ = 0;
  std::vector<FaceMask> faces_;
};

/// Coboundary C^d -> C^{d+1} of the augmented cochain complex; rows are the
/// (d+1)-faces and columns the d-faces, each in faces_of_dimension order.
/// The entry for tau = sigma ∪ {v} is (-1)^(position of v in tau).
SparseMatrix coboundary_matrix(const SimplicialComplex& complex, int d);

/// dim H̃^d(complex; field) for each d >= -1 with a nonzero value.
std::map<int, std::size_t> reduced_cohomology_dims(const SimplicialComplex& complex,
                                                   const FieldSpec& field);

/// True iff F ∪ {v} is a face for every face F. Throws std::domain_error on
/// the void complex.
bool is_cone(const SimplicialComplex& complex, std::size_t v);

/// Sum over faces of (-1)^dim, the empty face counting -1.
long euler_characteristic_reduced(const SimplicialComplex& complex);

/// "void", "{∅}", or facets as "{x,y}, {z}" using the given vertex names.
std::string format_complex(const SimplicialComplex& complex,
                           const std::vector<std::string>& vertex_names);

}  // namespace lcpol

#endif  // LCPOL_SIMPLICIAL_HPP
