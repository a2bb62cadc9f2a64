// Simplicial complexes on at most 64 indexed vertices, their links, face
// posets and reduced cohomology.

#ifndef TFR_SIMPLICIAL_HPP
#define TFR_SIMPLICIAL_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tfr/linalg.hpp"
#include "tfr/poset.hpp"

namespace tfr {

/// A face is a bitmask over the vertex indices of its complex.
using FaceMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int face_dim(FaceMask f) { return std::popcount(f) - 1; }

/// (cardinality, mask) order used everywhere faces are listed.
inline bool face_order(FaceMask a, FaceMask b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

FaceMask face_from_indices(const std::vector<std::size_t>& indices);
std::vector<std::size_t> face_indices(FaceMask f);

/// Non-void simplicial complex stored as its full, inclusion-closed face
/// set (the empty face is always present).
class SimplicialComplex {
 public:
  /// {∅} on no vertices.
  SimplicialComplex();

  /// Closes `facets` downward. Facet entries index into `vertices`.
  static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                       const std::vector<std::vector<std::size_t>>& facets);
  static SimplicialComplex from_facet_masks(std::vector<std::string> vertices,
                                            const std::vector<FaceMask>& facets);
  /// Vertices labelled "1".."n".
  static SimplicialComplex from_facet_masks(std::size_t vertex_count, const std::vector<FaceMask>& facets);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Throws std::out_of_range for an unknown label.
  std::size_t vertex_index(const std::string& label) const;

  /// All faces in face_order, starting with ∅.
  const std::vector<FaceMask>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool contains(FaceMask f) const;
  std::vector<FaceMask> facets() const;
  /// -1 for {∅}.
  int dimension() const;
  /// f-vector indexed by dim + 1.
  std::vector<std::size_t> f_vector() const;

  std::string face_label(FaceMask f) const;

  bool operator==(const SimplicialComplex& other) const {
    return vertices_ == other.vertices_ && faces_ == other.faces_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<FaceMask> faces_;
};

/// lk F = {G \ F : F ⊆ G ∈ Δ} on the vertices of Δ outside F (reindexed in
/// order). Throws std::invalid_argument when F ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, FaceMask face);

/// Augmented cochain complex; degree -1 is spanned by the empty face.
CochainComplex reduced_cochain_complex(const SimplicialComplex& complex);

GradedDims reduced_cohomology(const SimplicialComplex& complex, const Field& field);

/// Faces (∅ included) under inclusion, labelled by face_label, in
/// face_order.
Poset face_poset(const SimplicialComplex& complex);

}  // namespace tfr

#endif  // TFR_SIMPLICIAL_HPP
