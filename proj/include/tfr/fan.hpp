// Rational pointed cones and fans.
//
// A cone is given by integer generators. On construction the generators are
// made primitive and deduplicated, and the facet normals and linear
// equations of the span are computed with the double description method
// in exact integer arithmetic. Two cones are equal when they have the same
// extreme rays.

#ifndef TFR_FAN_HPP
#define TFR_FAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfr/poset.hpp"
#include "tfr/simplicial.hpp"

namespace tfr {

using LatticeVector = std::vector<std::int64_t>;

std::string to_string(const LatticeVector& v);

class NonPointedCone : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FanValidationError : public std::invalid_argument {
 public:
  FanValidationError(const std::string& what, std::string first, std::string second)
      : std::invalid_argument(what), first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class Cone {
 public:
  /// Zero cone in R^0.
  Cone() = default;
  /// Throws NonPointedCone if the generators contain a line and
  /// std::invalid_argument if a generator has the wrong length.
  static Cone from_generators(std::size_t ambient_dim, const std::vector<LatticeVector>& generators);
  static Cone zero(std::size_t ambient_dim) { return from_generators(ambient_dim, {}); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  /// Primitive extreme rays, sorted.
  const std::vector<LatticeVector>& rays() const { return rays_; }
  /// Primitive facet normals h with <h, x> >= 0 on the cone; each lies in
  /// the linear span of the cone, so they are canonical.
  const std::vector<LatticeVector>& facets() const { return facets_; }
  /// Integer basis of the orthogonal complement of the span.
  const std::vector<LatticeVector>& equations() const { return equations_; }

  /// Throws std::invalid_argument on dimension mismatch.
  bool contains(const LatticeVector& a) const;
  /// a in span and every facet inequality strict; the zero cone holds 0 only.
  bool relint_contains(const LatticeVector& a) const;
  bool contains(const Cone& other) const;

  /// Rays as "[[1,0,1],[0,1,1]]"; the zero cone is "[]".
  std::string label() const;

  bool operator==(const Cone& other) const { return ambient_dim_ == other.ambient_dim_ && rays_ == other.rays_; }
  /// By dimension, then rays.
  bool operator<(const Cone& other) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

/// Every face of `cone` (zero cone and the cone itself included), sorted.
std::vector<Cone> cone_faces(const Cone& cone);

/// C ∩ C' as a cone.
Cone intersect(const Cone& a, const Cone& b);

/// Extreme rays of {z : A z >= 0} for A of full column rank (a pointed
/// cone), via the double description method. Exposed for testing.
std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& inequalities, std::size_t dim);

class Fan {
 public:
  /// Validates `maximal` (all faces are generated, pairwise intersections
  /// must be common faces). Throws NonPointedCone or FanValidationError.
  static Fan validate(std::size_t ambient_dim, const std::vector<Cone>& maximal);
  static Fan validate(std::size_t ambient_dim, const std::vector<std::vector<LatticeVector>>& maximal);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// All cones, sorted (the zero cone first).
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  std::size_t size() const { return cones_.size(); }
  std::optional<std::size_t> index_of(const Cone& c) const;
  std::vector<std::size_t> maximal_cones() const;

  /// Set for fans built by fan_of_complex: the face of the complex for each
  /// cone, in cone order.
  bool from_complex() const { return !complex_faces_.empty(); }
  const std::vector<FaceMask>& complex_faces() const { return complex_faces_; }
  /// Vertex labels of the originating complex.
  const std::vector<std::string>& complex_vertices() const { return complex_vertices_; }

 private:
  friend Fan fan_of_complex(const SimplicialComplex& complex);
  std::size_t ambient_dim_ = 0;
  std::vector<Cone> cones_;
  std::vector<FaceMask> complex_faces_;
  std::vector<std::string> complex_vertices_;
};

/// Cones under inclusion, labelled by Cone::label; the zero cone is the
/// unique minimal element.
Poset face_poset(const Fan& fan);

bool relint_contains(const Cone& cone, const LatticeVector& a);

/// Index of the unique cone with `a` in its relative interior. Throws
/// std::logic_error if more than one is found.
std::optional<std::size_t> carrier_cone(const Fan& fan, const LatticeVector& a);

/// The fan in R^(n+1) with the cone spanned by e_i + e_(n+1), i ∈ F, for
/// each face F of a complex on n vertices (vertex i <-> coordinate i).
Fan fan_of_complex(const SimplicialComplex& complex);

/// Stanley-Reisner degree a ∈ Z^n to the fan degree (a, Σ a_i) ∈ Z^(n+1).
LatticeVector embed_sr_degree(const LatticeVector& a);

}  // namespace tfr

#endif  // TFR_FAN_HPP
