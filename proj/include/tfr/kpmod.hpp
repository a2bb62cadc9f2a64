// Finite-dimensional modules over the incidence algebra of a finite poset,
// i.e. functors M with stalks M_x and maps M_xy : M_y -> M_x for x <= y.

#ifndef TFR_KPMOD_HPP
#define TFR_KPMOD_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tfr/fan.hpp"
#include "tfr/linalg.hpp"
#include "tfr/poset.hpp"

namespace tfr {

class FunctorialityError : public std::invalid_argument {
 public:
  FunctorialityError(const std::string& what, Element lower, Element upper)
      : std::invalid_argument(what), lower_(lower), upper_(upper) {}
  Element lower() const { return lower_; }
  Element upper() const { return upper_; }

 private:
  Element lower_;
  Element upper_;
};

class KPModule {
 public:
  /// `edge_maps` maps Hasse edges (x, y), x covered by y, to matrices of
  /// shape stalk(x) x stalk(y); absent edges are zero maps. Throws
  /// std::invalid_argument for shape errors or non-covering keys and
  /// FunctorialityError when two Hasse paths disagree in `field`.
  KPModule(Poset poset, std::vector<std::size_t> stalk_dims, std::map<Relation, Matrix> edge_maps, Field field);

  const Poset& poset() const { return poset_; }
  const Field& field() const { return field_; }
  std::size_t stalk_dim(Element x) const { return stalks_.at(x); }
  const std::vector<std::size_t>& stalk_dims() const { return stalks_; }
  const std::map<Relation, Matrix>& edge_maps() const { return edges_; }

  /// M_xy for x <= y (identity when x == y). Throws std::invalid_argument
  /// unless x <= y.
  const Matrix& transition(Element x, Element y) const;

 private:
  Poset poset_;
  std::vector<std::size_t> stalks_;
  std::map<Relation, Matrix> edges_;
  Field field_;
  // All composites, filled once during validation.
  std::vector<std::optional<Matrix>> composite_;
};

struct Limit {
  std::size_t dim = 0;
  /// Columns span the compatible families; rows are the stacked stalk
  /// coordinates of the elements in `elements` order.
  Matrix basis;
  std::vector<Element> elements;
  std::vector<std::size_t> offsets;
};

Limit limit(const KPModule& m);
/// Limit of M restricted to the lower set `open`; throws
/// std::invalid_argument if `open` is not a lower set.
Limit limit_on_open(const KPModule& m, const std::vector<Element>& open);
std::size_t limit_dim_on_open(const KPModule& m, const std::vector<Element>& open);

struct FlasqueVerdict {
  bool flasque = true;
  /// (U, x): an open set and a maximal element x of U for which
  /// lim M|_U -> lim M|_{U \ x} is not surjective.
  std::optional<std::pair<std::vector<Element>, Element>> witness;
};

/// Checks, for every x, that M_x -> lim M|_{(0,x)} is onto. This is
/// equivalent to flasqueness and polynomial in |P|; the witness is
/// U = (0, x].
FlasqueVerdict is_flasque(const KPModule& m);

/// Literal definition: every open U and maximal x ∈ U. Throws
/// std::length_error when |P| exceeds `bound`.
FlasqueVerdict is_flasque_by_open_sets(const KPModule& m, std::size_t bound);

/// Normalized chain cochain complex: C^n = ⊕ over chains x0 < ... < xn of
/// M_{x0}, degrees 0..max_degree (one extra degree is built internally so
/// the top requested degree is exact).
CochainComplex poset_cochain_complex(const KPModule& m, std::size_t max_degree);

/// dim Ext^n(K, M) for 0 <= n <= max_degree.
GradedDims poset_cohomology(const KPModule& m, std::size_t max_degree);

KPModule constant_module(const Poset& p, const Field& field);
KPModule skyscraper(const Poset& p, Element x, const Field& field);
/// K on {y : y >= x}, identity maps inside, zero elsewhere.
KPModule interval_module(const Poset& p, Element x, const Field& field);
/// K on the cones containing `a`, identity maps between them, on
/// face_poset(fan).
KPModule degree_sheaf(const Fan& fan, const LatticeVector& a, const Field& field);

}  // namespace tfr

#endif  // TFR_KPMOD_HPP
