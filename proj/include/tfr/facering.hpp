// Local cohomology of toric face rings K[Σ] with respect to the graded
// maximal ideal, by decomposition over the face poset of the fan:
//
//   H^i_m(K[Σ])_a = H~^{i - dim C - 1}((C, 1^); K)   where -a ∈ relint C,
//
// and zero when -a lies outside |Σ|. The graded piece of the top local
// cohomology of the normal monoid ring K[C ∩ Z^d] is one-dimensional
// exactly in the degrees a with -a in the relative interior of C.

#ifndef TFR_FACERING_HPP
#define TFR_FACERING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tfr/fan.hpp"
#include "tfr/linalg.hpp"
#include "tfr/verdict.hpp"

namespace tfr {

class LocalCohomologyTable {
 public:
  LocalCohomologyTable(std::vector<GradedDims> per_cone, std::vector<GradedDims> interval_cohomology,
                       std::size_t krull_dim, Field field)
      : per_cone_(std::move(per_cone)),
        interval_(std::move(interval_cohomology)),
        krull_dim_(krull_dim),
        field_(field) {}

  /// Entry at cone c: i -> dim H~^{i - dim c - 1}((c, 1^)).
  const GradedDims& at(std::size_t cone) const { return per_cone_.at(cone); }
  /// Reduced cohomology of the open interval above cone c.
  const GradedDims& interval_cohomology(std::size_t cone) const { return interval_.at(cone); }
  std::size_t cone_count() const { return per_cone_.size(); }
  std::size_t krull_dim() const { return krull_dim_; }
  const Field& field() const { return field_; }

 private:
  std::vector<GradedDims> per_cone_;
  std::vector<GradedDims> interval_;
  std::size_t krull_dim_;
  Field field_;
};

/// 1 iff a ∈ |Σ| ∩ Z^d.
int hilbert_value(const Fan& fan, const LatticeVector& a);

/// a + b when some cone holds both, nullopt when x^a x^b = 0. Throws
/// std::invalid_argument if a or b is not a degree of K[Σ].
std::optional<LatticeVector> monomial_product(const Fan& fan, const LatticeVector& a, const LatticeVector& b);

std::size_t krull_dimension(const Fan& fan);

LocalCohomologyTable local_cohomology_by_cone(const Fan& fan, const Field& field);

/// dim_K H^i_m(K[Σ])_a.
std::size_t local_cohomology_dim(const Fan& fan, int i, const LatticeVector& a, const Field& field);
/// Same, reading a precomputed table for `fan`.
std::size_t local_cohomology_dim(const LocalCohomologyTable& table, const Fan& fan, int i, const LatticeVector& a);
/// All i at once for degree a.
GradedDims local_cohomology_at(const LocalCohomologyTable& table, const Fan& fan, const LatticeVector& a);

/// Cohen-Macaulay iff H~^p((C,1^)) = 0 for every cone C (the zero cone
/// included) and p != krull_dim - dim C - 1.
Verdict cm_test(const Fan& fan, const Field& field);
Verdict cm_test(const LocalCohomologyTable& table, const Fan& fan);

/// Buchsbaum criterion, the same vanishing over the nonzero cones. Only for
/// fans built by fan_of_complex; throws std::invalid_argument otherwise.
Verdict buchsbaum_test(const Fan& fan, const Field& field);
Verdict buchsbaum_test(const LocalCohomologyTable& table, const Fan& fan);

struct StanleyCheck {
  bool order_complex_cm = false;
  bool ring_cm = false;
};

/// CM-ness of the order complex of the nonzero cones (Reisner) against
/// CM-ness of K[Σ]. Throws std::logic_error if the first holds without the
/// second.
StanleyCheck stanley_check(const Fan& fan, const Field& field);

}  // namespace tfr

#endif  // TFR_FACERING_HPP
