// Brute-force oracle for Stanley-Reisner rings: graded pieces of the Čech
// complex on the variables, and Reisner's criterion.
//
// The degree-a piece of the localization K[Δ]_{x_F} is K exactly when
// neg(a) ⊆ F and supp(a+) ∪ F ∈ Δ, so each graded Čech complex is a
// complex of 0/1-dimensional summands indexed by subsets F.

#ifndef TFR_CECH_HPP
#define TFR_CECH_HPP

#include <cstddef>
#include <vector>

#include "tfr/fan.hpp"
#include "tfr/linalg.hpp"
#include "tfr/simplicial.hpp"
#include "tfr/verdict.hpp"

namespace tfr {

/// Largest vertex count the Čech oracle enumerates subsets for.
inline constexpr std::size_t kMaxCechVertices = 20;

int cech_module_dim(const SimplicialComplex& complex, FaceMask subset, const LatticeVector& a);

/// basis[j] lists the admissible subsets with j elements, in mask order.
std::vector<std::vector<FaceMask>> cech_basis(const SimplicialComplex& complex, const LatticeVector& a);

CochainComplex cech_complex(const SimplicialComplex& complex, const LatticeVector& a);

/// All degrees i of H^i_m(K[Δ])_a.
GradedDims cech_cohomology(const SimplicialComplex& complex, const LatticeVector& a, const Field& field);
std::size_t cech_cohomology_dim(const SimplicialComplex& complex, int i, const LatticeVector& a, const Field& field);

/// K[Δ] is CM iff H~^i(lk F) = 0 for all faces F and i < dim lk F.
/// Witnesses are (face, i, dim). With `first_only` the search stops at the
/// first violation.
Verdict reisner_oracle(const SimplicialComplex& complex, const Field& field, bool first_only = false);

}  // namespace tfr

#endif  // TFR_CECH_HPP
