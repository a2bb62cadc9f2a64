#include "tfr/cech.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfr {

namespace {

void check_degree(const SimplicialComplex& complex, const LatticeVector& a) {
  if (a.size() != complex.vertex_count())
    throw std::invalid_argument("degree vector has length " + std::to_string(a.size()) + ", expected " +
                                std::to_string(complex.vertex_count()));
  if (a.size() > kMaxCechVertices) throw std::length_error("Čech oracle is limited to 20 vertices");
}

}  // namespace

int cech_module_dim(const SimplicialComplex& complex, FaceMask subset, const LatticeVector& a) {
  check_degree(complex, a);
  FaceMask neg = 0, pos = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < 0) neg |= FaceMask{1} << k;
    if (a[k] > 0) pos |= FaceMask{1} << k;
  }
  return (neg & ~subset) == 0 && complex.contains(pos | subset) ? 1 : 0;
}

std::vector<std::vector<FaceMask>> cech_basis(const SimplicialComplex& complex, const LatticeVector& a) {
  check_degree(complex, a);
  const std::size_t n = a.size();
  std::vector<std::vector<FaceMask>> basis(n + 1);
  for (FaceMask f = 0; f < (FaceMask{1} << n); ++f)
    if (cech_module_dim(complex, f, a) == 1) basis[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  return basis;
}

CochainComplex cech_complex(const SimplicialComplex& complex, const LatticeVector& a) {
  const auto basis = cech_basis(complex, a);
  const std::size_t n = a.size();
  CochainComplex c;
  c.min_degree = 0;
  for (const auto& b : basis) c.dims.push_back(b.size());
  for (std::size_t j = 0; j < n; ++j) {
    const auto& src = basis[j];
    const auto& dst = basis[j + 1];
    SparseMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const FaceMask f = src[col];
      for (std::size_t k = 0; k < n; ++k) {
        const FaceMask bit = FaceMask{1} << k;
        if ((f & bit) != 0) continue;
        auto it = std::lower_bound(dst.begin(), dst.end(), f | bit);
        if (it == dst.end() || *it != (f | bit)) continue;
        const int below = std::popcount(f & (bit - 1));
        d.add(static_cast<std::size_t>(it - dst.begin()), col, below % 2 == 0 ? 1 : -1);
      }
    }
    c.coboundaries.push_back(std::move(d));
  }
  return c;
}

GradedDims cech_cohomology(const SimplicialComplex& complex, const LatticeVector& a, const Field& field) {
  return cohomology_dims(cech_complex(complex, a), field);
}

std::size_t cech_cohomology_dim(const SimplicialComplex& complex, int i, const LatticeVector& a, const Field& field) {
  return cech_cohomology(complex, a, field)[i];
}

Verdict reisner_oracle(const SimplicialComplex& complex, const Field& field, bool first_only) {
  Verdict v;
  const auto& faces = complex.faces();
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const SimplicialComplex lk = link(complex, faces[k]);
    const int top = lk.dimension();
    const GradedDims h = reduced_cohomology(lk, field);
    for (const auto& [i, value] : h.support()) {
      if (i >= top) continue;
      v.add(Witness{k, complex.face_label(faces[k]), i, value});
      if (first_only) return v;
    }
  }
  return v;
}

}  // namespace tfr
