#include "tfr/facering.hpp"

#include <algorithm>

#include "tfr/cech.hpp"
#include "tfr/simplicial.hpp"

namespace tfr {

int hilbert_value(const Fan& fan, const LatticeVector& a) {
  for (const auto& c : fan.cones())
    if (c.contains(a)) return 1;
  return 0;
}

std::optional<LatticeVector> monomial_product(const Fan& fan, const LatticeVector& a, const LatticeVector& b) {
  if (hilbert_value(fan, a) == 0) throw std::invalid_argument("x^" + to_string(a) + " is not a monomial of K[Σ]");
  if (hilbert_value(fan, b) == 0) throw std::invalid_argument("x^" + to_string(b) + " is not a monomial of K[Σ]");
  for (const auto& c : fan.cones()) {
    if (!c.contains(a) || !c.contains(b)) continue;
    LatticeVector sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return sum;
  }
  return std::nullopt;
}

std::size_t krull_dimension(const Fan& fan) {
  std::size_t d = 0;
  for (const auto& c : fan.cones()) d = std::max(d, c.dim());
  return d;
}

LocalCohomologyTable local_cohomology_by_cone(const Fan& fan, const Field& field) {
  const Poset p = face_poset(fan);
  std::vector<GradedDims> per_cone, interval;
  per_cone.reserve(fan.size());
  interval.reserve(fan.size());
  for (std::size_t c = 0; c < fan.size(); ++c) {
    GradedDims h = reduced_cohomology(order_complex(open_interval(p, c)), field);
    per_cone.push_back(h.shifted(static_cast<int>(fan.cone(c).dim()) + 1));
    interval.push_back(std::move(h));
  }
  return LocalCohomologyTable(std::move(per_cone), std::move(interval), krull_dimension(fan), field);
}

GradedDims local_cohomology_at(const LocalCohomologyTable& table, const Fan& fan, const LatticeVector& a) {
  LatticeVector neg(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
  const auto carrier = carrier_cone(fan, neg);
  if (!carrier) return {};
  return table.at(*carrier);
}

std::size_t local_cohomology_dim(const LocalCohomologyTable& table, const Fan& fan, int i, const LatticeVector& a) {
  return local_cohomology_at(table, fan, a)[i];
}

std::size_t local_cohomology_dim(const Fan& fan, int i, const LatticeVector& a, const Field& field) {
  if (a.size() != fan.ambient_dim())
    throw std::invalid_argument("degree vector has length " + std::to_string(a.size()) + ", expected " +
                                std::to_string(fan.ambient_dim()));
  return local_cohomology_dim(local_cohomology_by_cone(fan, field), fan, i, a);
}

namespace {

Verdict vanishing_test(const LocalCohomologyTable& table, const Fan& fan, bool skip_zero_cone) {
  Verdict v;
  const int top = static_cast<int>(table.krull_dim());
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const int dim = static_cast<int>(fan.cone(c).dim());
    if (skip_zero_cone && dim == 0) continue;
    for (const auto& [p, value] : table.interval_cohomology(c).support())
      if (p != top - dim - 1) v.add(Witness{c, fan.cone(c).label(), p, value});
  }
  return v;
}

}  // namespace

Verdict cm_test(const LocalCohomologyTable& table, const Fan& fan) { return vanishing_test(table, fan, false); }

Verdict cm_test(const Fan& fan, const Field& field) { return cm_test(local_cohomology_by_cone(fan, field), fan); }

Verdict buchsbaum_test(const LocalCohomologyTable& table, const Fan& fan) {
  if (!fan.from_complex())
    throw std::invalid_argument("buchsbaum_test needs a fan built from a simplicial complex");
  return vanishing_test(table, fan, true);
}

Verdict buchsbaum_test(const Fan& fan, const Field& field) {
  if (!fan.from_complex())
    throw std::invalid_argument("buchsbaum_test needs a fan built from a simplicial complex");
  return buchsbaum_test(local_cohomology_by_cone(fan, field), fan);
}

StanleyCheck stanley_check(const Fan& fan, const Field& field) {
  const Poset p = face_poset(fan);
  std::vector<Element> nonzero;
  for (std::size_t c = 0; c < fan.size(); ++c)
    if (fan.cone(c).dim() > 0) nonzero.push_back(c);
  StanleyCheck out;
  out.order_complex_cm = reisner_oracle(order_complex(p.induced(nonzero)), field, true).result;
  out.ring_cm = cm_test(fan, field).result;
  if (out.order_complex_cm && !out.ring_cm)
    throw std::logic_error("order complex of the face poset is Cohen-Macaulay but the face ring is not");
  return out;
}

}  // namespace tfr
