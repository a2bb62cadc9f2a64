#include "tfr/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tfr {

FaceMask face_from_indices(const std::vector<std::size_t>& indices) {
  FaceMask f = 0;
  for (auto i : indices) {
    if (i >= kMaxVertices) throw std::out_of_range("vertex index exceeds 64");
    f |= FaceMask{1} << i;
  }
  return f;
}

std::vector<std::size_t> face_indices(FaceMask f) {
  std::vector<std::size_t> out;
  while (f != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(f)));
    f &= f - 1;
  }
  return out;
}

SimplicialComplex::SimplicialComplex() : faces_{0} {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<FaceMask> masks;
  masks.reserve(facets.size());
  for (const auto& facet : facets) {
    for (auto v : facet)
      if (v >= vertices.size()) throw std::invalid_argument("facet refers to an unknown vertex");
    masks.push_back(face_from_indices(facet));
  }
  return from_facet_masks(std::move(vertices), masks);
}

SimplicialComplex SimplicialComplex::from_facet_masks(std::size_t vertex_count, const std::vector<FaceMask>& facets) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= vertex_count; ++i) labels.push_back(std::to_string(i));
  return from_facet_masks(std::move(labels), facets);
}

SimplicialComplex SimplicialComplex::from_facet_masks(std::vector<std::string> vertices,
                                                      const std::vector<FaceMask>& facets) {
  if (vertices.size() > kMaxVertices)
    throw std::length_error("simplicial complexes support at most 64 vertices");
  {
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices)
      if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex label '" + v + "'");
  }
  const FaceMask all = vertices.size() == kMaxVertices ? ~FaceMask{0} : (FaceMask{1} << vertices.size()) - 1;
  std::unordered_set<FaceMask> closed{0};
  for (auto facet : facets) {
    if ((facet & ~all) != 0) throw std::invalid_argument("facet refers to an unknown vertex");
    if (closed.count(facet) != 0) continue;
    // Enumerate submasks.
    for (FaceMask sub = facet;; sub = (sub - 1) & facet) {
      closed.insert(sub);
      if (sub == 0) break;
    }
  }
  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  c.faces_.assign(closed.begin(), closed.end());
  std::sort(c.faces_.begin(), c.faces_.end(), face_order);
  return c;
}

std::size_t SimplicialComplex::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw std::out_of_range("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool SimplicialComplex::contains(FaceMask f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, face_order);
}

std::vector<FaceMask> SimplicialComplex::facets() const {
  std::vector<FaceMask> out;
  for (auto f : faces_) {
    bool maximal = true;
    for (std::size_t v = 0; v < vertices_.size() && maximal; ++v) {
      const FaceMask bit = FaceMask{1} << v;
      if ((f & bit) == 0 && contains(f | bit)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const { return face_dim(faces_.back()); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (auto face : faces_) ++f[static_cast<std::size_t>(face_dim(face) + 1)];
  return f;
}

std::string SimplicialComplex::face_label(FaceMask f) const {
  std::string s = "{";
  bool first = true;
  for (auto v : face_indices(f)) {
    if (!first) s += ",";
    first = false;
    s += vertices_.at(v);
  }
  return s + "}";
}

SimplicialComplex link(const SimplicialComplex& complex, FaceMask face) {
  if (!complex.contains(face))
    throw std::invalid_argument("link: " + complex.face_label(face) + " is not a face");
  // Reindex the vertices outside `face`.
  std::vector<std::string> labels;
  std::vector<int> new_index(complex.vertex_count(), -1);
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    if ((face >> v) & 1) continue;
    new_index[v] = static_cast<int>(labels.size());
    labels.push_back(complex.vertices()[v]);
  }
  std::vector<FaceMask> rest;
  for (auto g : complex.faces()) {
    if ((g & face) != face) continue;
    FaceMask h = 0;
    for (auto v : face_indices(g & ~face)) h |= FaceMask{1} << new_index[v];
    rest.push_back(h);
  }
  return SimplicialComplex::from_facet_masks(std::move(labels), rest);
}

CochainComplex reduced_cochain_complex(const SimplicialComplex& complex) {
  const int top = complex.dimension();
  std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(top + 2));
  for (auto f : complex.faces()) by_dim[static_cast<std::size_t>(face_dim(f) + 1)].push_back(f);

  CochainComplex c;
  c.min_degree = -1;
  for (const auto& layer : by_dim) c.dims.push_back(layer.size());
  for (std::size_t k = 0; k + 1 < by_dim.size(); ++k) {
    const auto& lower = by_dim[k];
    const auto& upper = by_dim[k + 1];
    SparseMatrix d(upper.size(), lower.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
      const FaceMask g = upper[r];
      // g minus its j-th vertex carries sign (-1)^j.
      int j = 0;
      for (auto v : face_indices(g)) {
        const FaceMask f = g & ~(FaceMask{1} << v);
        auto it = std::lower_bound(lower.begin(), lower.end(), f, face_order);
        d.add(r, static_cast<std::size_t>(it - lower.begin()), j % 2 == 0 ? 1 : -1);
        ++j;
      }
    }
    c.coboundaries.push_back(std::move(d));
  }
  return c;
}

GradedDims reduced_cohomology(const SimplicialComplex& complex, const Field& field) {
  // d∘d = 0 holds by construction of the signs; skip the product check.
  return cohomology_dims(reduced_cochain_complex(complex), field, false);
}

Poset face_poset(const SimplicialComplex& complex) {
  const auto& faces = complex.faces();
  std::vector<std::string> labels;
  labels.reserve(faces.size());
  for (auto f : faces) labels.push_back(complex.face_label(f));
  std::vector<std::vector<bool>> table(faces.size(), std::vector<bool>(faces.size(), false));
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j) table[i][j] = (faces[i] & ~faces[j]) == 0;
  return Poset::from_order(std::move(labels), table);
}

}  // namespace tfr
