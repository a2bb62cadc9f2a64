#include "tfr/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace tfr::corpus {

std::vector<SimplicialComplex> all_complexes(std::size_t max_vertices) {
  std::vector<SimplicialComplex> out;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<FaceMask> subsets;
    for (FaceMask f = 0; f < (FaceMask{1} << n); ++f) subsets.push_back(f);
    std::sort(subsets.begin(), subsets.end(), face_order);
    // Decide subsets in face_order; a subset may enter only if all its
    // codimension-one faces are in. ∅ is always in.
    std::vector<FaceMask> chosen{0};
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
      if (k == subsets.size()) {
        out.push_back(SimplicialComplex::from_facet_masks(n, chosen));
        return;
      }
      walk(k + 1);
      const FaceMask f = subsets[k];
      for (auto v : face_indices(f))
        if (!std::binary_search(chosen.begin(), chosen.end(), f & ~(FaceMask{1} << v), face_order)) return;
      chosen.push_back(f);
      walk(k + 1);
      chosen.pop_back();
    };
    walk(1);
  }
  return out;
}

std::vector<SimplicialComplex> random_complexes(std::size_t count, std::uint64_t seed, std::size_t min_vertices,
                                                std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  std::vector<SimplicialComplex> out;
  while (out.size() < count) {
    const std::size_t n = min_vertices + rng() % (max_vertices - min_vertices + 1);
    const std::size_t facets = 1 + rng() % 5;
    std::vector<FaceMask> masks;
    for (std::size_t k = 0; k < facets; ++k) masks.push_back(1 + rng() % ((FaceMask{1} << n) - 1));
    out.push_back(SimplicialComplex::from_facet_masks(n, masks));
  }
  return out;
}

std::vector<SimplicialComplex> standard_complexes(std::uint64_t seed) {
  auto out = all_complexes(4);
  auto extra = random_complexes(50, seed);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<Poset> random_posets(std::size_t count, std::uint64_t seed, std::size_t max_elements) {
  std::mt19937_64 rng(seed);
  std::vector<Poset> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_elements;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<Relation> relations;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) relations.emplace_back(i, j);
    out.push_back(Poset::from_relations(std::move(labels), relations));
  }
  return out;
}

namespace {

SimplicialComplex from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& facets_one_based) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& f : facets_one_based) {
    std::vector<std::size_t> zero_based;
    for (auto v : f) zero_based.push_back(v - 1);
    facets.push_back(std::move(zero_based));
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

}  // namespace

SimplicialComplex real_projective_plane() {
  return from_lists(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                        {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex two_disjoint_edges() { return from_lists(4, {{1, 2}, {3, 4}}); }
SimplicialComplex edge_and_point() { return from_lists(3, {{1, 2}, {3}}); }
SimplicialComplex two_points() { return from_lists(2, {{1}, {2}}); }
SimplicialComplex hollow_triangle() { return from_lists(3, {{1, 2}, {1, 3}, {2, 3}}); }

SimplicialComplex full_simplex(std::size_t vertices) {
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= vertices; ++i) all.push_back(i);
  return from_lists(vertices, {all});
}

std::vector<NamedFan> general_fans() {
  std::vector<NamedFan> out;
  out.push_back({"projective-plane", Fan::validate(2, std::vector<std::vector<LatticeVector>>{
                                                         {{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}})});
  out.push_back({"hirzebruch-1", Fan::validate(2, std::vector<std::vector<LatticeVector>>{{{1, 0}, {0, 1}},
                                                                                          {{0, 1}, {-1, 1}},
                                                                                          {{-1, 1}, {0, -1}},
                                                                                          {{0, -1}, {1, 0}}})});
  out.push_back({"shared-ray", Fan::validate(2, std::vector<std::vector<LatticeVector>>{{{1, 0}, {1, 1}},
                                                                                        {{1, 1}, {0, 1}}})});
  out.push_back({"ray-and-quadrant",
                 Fan::validate(2, std::vector<std::vector<LatticeVector>>{{{-1, 0}}, {{1, 0}, {0, 1}}})});
  out.push_back({"square-cone", Fan::validate(3, std::vector<std::vector<LatticeVector>>{
                                                     {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}})});
  out.push_back({"square-cone-and-ray",
                 Fan::validate(3, std::vector<std::vector<LatticeVector>>{
                                      {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 0, -1}}})});
  out.push_back({"planes-meeting-at-origin",
                 Fan::validate(4, std::vector<std::vector<LatticeVector>>{{{1, 0, 0, 0}, {0, 1, 0, 0}},
                                                                          {{0, 0, 1, 0}, {0, 0, 0, 1}}})});
  // Cones over the six square faces of the cube [-1,1]^3.
  std::vector<std::vector<LatticeVector>> cube;
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {-1, 1}) {
      std::vector<LatticeVector> face;
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          LatticeVector v(3);
          v[axis] = sign;
          v[(axis + 1) % 3] = s1;
          v[(axis + 2) % 3] = s2;
          face.push_back(v);
        }
      cube.push_back(face);
    }
  out.push_back({"cube-face-fan", Fan::validate(3, cube)});
  return out;
}

}  // namespace tfr::corpus
