// Test corpora shared by the `verify` command and the acceptance suite.
// Pseudo-random members are drawn from std::mt19937_64 raw output, so a
// seed reproduces the same corpus on every platform.

#ifndef TFR_CORPUS_HPP
#define TFR_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tfr/fan.hpp"
#include "tfr/poset.hpp"
#include "tfr/simplicial.hpp"

namespace tfr::corpus {

inline constexpr std::uint64_t kDefaultSeed = 0x7f4a7c15u;

/// Every simplicial complex whose vertex set is {1..n}, n <= max_vertices
/// (vertices need not be faces).
std::vector<SimplicialComplex> all_complexes(std::size_t max_vertices);

/// `count` complexes on min_vertices..max_vertices vertices.
std::vector<SimplicialComplex> random_complexes(std::size_t count, std::uint64_t seed, std::size_t min_vertices = 5,
                                                std::size_t max_vertices = 6);

/// all_complexes(4) followed by random_complexes(50, seed).
std::vector<SimplicialComplex> standard_complexes(std::uint64_t seed = kDefaultSeed);

std::vector<Poset> random_posets(std::size_t count, std::uint64_t seed, std::size_t max_elements = 8);

SimplicialComplex real_projective_plane();
SimplicialComplex two_disjoint_edges();
SimplicialComplex edge_and_point();
SimplicialComplex two_points();
SimplicialComplex hollow_triangle();
SimplicialComplex full_simplex(std::size_t vertices);

struct NamedFan {
  std::string name;
  Fan fan;
};

/// Hand-written fans that do not come from simplicial complexes.
std::vector<NamedFan> general_fans();

}  // namespace tfr::corpus

#endif  // TFR_CORPUS_HPP
