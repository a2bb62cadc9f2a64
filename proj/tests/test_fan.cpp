#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "tfr/corpus.hpp"
#include "tfr/fan.hpp"
#include "tfr/simplicial.hpp"

using namespace tfr;

namespace {

using Gens = std::vector<LatticeVector>;

Cone cone(std::size_t d, Gens g) { return Cone::from_generators(d, g); }

std::set<Gens> face_ray_sets(const Cone& c) {
  std::set<Gens> out;
  for (const auto& f : cone_faces(c)) out.insert(f.rays());
  return out;
}

// Faces found by the functional-search oracle, as ray sets.
std::set<Gens> oracle_faces(const Cone& c) {
  std::set<Gens> out;
  for (const auto& idx : oracle::faces_by_functionals(c.rays(), c.ambient_dim())) {
    Gens g;
    for (auto k : idx) g.push_back(c.rays()[k]);
    out.insert(g);
  }
  return out;
}

std::vector<LatticeVector> box(std::size_t d, int radius) {
  std::vector<LatticeVector> out{LatticeVector(d, -radius)};
  while (true) {
    LatticeVector v = out.back();
    std::size_t k = 0;
    while (k < d && v[k] == radius) v[k++] = -radius;
    if (k == d) break;
    ++v[k];
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("cone construction normalizes generators") {
  const Cone a = cone(2, {{2, 0}, {0, 3}, {1, 1}});
  CHECK(a.rays() == Gens{{0, 1}, {1, 0}});
  CHECK(a.dim() == 2);
  CHECK(a == cone(2, {{1, 0}, {0, 1}}));
  const Cone square = cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, 1}});
  CHECK(square.rays().size() == 4);
  CHECK(square.facets().size() == 4);
  CHECK(square.equations().empty());
  const Cone ray = cone(3, {{0, 2, 2}});
  CHECK(ray.rays() == Gens{{0, 1, 1}});
  CHECK(ray.equations().size() == 2);
  CHECK_THROWS_AS(cone(2, {{1, 0}, {-1, 0}}), NonPointedCone);
  CHECK_THROWS_AS(cone(2, {{1, 0}, {-1, 1}, {0, -1}}), NonPointedCone);
  CHECK_THROWS_AS(cone(2, {{1, 0, 0}}), std::invalid_argument);
  CHECK(Cone::zero(3).dim() == 0);
  CHECK(Cone::zero(3).label() == "[]");
}

TEST_CASE("cone_faces examples") {
  CHECK(cone_faces(cone(2, {{1, 0}})).size() == 2);
  const Cone quadrant = cone(2, {{1, 0}, {0, 1}});
  CHECK(cone_faces(quadrant).size() == 4);
  CHECK(face_ray_sets(quadrant) == oracle_faces(quadrant));
  CHECK(cone_faces(Cone::zero(2)).size() == 1);
}

TEST_CASE("cone_faces against functional search") {
  const std::vector<Cone> cones = {
      cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}),
      cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      cone(3, {{1, 0, 0}, {0, 1, 0}}),
      cone(3, {{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}, {1, 0, 2}}),
      cone(4, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}}),
      cone(2, {{1, 2}, {2, 1}}),
  };
  for (const auto& c : cones) {
    CHECK(face_ray_sets(c) == oracle_faces(c));
    for (const auto& f : cone_faces(c)) CHECK(c.contains(f));
  }
  CHECK(cone_faces(cones[0]).size() == 10);
}

TEST_CASE("fan validation examples") {
  const Fan two = Fan::validate(2, std::vector<Gens>{{{1, 0}}, {{0, 1}}});
  CHECK(two.size() == 3);
  const Fan shared = Fan::validate(2, std::vector<Gens>{{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}});
  CHECK(shared.size() == 6);
  CHECK(shared.maximal_cones().size() == 2);
  try {
    Fan::validate(2, std::vector<Gens>{{{1, 0}, {0, 1}}, {{1, 1}, {1, -1}}});
    FAIL("overlapping cones accepted");
  } catch (const FanValidationError& e) {
    CHECK(e.first() == "[[0,1],[1,0]]");
    CHECK(e.second() == "[[1,-1],[1,1]]");
  }
  CHECK_THROWS_AS(Fan::validate(2, std::vector<Gens>{{{1, 0}, {-1, 0}}}), NonPointedCone);
  // Duplicate and non-maximal inputs collapse.
  const Fan dup = Fan::validate(2, std::vector<Gens>{{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 0}}});
  CHECK(dup.size() == 4);
}

TEST_CASE("intersections") {
  const Cone a = cone(2, {{1, 0}, {1, 1}});
  const Cone b = cone(2, {{1, 1}, {0, 1}});
  CHECK(intersect(a, b) == cone(2, {{1, 1}}));
  const Cone c = cone(2, {{1, 0}, {0, 1}});
  const Cone d = cone(2, {{1, 1}, {1, -1}});
  CHECK(intersect(c, d) == a);
  CHECK(intersect(cone(2, {{1, 0}}), cone(2, {{0, 1}})) == Cone::zero(2));
}

TEST_CASE("extreme rays of an inequality system") {
  const auto rays = extreme_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(std::set<LatticeVector>(rays.begin(), rays.end()) == std::set<LatticeVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  // |z1| <= z3 and |z2| <= z3: the cone over a square.
  const auto sq = extreme_rays({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}, 3);
  CHECK(sq.size() == 4);
}

TEST_CASE("face poset of a fan") {
  const Fan ray = Fan::validate(2, std::vector<Gens>{{{1, 0}}});
  CHECK(face_poset(ray).size() == 2);
  CHECK(face_poset(ray).hasse().size() == 1);
  const Fan tri = fan_of_complex(corpus::hollow_triangle());
  const Poset p = face_poset(tri);
  CHECK(p.size() == 7);
  const auto r = is_graded(p);
  REQUIRE(r);
  CHECK(*std::max_element(r->begin(), r->end()) == 2);
  CHECK(p.minimal_elements() == std::vector<Element>{0});
}

TEST_CASE("relative interior examples") {
  CHECK(relint_contains(Cone::zero(2), {0, 0}));
  CHECK_FALSE(relint_contains(Cone::zero(2), {1, 0}));
  const Cone ray = cone(2, {{1, 0}});
  CHECK(relint_contains(ray, {2, 0}));
  CHECK_FALSE(relint_contains(ray, {0, 0}));
  const Cone q = cone(2, {{1, 0}, {0, 1}});
  CHECK(relint_contains(q, {1, 1}));
  CHECK_FALSE(relint_contains(q, {1, 0}));
  CHECK(oracle::relint_simplicial({{1, 0}, {0, 1}}, {1, 1}));
  CHECK_FALSE(oracle::relint_simplicial({{1, 0}, {0, 1}}, {1, 0}));
  CHECK_THROWS_AS(q.contains(LatticeVector{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(relint_contains(q, {1}), std::invalid_argument);
}

TEST_CASE("relative interior and membership against exact solving") {
  const std::vector<Gens> simplicial = {
      {{1, 0, 1}, {0, 1, 1}},
      {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}},
      {{2, 1, 0}, {1, 2, 0}},
      {{1, -1, 1}},
      {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}},
  };
  for (const auto& g : simplicial) {
    const Cone c = cone(3, g);
    for (const auto& a : box(3, 3)) {
      CHECK(c.relint_contains(a) == oracle::relint_simplicial(c.rays(), a));
      CHECK(c.contains(a) == oracle::in_simplicial(c.rays(), a));
    }
  }
}

TEST_CASE("carrier cone examples") {
  const Fan edge = fan_of_complex(corpus::full_simplex(2));
  const auto zero = carrier_cone(edge, {0, 0, 0});
  REQUIRE(zero);
  CHECK(edge.cone(*zero).dim() == 0);
  const auto top = carrier_cone(edge, {1, 1, 2});
  REQUIRE(top);
  CHECK(edge.cone(*top) == cone(3, {{1, 0, 1}, {0, 1, 1}}));
  CHECK_FALSE(carrier_cone(edge, {1, 0, 0}));
  CHECK_FALSE(carrier_cone(edge, {-1, 0, -1}));
}

TEST_CASE("every lattice point has at most one carrier") {
  std::vector<Fan> fans;
  for (const auto& cx : corpus::all_complexes(3)) fans.push_back(fan_of_complex(cx));
  for (const auto& nf : corpus::general_fans()) fans.push_back(nf.fan);
  for (const auto& fan : fans) {
    const int radius = fan.ambient_dim() <= 3 ? 2 : 1;
    for (const auto& a : box(fan.ambient_dim(), radius)) {
      std::size_t hits = 0;
      bool in_support = false;
      for (const auto& c : fan.cones()) {
        if (c.relint_contains(a)) ++hits;
        if (c.contains(a)) in_support = true;
      }
      CHECK(hits == (in_support ? 1u : 0u));
      CHECK(carrier_cone(fan, a).has_value() == in_support);
    }
  }
}

TEST_CASE("fans are closed under faces") {
  for (const auto& nf : corpus::general_fans())
    for (const auto& c : nf.fan.cones())
      for (const auto& f : cone_faces(c)) CHECK(nf.fan.index_of(f).has_value());
}

TEST_CASE("fan_of_complex examples") {
  const Fan point = fan_of_complex(corpus::full_simplex(1));
  CHECK(point.ambient_dim() == 2);
  REQUIRE(point.size() == 2);
  CHECK(point.cone(1) == cone(2, {{1, 1}}));
  const Fan edge = fan_of_complex(corpus::full_simplex(2));
  REQUIRE(edge.size() == 4);
  CHECK(edge.index_of(cone(3, {{1, 0, 1}})));
  CHECK(edge.index_of(cone(3, {{0, 1, 1}})));
  CHECK(edge.index_of(cone(3, {{1, 0, 1}, {0, 1, 1}})));
  const Fan empty = fan_of_complex(SimplicialComplex());
  CHECK(empty.size() == 1);
  CHECK(empty.ambient_dim() == 1);
  CHECK(embed_sr_degree({1, -2, 0}) == LatticeVector{1, -2, 0, -1});
}

TEST_CASE("face posets of a complex and its fan are isomorphic") {
  for (const auto& cx : corpus::all_complexes(4)) {
    const Fan fan = fan_of_complex(cx);
    REQUIRE(fan.size() == cx.face_count());
    REQUIRE(fan.from_complex());
    const auto& faces = fan.complex_faces();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      CHECK(fan.cone(i).dim() == static_cast<std::size_t>(std::popcount(faces[i])));
      for (std::size_t j = 0; j < fan.size(); ++j)
        CHECK(fan.cone(j).contains(fan.cone(i)) == ((faces[i] & ~faces[j]) == 0));
    }
  }
}
