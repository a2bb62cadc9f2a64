#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "tfr/corpus.hpp"
#include "tfr/poset.hpp"
#include "tfr/simplicial.hpp"

using namespace tfr;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

SimplicialComplex make(std::size_t n, std::vector<std::vector<std::size_t>> facets) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (auto& f : facets)
    for (auto& v : f) --v;
  return SimplicialComplex::from_facets(labels, facets);
}

std::map<int, std::size_t> expected(const SimplicialComplex& c, std::uint32_t p = 0) {
  return oracle::reduced_cohomology(c.facets(), p);
}

}  // namespace

TEST_CASE("validation closes facets downward") {
  const auto edge = make(2, {{1, 2}});
  CHECK(edge.faces() == std::vector<FaceMask>{0b00, 0b01, 0b10, 0b11});
  const auto points = make(2, {{1}, {2}});
  CHECK(points.faces() == std::vector<FaceMask>{0b00, 0b01, 0b10});
  const auto empty = make(0, {});
  CHECK(empty.faces() == std::vector<FaceMask>{0});
  CHECK(empty == SimplicialComplex());
  CHECK(make(3, {}).face_count() == 1);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{1}}), std::invalid_argument);
  CHECK(edge.face_label(0b11) == "{1,2}");
  CHECK(edge.face_label(0) == "{}");
  CHECK(edge.f_vector() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("link examples") {
  const auto edge = make(2, {{1, 2}});
  const auto lk = link(edge, 0b01);
  CHECK(lk.vertices() == std::vector<std::string>{"2"});
  CHECK(lk.facets() == std::vector<FaceMask>{0b1});
  CHECK(link(edge, 0) == edge);
  const auto triangle = corpus::hollow_triangle();
  const auto lk1 = link(triangle, 0b001);
  CHECK(lk1.vertices() == std::vector<std::string>{"2", "3"});
  CHECK(lk1.facets() == std::vector<FaceMask>{0b01, 0b10});
  CHECK_THROWS_AS(link(triangle, 0b111), std::invalid_argument);
}

TEST_CASE("reduced cohomology examples") {
  CHECK(testing::as_map(reduced_cohomology(SimplicialComplex(), Q)) == std::map<int, std::size_t>{{-1, 1}});
  for (std::size_t n = 1; n <= 6; ++n) CHECK(reduced_cohomology(corpus::full_simplex(n), Q).is_zero());
  const auto triangle = corpus::hollow_triangle();
  CHECK(expected(triangle) == std::map<int, std::size_t>{{1, 1}});
  CHECK(testing::as_map(reduced_cohomology(triangle, Q)) == std::map<int, std::size_t>{{1, 1}});
}

TEST_CASE("projective plane depends on the characteristic") {
  const auto rp2 = corpus::real_projective_plane();
  CHECK(rp2.f_vector() == std::vector<std::size_t>{1, 6, 15, 10});
  CHECK(expected(rp2).empty());
  CHECK(expected(rp2, 2) == std::map<int, std::size_t>{{1, 1}, {2, 1}});
  CHECK(reduced_cohomology(rp2, Q).is_zero());
  CHECK(testing::as_map(reduced_cohomology(rp2, F2)) == std::map<int, std::size_t>{{1, 1}, {2, 1}});
  CHECK(reduced_cohomology(rp2, Field::prime(3)).is_zero());
}

TEST_CASE("face poset examples") {
  const Poset point = face_poset(corpus::full_simplex(1));
  CHECK(point.size() == 2);
  CHECK(point.leq("{}", "{1}"));
  const Poset edge = face_poset(corpus::full_simplex(2));
  CHECK(edge.size() == 4);
  CHECK(edge.hasse().size() == 4);
  CHECK(edge.less("{1}", "{1,2}"));
  CHECK_FALSE(edge.leq("{1}", "{2}"));
  const Poset two = face_poset(corpus::two_points());
  CHECK(two.size() == 3);
  CHECK(two.minimal_elements().size() == 1);
  CHECK(two.maximal_elements().size() == 2);
}

TEST_CASE("reduced cohomology against the elimination oracle") {
  auto corpus_list = corpus::all_complexes(4);
  auto extra = corpus::random_complexes(40, 8, 5, 7);
  corpus_list.insert(corpus_list.end(), extra.begin(), extra.end());
  for (const auto& c : corpus_list) {
    CHECK(testing::as_map(reduced_cohomology(c, Q)) == expected(c));
    CHECK(testing::as_map(reduced_cohomology(c, F2)) == expected(c, 2));
  }
}

TEST_CASE("reduced cohomology support and Euler characteristic") {
  for (const auto& c : corpus::standard_complexes()) {
    const auto h = reduced_cohomology(c, Q);
    for (const auto& [i, v] : h.support()) {
      CHECK(i >= -1);
      CHECK(i <= c.dimension());
    }
    CHECK((h[-1] != 0) == (c.face_count() == 1));
    long long chi = 0;
    for (FaceMask f : c.faces()) chi += face_dim(f) % 2 == 0 ? 1 : -1;
    CHECK(h.euler_characteristic() == chi);
  }
}

TEST_CASE("links are barycentrically invariant") {
  for (const auto& c : corpus::all_complexes(4)) {
    const Poset fp = face_poset(c);
    for (std::size_t k = 0; k < c.faces().size(); ++k) {
      const FaceMask f = c.faces()[k];
      const auto lhs = reduced_cohomology(link(c, f), Q);
      const auto rhs = reduced_cohomology(order_complex(open_interval(fp, fp.index_of(c.face_label(f)))), Q);
      CHECK(lhs == rhs);
    }
  }
}
