#include "catch_amalgamated.hpp"
#include "tfr/corpus.hpp"
#include "tfr/io.hpp"
#include "tfr/verify.hpp"

using namespace tfr;
using io::json;

TEST_CASE("complex schema") {
  const auto c = io::parse_complex(json::parse(R"({"vertices":[1,2,"x"],"facets":[[1,2],["x"]]})"));
  CHECK(c.vertices() == std::vector<std::string>{"1", "2", "x"});
  CHECK(c.facets().size() == 2);
  CHECK(io::parse_complex(io::to_json(c)) == c);
  CHECK(io::parse_complex(json::parse(R"({"vertices":[],"facets":[]})")) == SimplicialComplex());
  CHECK_THROWS_AS(io::parse_complex(json::parse(R"({"vertices":[1]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_complex(json::parse(R"({"vertices":[1],"facets":[[2]]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_complex(json::parse(R"({"vertices":[1,1],"facets":[]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_complex(json::parse(R"([1,2])")), io::InputError);
}

TEST_CASE("poset schema warns about redundant pairs") {
  std::vector<std::string> warnings;
  const auto p = io::parse_poset(
      json::parse(R"({"elements":["a","b","c"],"hasse":[["a","b"],["b","c"],["a","c"]]})"), &warnings);
  CHECK(p.hasse().size() == 2);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("a<c") != std::string::npos);
  CHECK_THROWS_AS(io::parse_poset(json::parse(R"({"elements":["a","b"],"hasse":[["a","b"],["b","a"]]})")),
                  io::InputError);
  CHECK_THROWS_AS(io::parse_poset(json::parse(R"({"elements":["a"],"hasse":[["a"]]})")), io::InputError);
}

TEST_CASE("fan schema") {
  const auto f = io::parse_fan(json::parse(R"({"ambient_dim":2,"cones":[[[1,0],[1,1]],[[1,1],[0,1]]]})"));
  CHECK(f.size() == 6);
  CHECK(io::to_json(f) == json::parse(R"({"ambient_dim":2,"cones":[[[0,1],[1,1]],[[1,0],[1,1]]]})"));
  CHECK_THROWS_AS(io::parse_fan(json::parse(R"({"ambient_dim":2,"cones":[[[1,0,0]]]})")), io::InputError);
  CHECK_THROWS_AS(io::parse_fan(json::parse(R"({"ambient_dim":2,"cones":[[[1,0],[0,1]],[[1,1],[1,-1]]]})")),
                  FanValidationError);
}

TEST_CASE("module schema") {
  const auto m = io::parse_module(json::parse(R"({
      "poset": {"elements":["a","b"],"hasse":[["a","b"]]},
      "stalks": {"a":1,"b":2},
      "edges": {"a<b": [[1, "1/2"]]}})"),
                                  Field::rationals());
  CHECK(m.stalk_dims() == std::vector<std::size_t>{1, 2});
  CHECK(m.transition(0, 1)(0, 1) == Rational(1, 2));
  CHECK_THROWS_AS(io::parse_module(json::parse(R"({
      "poset": {"elements":["a","b"],"hasse":[["a","b"]]},
      "stalks": {"a":1,"b":2},
      "edges": {"a<b": [[1]]}})"),
                                   Field::rationals()),
                  io::InputError);
  CHECK_THROWS_AS(io::parse_module(json::parse(R"({
      "poset": {"elements":["a","b"],"hasse":[["a","b"]]},
      "stalks": {"a":1,"z":2}})"),
                                   Field::rationals()),
                  io::InputError);
  CHECK_THROWS_AS(io::parse_module(json::parse(R"({
      "poset": {"elements":["a","b"],"hasse":[["a","b"]]},
      "stalks": {"a":1,"b":1},
      "edges": {"a<b": [["x"]]}})"),
                                   Field::rationals()),
                  io::InputError);
}

TEST_CASE("degrees and faces") {
  CHECK(io::parse_degree("0,-1,2") == LatticeVector{0, -1, 2});
  CHECK(io::parse_degree("[1, 2]") == LatticeVector{1, 2});
  CHECK(io::parse_degree("").empty());
  CHECK_THROWS_AS(io::parse_degree("1,x"), io::InputError);
  CHECK_THROWS_AS(io::parse_degree("1,,2"), io::InputError);
  const auto tri = corpus::hollow_triangle();
  CHECK(io::parse_face(tri, "1,2") == 0b011);
  CHECK(io::parse_face(tri, "{}") == 0);
  CHECK_THROWS_AS(io::parse_face(tri, "1,2,3"), io::InputError);
  CHECK_THROWS_AS(io::parse_face(tri, "9"), io::InputError);
}

TEST_CASE("output is deterministic") {
  const auto fan = fan_of_complex(corpus::real_projective_plane());
  const auto a = io::dump(io::table_to_json(local_cohomology_by_cone(fan, Field::prime(2)), fan));
  const auto b = io::dump(io::table_to_json(local_cohomology_by_cone(fan, Field::prime(2)), fan));
  CHECK(a == b);
  CHECK(io::to_json(GradedDims(std::map<int, std::size_t>{{-1, 1}, {2, 3}})) == json::parse(R"({"-1":1,"2":3})"));
}

TEST_CASE("verify reports reproducers") {
  const auto report = verify_corpus(corpus::all_complexes(2), Field::rationals(), 2);
  CHECK(report.ok());
  CHECK(report.cases == 1 + 2 + 5);
  Disagreement d{3, corpus::two_points(), "Q", 1, {0, 0}, 2, 1};
  const auto j = json::parse(reproducer(d));
  CHECK(j.at("complex") == io::to_json(corpus::two_points()));
  CHECK(j.at("degree") == json::parse("[0,0]"));
  CHECK(j.at("fan_degree") == json::parse("[0,0,0]"));
  CHECK(j.at("i") == 1);
}

TEST_CASE("parallel_for runs every job and rethrows") {
  std::vector<int> hit(100, 0);
  parallel_for(hit.size(), 4, [&](std::size_t k) { hit[k] = 1; });
  CHECK(std::count(hit.begin(), hit.end(), 1) == 100);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t k) {
                                 if (k == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
