#include <algorithm>
#include <cstdlib>
#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "tfr/corpus.hpp"
#include "tfr/fan.hpp"
#include "tfr/poset.hpp"
#include "tfr/simplicial.hpp"

using namespace tfr;

namespace {

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return Poset::from_relations(labels, rel);
}

Poset antichain2() { return Poset::from_relations({"a", "b"}, {}); }
Poset vee() { return Poset::from_relations({"a", "b", "c"}, {{0, 2}, {1, 2}}); }

oracle::Order order_of(const Poset& p) {
  oracle::Order leq(p.size(), std::vector<bool>(p.size()));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) leq[x][y] = p.leq(x, y);
  return leq;
}

std::vector<std::string> labels_of(const Poset& p, const std::vector<Element>& s) {
  std::vector<std::string> out;
  for (auto x : s) out.push_back(p.label(x));
  return out;
}

}  // namespace

TEST_CASE("leq examples") {
  const Poset c = chain(2);
  CHECK(c.leq("a", "b"));
  CHECK_FALSE(c.leq("b", "a"));
  CHECK_FALSE(antichain2().leq("a", "b"));
  CHECK_THROWS_AS(c.leq("a", "z"), std::out_of_range);
}

TEST_CASE("construction validates and reports redundant pairs") {
  std::vector<Relation> redundant;
  const Poset p = Poset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, &redundant);
  CHECK(p.hasse() == std::vector<Relation>{{0, 1}, {1, 2}});
  CHECK(redundant == std::vector<Relation>{{0, 2}});
  CHECK(p.leq("a", "c"));
  CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_order({"a", "b"}, {{true, true}, {true, true}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_order({"a", "b"}, {{false, false}, {false, true}}), std::invalid_argument);
  const Poset q = Poset::from_order({"a", "b"}, {{true, true}, {false, true}});
  CHECK(q.covers(0, 1));
}

TEST_CASE("open interval examples") {
  const Poset c = chain(3);
  const Poset up = open_interval(c, c.index_of("a"));
  CHECK(up.labels() == std::vector<std::string>{"b", "c"});
  CHECK(up.leq("b", "c"));
  CHECK(open_interval(c, c.index_of("c")).empty());

  const Poset edge = face_poset(corpus::full_simplex(2));
  const Poset above = open_interval(edge, edge.index_of("{1}"));
  CHECK(above.labels() == std::vector<std::string>{"{1,2}"});
}

TEST_CASE("lower set examples") {
  auto as_labels = [](const Poset& p) {
    std::set<std::vector<std::string>> out;
    for (const auto& u : lower_sets(p)) out.insert(labels_of(p, u));
    return out;
  };
  using S = std::set<std::vector<std::string>>;
  CHECK(as_labels(chain(2)) == S{{}, {"a"}, {"a", "b"}});
  CHECK(as_labels(antichain2()) == S{{}, {"a"}, {"b"}, {"a", "b"}});
  CHECK(as_labels(vee()) == S{{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}});
  const auto brute = oracle::lower_sets(order_of(vee()));
  CHECK(lower_sets(vee()).size() == brute.size());
}

TEST_CASE("lower set enumeration is bounded") {
  CHECK(lower_set_bound() == 20);
  CHECK_THROWS_AS(lower_sets(chain(21)), std::length_error);
  CHECK_THROWS_AS(lower_sets(chain(5), 4), std::length_error);
  CHECK(lower_sets(chain(21), 21).size() == 22);
  setenv("TFR_LOWER_SET_BOUND", "3", 1);
  CHECK(lower_set_bound() == 3);
  CHECK_THROWS_AS(lower_sets(chain(4)), std::length_error);
  unsetenv("TFR_LOWER_SET_BOUND");
}

TEST_CASE("order complex examples") {
  const auto edge = order_complex(chain(2));
  CHECK(edge.facets().size() == 1);
  CHECK(edge.dimension() == 1);
  const auto two = order_complex(antichain2());
  CHECK(two.facets().size() == 2);
  CHECK(two.dimension() == 0);
  CHECK(order_complex(Poset()).face_count() == 1);

  // Proper part of the hollow triangle's face poset: barycentric subdivision.
  const Poset fp = face_poset(corpus::hollow_triangle());
  const Poset proper = open_interval(fp, fp.index_of("{}"));
  const auto sd = order_complex(proper);
  std::size_t brute_vertices = 0, brute_edges = 0;
  for (auto c : oracle::chains(order_of(proper))) {
    if (std::popcount(c) == 1) ++brute_vertices;
    if (std::popcount(c) == 2) ++brute_edges;
  }
  CHECK(brute_vertices == 6);
  CHECK(brute_edges == 6);
  const auto f = sd.f_vector();
  CHECK(f.at(1) == 6);
  CHECK(f.at(2) == 6);
}

TEST_CASE("is_graded examples") {
  const auto r = is_graded(chain(3));
  REQUIRE(r);
  CHECK(*r == std::vector<std::size_t>{0, 1, 2});
  // a < c directly, and a < b < d with c, d maximal: chains of 2 and 3 elements.
  const Poset mixed = Poset::from_relations({"a", "b", "c", "d"}, {{0, 2}, {0, 1}, {1, 3}});
  CHECK_FALSE(is_graded(mixed));
  CHECK_FALSE(oracle::graded(order_of(mixed)));
}

// Graded in the global sense exactly when the fan is pure; impure fans such
// as an edge plus a point have maximal chains of different lengths.
TEST_CASE("face posets of fans are graded by cone dimension when pure") {
  std::vector<Fan> fans;
  for (const auto& cx : corpus::all_complexes(4)) fans.push_back(fan_of_complex(cx));
  for (const auto& nf : corpus::general_fans()) fans.push_back(nf.fan);
  std::size_t impure = 0;
  for (const auto& fan : fans) {
    const Poset p = face_poset(fan);
    std::set<std::size_t> top_dims;
    for (auto m : fan.maximal_cones()) top_dims.insert(fan.cone(m).dim());
    const auto r = is_graded(p);
    CHECK(r.has_value() == (top_dims.size() == 1));
    CHECK(r.has_value() == oracle::graded(order_of(p)));
    if (!r) {
      ++impure;
      continue;
    }
    for (std::size_t c = 0; c < fan.size(); ++c) CHECK((*r)[c] == fan.cone(c).dim());
  }
  CHECK(impure > 0);
}

TEST_CASE("poset invariants on random posets") {
  for (const auto& p : corpus::random_posets(60, 2024)) {
    const auto leq = order_of(p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto up = open_interval_elements(p, x);
      CHECK(std::find(up.begin(), up.end(), x) == up.end());
      std::vector<Element> expected;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (y != x && p.leq(x, y)) expected.push_back(y);
      CHECK(up == expected);
      CHECK(is_lower_set(p, strict_down_set(p, x)));
    }
    // Hasse edges are exactly the covers of the closure.
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        bool cover = p.less(x, y);
        for (std::size_t z = 0; z < p.size() && cover; ++z)
          if (p.less(x, z) && p.less(z, y)) cover = false;
        CHECK(p.covers(x, y) == cover);
      }

    const auto opens = lower_sets(p);
    const auto brute = oracle::lower_sets(leq);
    CHECK(opens.size() == brute.size());
    std::set<std::vector<Element>> family(opens.begin(), opens.end());
    for (const auto& u : brute) CHECK(family.count(u) == 1);
    for (const auto& u : opens)
      for (const auto& v : opens) {
        std::vector<Element> uni, inter;
        std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(uni));
        std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(inter));
        CHECK(family.count(uni) == 1);
        CHECK(family.count(inter) == 1);
      }

    // Chains: strict_chains and the order complex against subset enumeration.
    const auto all = oracle::chains(leq);
    const auto sc = strict_chains(p, p.size());
    std::size_t count = 0;
    for (const auto& group : sc) count += group.size();
    CHECK(count + 1 == all.size());
    const auto oc = order_complex(p);
    CHECK(oc.face_count() == all.size());
    for (auto c : all) CHECK(oc.contains(c));
    for (FaceMask f : oc.faces())
      for (auto v : face_indices(f)) CHECK(oc.contains(f & ~(FaceMask{1} << v)));

    CHECK(is_graded(p).has_value() == oracle::graded(leq));
  }
}
