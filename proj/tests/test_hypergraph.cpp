#include <set>

#include "crownfree/hypergraph.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace crownfree;

namespace {

LinearityViolation violation_of(std::vector<Triple> edges, int n) {
  auto r = validate_linear(edges, n);
  REQUIRE(std::holds_alternative<LinearityViolation>(r));
  return std::get<LinearityViolation>(r);
}

}  // namespace

TEST_CASE("validate_linear accepts the crown and the Fano plane") {
  const std::vector<Triple> crown{{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}};
  CHECK(std::holds_alternative<LinearThreeGraph>(validate_linear(crown, 9)));

  const auto fano = fixtures::fano_edges();
  CHECK(std::holds_alternative<LinearThreeGraph>(validate_linear(fano, 7)));
  // every one of the 21 pairs lies in exactly one line
  for (int u = 0; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) {
      int hits = 0;
      for (const Triple& t : fano) {
        const std::set<int> s(t.begin(), t.end());
        hits += s.count(u) && s.count(v);
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("validate_linear names the offending triples") {
  const auto shared = violation_of({{0, 1, 2}, {0, 1, 3}}, 4);
  CHECK(shared.kind == LinearityViolation::Kind::kSharedPair);
  CHECK(shared.first == 0);
  CHECK(shared.second == 1u);
  CHECK(shared.pair == std::array<int, 2>{0, 1});
  CHECK(shared.message.find("share pair {0,1}") != std::string::npos);

  CHECK(violation_of({{0, 1, 2}}, 0).kind == LinearityViolation::Kind::kEmptyVertexSet);
  CHECK(violation_of({{0, 1, 5}}, 5).kind == LinearityViolation::Kind::kVertexOutOfRange);
  CHECK(violation_of({{0, -1, 2}}, 5).kind == LinearityViolation::Kind::kVertexOutOfRange);
  CHECK(violation_of({{0, 1, 1}}, 5).kind == LinearityViolation::Kind::kRepeatedVertex);
  const auto dup = violation_of({{3, 4, 5}, {0, 1, 2}, {2, 1, 0}}, 6);
  CHECK(dup.kind == LinearityViolation::Kind::kDuplicateEdge);
  CHECK(dup.first == 1);
  CHECK(dup.second == 2u);
}

TEST_CASE("build normalizes and throws on violations") {
  const auto h = LinearThreeGraph::build(6, {{5, 4, 3}, {2, 0, 1}});
  CHECK(h.edges() == std::vector<Triple>{{0, 1, 2}, {3, 4, 5}});
  CHECK_THROWS_AS(LinearThreeGraph::build(4, {{0, 1, 2}, {0, 1, 3}}), GraphError);
  CHECK_THROWS_AS(h.edge(EdgeId{2}), std::out_of_range);
}

TEST_CASE("degree vectors") {
  const auto c = fixtures::crown();
  CHECK(degree_vector(c, *c.find_edge({0, 1, 2})) == DegreeVector(2, 2, 2));
  CHECK(degree_vector(c, *c.find_edge({0, 3, 4})) == DegreeVector(2, 1, 1));
  const auto f = fixtures::fano();
  for (std::size_t i = 0; i < f.num_edges(); ++i) CHECK(degree_vector(f, EdgeId{i}) == DegreeVector(3, 3, 3));
  CHECK(DegreeVector(1, 3, 2) == DegreeVector(3, 2, 1));
  CHECK(to_string(DegreeVector(6, 4, 2)) == "(6,4,2)");
}

TEST_CASE("domination order") {
  CHECK(dominates({6, 4, 2}, {6, 4, 2}));
  CHECK_FALSE(dominates({5, 5, 5}, {6, 4, 2}));
  CHECK(dominates({7, 4, 3}, {6, 4, 2}));
  CHECK_FALSE(dominates({6, 3, 3}, {6, 4, 2}));
}

TEST_CASE("edges_covering") {
  const auto c = fixtures::crown();
  const std::vector<int> x0{0};
  const auto e0 = edges_covering(c, x0);
  REQUIRE(e0.size() == 2);
  CHECK(c.edge(e0[0]) == Triple{0, 1, 2});
  CHECK(c.edge(e0[1]) == Triple{0, 3, 4});
  std::vector<int> all(9);
  for (int i = 0; i < 9; ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(edges_covering(c, all).size() == 4);
  CHECK(edges_covering(c, std::vector<int>{}).empty());
}

TEST_CASE("remove_vertices") {
  const auto c = fixtures::crown();
  const auto r = remove_vertices(c, std::vector<int>{3});
  CHECK(r.graph.num_vertices() == 8);
  CHECK(r.graph.num_edges() == 3);
  CHECK(r.old_to_new[3] == -1);
  CHECK(r.old_to_new[4] == 3);

  const auto same = remove_vertices(c, std::vector<int>{});
  CHECK(same.graph == c);

  const auto f = remove_vertices(fixtures::fano(), std::vector<int>{0});
  CHECK(f.graph.num_vertices() == 6);
  CHECK(f.graph.num_edges() == 4);

  std::vector<int> all(9);
  for (int i = 0; i < 9; ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK_THROWS_AS(remove_vertices(c, all), GraphError);
}

TEST_CASE("pair index and incidence agree with the edge list") {
  const auto f = fixtures::fano();
  for (int u = 0; u < 7; ++u) {
    CHECK(f.degree(u) == 3);
    CHECK(f.incident(u).size() == 3);
    for (int v = 0; v < 7; ++v) {
      if (u == v) continue;
      const auto e = f.edge_containing(u, v);
      REQUIRE(e.has_value());
      const Triple& t = f.edge(*e);
      CHECK(std::count(t.begin(), t.end(), u) == 1);
      CHECK(std::count(t.begin(), t.end(), v) == 1);
    }
  }
  const auto c = fixtures::crown();
  CHECK(c.pair_free(3, 5));
  CHECK_FALSE(c.pair_free(0, 1));
  CHECK(c.can_add({3, 5, 7}));
  CHECK_FALSE(c.can_add({0, 1, 8}));
  const auto c2 = c.with_edge({3, 5, 7});
  CHECK(c2.num_edges() == 5);
  CHECK(c2.degree(3) == 2);
  CHECK_THROWS_AS(c.with_edge({0, 1, 8}), GraphError);
}
