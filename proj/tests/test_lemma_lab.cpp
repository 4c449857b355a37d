#include "crownfree/canonical.hpp"
#include "crownfree/lemma_lab.hpp"
#include "crownfree/serialize.hpp"
#include "doctest.h"

using namespace crownfree;

namespace {

std::string fact(const ReplayReport& r, const std::string& key) {
  for (const auto& [k, v] : r.facts) {
    if (k == key) return v;
  }
  return "";
}

}  // namespace

TEST_CASE("canonical link graph G") {
  const auto g = canonical_link_graph_G();
  CHECK(link_graph_violations(g).empty());
  CHECK(g.vertices.size() == 8);
  for (LinkColor c : {LinkColor::kA, LinkColor::kB, LinkColor::kC}) CHECK(g.color_class(c).size() == 4);
  CHECK_FALSE(find_rainbow_matching(g).has_value());
  const auto h = realize_link_graph(g);
  CHECK(h.num_vertices() == 11);
  CHECK(h.num_edges() == 13);
}

TEST_CASE("enumeration of (5,5,5) link graphs") {
  const auto e = enumerate_555_link_graphs();
  REQUIRE(e.classes.size() == 1);
  CHECK(canonical_form(realize_link_graph(e.classes[0])).same_class(canonical_form(realize_link_graph(canonical_link_graph_G()))));
  CHECK(e.ab_eight_cycles == 1);
  CHECK(e.ab_two_four_cycles == 1);
  CHECK(e.eight_cycle_completions == 0);
  CHECK(e.ab_classes == e.ab_eight_cycles + e.ab_two_four_cycles + e.ab_with_new_vertices);
}

TEST_CASE("minimum counter-example order") {
  CHECK(min_counterexample_order() == 11);
  CHECK(10 * 9 / 6 == 15);
  CHECK(11 * 10 == 110);
}

TEST_CASE("suites pass") {
  for (const auto& r : run_suites("all", 1, 300)) {
    CAPTURE(r.suite);
    CHECK(r.passed());
    CHECK(r.instances > 0);
  }
  CHECK(fact(replay_555_extensions(), "|E_X|") == "13");
  CHECK(fact(order11_suite(), "order") == "11");
  CHECK_THROWS_AS(run_suites("nope", 1, 1), std::invalid_argument);
}

TEST_CASE("reports are deterministic for a seed") {
  const auto a = reports_to_json(run_suites("lemma1", 5, 100), false).dump();
  const auto b = reports_to_json(run_suites("lemma1", 5, 100), false).dump();
  CHECK(a == b);
  const auto c = reports_to_json(run_suites("discharge", 5, 100), false).dump();
  CHECK(c == reports_to_json(run_suites("discharge", 5, 100), false).dump());
}

TEST_CASE("planted instances need room") {
  Rng rng(1);
  CHECK_THROWS_AS(planted_642_instance(rng, 12), PreconditionError);
}
