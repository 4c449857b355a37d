#include <algorithm>
#include <numeric>
#include <set>

#include "crownfree/canonical.hpp"
#include "crownfree/extremal.hpp"
#include "crownfree/random.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace crownfree;

namespace {

Permutation random_permutation(Rng& rng, int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

// Least relabeled edge list over all n! permutations.
std::vector<Triple> brute_canonical(int n, const std::vector<Triple>& edges) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Triple> best;
  bool first = true;
  do {
    auto e = permute_edges(edges, p);
    if (first || e < best) best = std::move(e);
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::size_t brute_automorphisms(int n, const std::vector<Triple>& edges) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    count += permute_edges(edges, p) == edges;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::size_t group_order(int n, const std::vector<Permutation>& gens) {
  Permutation id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> todo{id};
  while (!todo.empty()) {
    const Permutation g = todo.back();
    todo.pop_back();
    for (const Permutation& s : gens) {
      Permutation h(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) h[i] = s[static_cast<std::size_t>(g[i])];
      if (seen.insert(h).second) todo.push_back(std::move(h));
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("crown and Fano canonical forms are relabeling-invariant") {
  Rng rng(7);
  const auto c = fixtures::crown();
  const auto f = fixtures::fano();
  const auto cc = canonical_form(c);
  const auto fc = canonical_form(f);
  for (int i = 0; i < 50; ++i) {
    const auto pc = LinearThreeGraph::build(9, permute_edges(c.edges(), random_permutation(rng, 9)));
    CHECK(canonical_form(pc).same_class(cc));
    const auto pf = LinearThreeGraph::build(7, permute_edges(f.edges(), random_permutation(rng, 7)));
    CHECK(canonical_form(pf).same_class(fc));
  }
  CHECK_FALSE(isomorphic(c, fixtures::matching4()));
}

TEST_CASE("labeling maps the input onto the canonical edges") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(3, 15);
    const auto g = random_linear_graph(n, rng.between(0, n * (n - 1) / 6), rng.next()).graph;
    const auto can = canonical_form(g);
    CHECK(permute_edges(g.edges(), can.labeling) == can.edges);
    for (const Permutation& a : can.generators) CHECK(permute_edges(g.edges(), a) == g.edges());
  }
}

TEST_CASE("canonical form agrees with the brute-force minimum-relabeling oracle") {
  // Two graphs are isomorphic iff their brute-force minima agree; the
  // canonizer must induce exactly the same partition into classes.
  Rng rng(11);
  struct Sample {
    int n;
    std::vector<Triple> fast;
    std::vector<Triple> brute;
  };
  std::vector<Sample> samples;
  for (int i = 0; i < 300; ++i) {
    const int n = rng.between(3, 7);
    const int m = rng.between(0, n * (n - 1) / 6);
    const auto g = random_linear_graph(n, m, rng.next(), 100).graph;
    samples.push_back({n, canonical_form(g).edges, brute_canonical(n, g.edges())});
    const auto relabeled = permute_edges(g.edges(), random_permutation(rng, n));
    samples.push_back({n, canonize(n, relabeled).edges, brute_canonical(n, relabeled)});
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].n != samples[j].n) continue;
      CHECK((samples[i].fast == samples[j].fast) == (samples[i].brute == samples[j].brute));
    }
  }
}

TEST_CASE("generators generate the full automorphism group") {
  CHECK(group_order(7, canonical_form(fixtures::fano()).generators) == 168);
  CHECK(group_order(9, canonical_form(fixtures::crown()).generators) == brute_automorphisms(9, fixtures::crown().edges()));
  CHECK(group_order(9, canonical_form(fixtures::ag23()).generators) == 432);
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const int n = rng.between(3, 8);
    const auto g = random_linear_graph(n, rng.between(0, n * (n - 1) / 6), rng.next(), 100).graph;
    CHECK(group_order(n, canonical_form(g).generators) == brute_automorphisms(n, g.edges()));
  }
}

TEST_CASE("edge orbits") {
  const auto f = canonical_form(fixtures::fano());
  const auto orbits = edge_orbits(f.edges, f.generators);
  CHECK(std::all_of(orbits.begin(), orbits.end(), [](int x) { return x == 0; }));

  const auto c = fixtures::crown();
  const auto cc = canonical_form(c);
  const auto co = edge_orbits(c.edges(), cc.generators);
  CHECK(co == std::vector<int>{0, 1, 1, 1});
}
