#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crownfree/crown.hpp"
#include "crownfree/discharging.hpp"
#include "crownfree/hypergraph.hpp"
#include "crownfree/random.hpp"

namespace crownfree {

struct ReplayFailure {
  std::string instance;
  std::string claim;
};

/// Outcome of one verification suite. Passes iff there are no failures.
struct ReplayReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::vector<ReplayFailure> failures;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  /// Named findings, in insertion order (e.g. {"order", "11"}).
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const { return failures.empty(); }
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  void check(bool ok, const std::string& instance, const std::string& claim) {
    if (!ok) failures.push_back({instance, claim});
  }
};

/// Vertex labels used by the (5,5,5) replay: base a, b, c and link vertices v1..v8.
namespace replay_labels {
inline constexpr int kA = 0;
inline constexpr int kB = 1;
inline constexpr int kC = 2;
/// v(i) for i in 1..8.
constexpr int v(int i) { return 2 + i; }
}  // namespace replay_labels

/// The rainbow-matching-free link graph of a (5,5,5) edge: two alternating
/// A/B 4-cycles on v1..v4 and v5..v8 with their diagonals colored C.
ColoredLinkGraph canonical_link_graph_G();

/// The 3-graph made of the base edge plus {x} + pair for every colored pair.
LinearThreeGraph realize_link_graph(const ColoredLinkGraph& g);

struct LinkGraphEnumeration {
  /// One representative per isomorphism class (colors may be permuted).
  std::vector<ColoredLinkGraph> classes;
  std::uint64_t ab_configurations = 0;  // B-matchings tried against the fixed A-matching
  std::uint64_t ab_classes = 0;
  std::uint64_t ab_eight_cycles = 0;
  std::uint64_t ab_two_four_cycles = 0;
  std::uint64_t ab_with_new_vertices = 0;
  std::uint64_t eight_cycle_completions = 0;  // C-matchings found over 8-cycle classes
  std::uint64_t completions = 0;              // C-matchings found overall, before deduplication
};

/// Exhaustively enumerates rainbow-matching-free link graphs in which every
/// color class is a matching of size 4 and no pair carries two colors.
LinkGraphEnumeration enumerate_555_link_graphs();

/// Least n with n(n-1)/6 >= 5n/3, by exact integer comparison.
int min_counterexample_order();

/// Random instance with a planted edge whose degree vector dominates (6,4,2)
/// plus random linear noise. Returns the graph and the planted edge.
std::pair<LinearThreeGraph, EdgeId> planted_642_instance(Rng& rng, int n);

/// Random degree function with n <= max_n, minimum >= 2, sum 5n + l and the
/// residue absorbable; some vertices planted at degree 9..15.
DegreeFunction random_degree_function(Rng& rng, int max_n);

ReplayReport replay_555_extensions();
ReplayReport verify_642_on_corpus(std::uint64_t seed, std::size_t count, int min_n, int max_n);
ReplayReport links555_suite();
ReplayReport order11_suite();
ReplayReport discharge_suite(std::uint64_t seed, std::size_t count, int max_n = 40);

/// "lemma1", "links555", "replay3", "discharge", "order11", or "all".
/// Throws std::invalid_argument for an unknown name.
std::vector<ReplayReport> run_suites(const std::string& name, std::uint64_t seed, std::size_t count);

}  // namespace crownfree
