#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "crownfree/hypergraph.hpp"

namespace crownfree {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
};

struct SearchOptions {
  int threads = 1;
  SearchBudget budget;
  /// Prune branches whose new edge completes a crown. Off only for enumeration.
  bool crown_filter = true;
  /// Edge-count branch and bound against the incumbent.
  bool bound_pruning = true;
  /// Caps the bound at the largest m with 3m < 5n. Assumes the result being
  /// tested; for exploratory runs only.
  bool unsafe_5n3_prune = false;
  std::size_t witness_cap = 10;
};

/// Exact linear Turán number of the crown for one n, with evidence.
struct ExtremalCertificate {
  int n = 0;
  int value = 0;
  /// Canonical forms of extremal graphs, sorted, at most witness_cap of them.
  std::vector<LinearThreeGraph> witnesses;
  /// Number of extremal isomorphism classes seen (may exceed witnesses.size()).
  std::size_t extremal_classes = 0;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
  double elapsed_seconds = 0.0;
  int lower_bound_seed = 0;
  SearchOptions options;
};

/// Canonical-augmentation search over crown-free linear 3-graphs on n
/// vertices. Each isomorphism class is generated at most once: a child G + t
/// is kept only when t lies in the automorphism orbit of G + t's canonical
/// deletion edge (largest degree vector, ties broken by canonical position),
/// and sibling candidates are reduced to Aut(G)-orbits first.
///
/// The edge-count bound at a node with m edges is
///   m + min( floor(F / 3), floor( sum_v floor(f_v / 2) / 3 ) )
/// where F is the number of uncovered vertex pairs and f_v = n - 1 - 2 d(v)
/// the uncovered pairs at v (each new edge uses two at each of its vertices).
/// Branches are cut only when the bound is strictly below the incumbent, so
/// every extremal class is reached and the result does not depend on the
/// thread schedule. Requires 3 <= n <= 31.
ExtremalCertificate exact_ex(int n, const SearchOptions& options = {});

/// Visits every isomorphism class of linear 3-graphs on n vertices exactly
/// once (crown-free ones only when crown_filter is set), passing its
/// canonical edge list. Requires 1 <= n <= 31.
std::uint64_t enumerate_linear_graphs(int n, bool crown_filter,
                                      const std::function<void(std::span<const Triple>)>& visit);

/// Does adding `t` to the crown-free graph `edges` on n vertices create a
/// crown? Only crowns through t are examined: t as base, or t as a jewel of a
/// base meeting it. `t` must be addable (no shared pair).
bool adding_creates_crown(int n, std::span<const Triple> edges, const Triple& t);

/// Hub gadget: hubs 0,1,2 and floor((n-3)/4) blocks of four vertices whose
/// K4 pairs are 3-edge-colored by a one-factorization; a pair of color i
/// plus hub i is an edge. Self-checked for linearity and crown-freeness
/// before returning; 6 floor((n-3)/4) edges.
LinearThreeGraph lower_bound_construction(int n);

int lower_bound_value(int n);

struct RandomGraphResult {
  LinearThreeGraph graph;
  /// Fewer than the requested edges were placed within the retry budget.
  bool saturated = false;
};

/// Seeded random triples, rejecting any that reuse a covered pair.
RandomGraphResult random_linear_graph(int n, int m, std::uint64_t seed, std::uint64_t retry_budget = 0);

/// Local search for large crown-free graphs: greedy random insertions with
/// random deletion kicks, starting from the hub gadget. Never worse than the
/// gadget; no optimality claim.
LinearThreeGraph densify_crown_free(int n, std::uint64_t seed, int iterations);

}  // namespace crownfree
