#pragma once

#include <span>
#include <vector>

#include "crownfree/hypergraph.hpp"

namespace crownfree {

/// A vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<int>;

/// Result of canonical labeling.
///
/// Two graphs are isomorphic iff their (n, edges) agree. `labeling` maps each
/// input vertex to its canonical label, so relabeling the input by it yields
/// `edges`. `generators` generate the automorphism group of the input graph,
/// expressed on input labels.
struct Canonization {
  int n = 0;
  std::vector<Triple> edges;
  std::vector<int> labeling;
  std::vector<Permutation> generators;

  LinearThreeGraph graph() const { return LinearThreeGraph::build(n, edges); }

  bool same_class(const Canonization& other) const { return n == other.n && edges == other.edges; }
};

/// Canonical form of an arbitrary normalized-or-not triple list on n vertices.
///
/// The input need not be linear; only the incidence structure is used.
/// Deterministic: the result depends only on the isomorphism class (edges) and
/// on the input labels (labeling, generators).
Canonization canonize(int n, std::span<const Triple> edges);

Canonization canonical_form(const LinearThreeGraph& h);

bool isomorphic(const LinearThreeGraph& a, const LinearThreeGraph& b);

/// Applies a vertex permutation to every edge and renormalizes.
std::vector<Triple> permute_edges(std::span<const Triple> edges, const Permutation& perm);

/// Orbits of the edges under the group generated by `generators`.
/// Returns, for each edge index, the least edge index in its orbit.
/// `edges` must be normalized and sorted.
std::vector<int> edge_orbits(std::span<const Triple> edges, std::span<const Permutation> generators);

}  // namespace crownfree
