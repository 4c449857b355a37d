#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crownfree/hypergraph.hpp"

namespace crownfree {

class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Color of a link-graph edge: which vertex of the (ascending) base triple
/// the originating 3-graph edge contains.
enum class LinkColor : std::uint8_t { kA = 0, kB = 1, kC = 2 };

char color_name(LinkColor c);

struct ColoredEdge {
  int u = 0;  // u < v
  int v = 0;
  LinkColor color = LinkColor::kA;
  /// Originating 3-graph edge, when the link graph was taken from a graph.
  std::optional<EdgeId> source;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// The 3-edge-colored link graph G(e) of a base edge e = {a, b, c}.
///
/// Edges are sorted by color, then by (u, v). Color kA belongs to base[0],
/// kB to base[1], kC to base[2].
struct ColoredLinkGraph {
  Triple base{};
  std::vector<int> vertices;
  std::vector<ColoredEdge> edges;

  std::vector<ColoredEdge> color_class(LinkColor c) const;
};

/// Builds a link graph from colored pairs; sorts edges and derives the vertex set.
ColoredLinkGraph make_link_graph(const Triple& base, std::vector<ColoredEdge> edges);

/// Checks the structural invariants of a link graph (matching color classes,
/// no base vertex touched, distinct underlying pairs). Empty means valid.
std::vector<std::string> link_graph_violations(const ColoredLinkGraph& g);

/// A crown: a base edge and three jewels. jewels[i] meets the base in base[i]
/// (base vertices ascending).
struct CrownWitness {
  EdgeId base;
  std::array<EdgeId, 3> jewels;

  friend bool operator==(const CrownWitness&, const CrownWitness&) = default;
};

/// Empty iff the witness is a crown in h.
std::vector<std::string> witness_violations(const LinearThreeGraph& h, const CrownWitness& w);
inline bool is_valid_witness(const LinearThreeGraph& h, const CrownWitness& w) {
  return witness_violations(h, w).empty();
}

ColoredLinkGraph link_graph(const LinearThreeGraph& h, EdgeId e);

/// One edge per color, pairwise disjoint: the lexicographically least such
/// (A, B, C) triple in color-class order, or nothing.
std::optional<std::array<ColoredEdge, 3>> find_rainbow_matching(const ColoredLinkGraph& g);

std::optional<CrownWitness> find_crown_with_base(const LinearThreeGraph& h, EdgeId e);

/// Scans bases in EdgeId order and returns the first witness.
std::optional<CrownWitness> find_crown(const LinearThreeGraph& h);

/// Greedy construction for an edge whose degree vector dominates (6,4,2):
/// a jewel through the smallest-degree base vertex, then one through the
/// middle vertex avoiding it, then one through the largest avoiding both.
/// Ties go to the least EdgeId. Throws PreconditionError otherwise.
CrownWitness greedy_crown_642(const LinearThreeGraph& h, EdgeId e);

/// Exhaustive scan of all 4-edge subsets for the crown pattern. Test oracle;
/// shares no code with the link-graph detector.
std::optional<CrownWitness> crown_oracle(const LinearThreeGraph& h);

/// Renders a link graph in Graphviz DOT with `color` attributes A/B/C.
std::string link_graph_dot(const ColoredLinkGraph& g);

}  // namespace crownfree
