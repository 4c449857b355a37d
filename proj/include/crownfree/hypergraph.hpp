#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace crownfree {

/// A 3-edge as three vertex indices. Normalized triples are strictly increasing.
using Triple = std::array<int, 3>;

/// Index into the (normalized, sorted) edge list of a LinearThreeGraph.
struct EdgeId {
  std::size_t index = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Non-increasing degree triple of an edge.
class DegreeVector {
 public:
  DegreeVector() = default;
  /// Coordinates may be given in any order; they are stored sorted non-increasing.
  DegreeVector(int a, int b, int c);

  int x() const { return x_; }
  int y() const { return y_; }
  int z() const { return z_; }
  int sum() const { return x_ + y_ + z_; }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  /// Lexicographic order on (x, y, z); not the domination order.
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

 private:
  int x_ = 0;
  int y_ = 0;
  int z_ = 0;
};

/// Componentwise partial order: d1 >= d2 in every coordinate.
bool dominates(const DegreeVector& d1, const DegreeVector& d2);

std::string to_string(const DegreeVector& d);

/// Why a raw triple list failed to form a linear 3-graph.
struct LinearityViolation {
  enum class Kind {
    kEmptyVertexSet,
    kVertexOutOfRange,
    kRepeatedVertex,
    kDuplicateEdge,
    kSharedPair,
  };

  Kind kind = Kind::kEmptyVertexSet;
  /// Positions in the raw input list. `second` is set for duplicate and shared-pair reports.
  std::size_t first = 0;
  std::optional<std::size_t> second;
  /// The offending vertex pair for kSharedPair.
  std::optional<std::array<int, 2>> pair;
  std::string message;
};

class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

/// A linear 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are normalized (each triple ascending, list sorted, no duplicates)
/// and any two edges share at most one vertex. The pair index and the
/// per-vertex incidence lists are built once at construction; the value is
/// immutable afterwards.
class LinearThreeGraph {
 public:
  /// Validates and normalizes; throws GraphError on any violation.
  static LinearThreeGraph build(int n, std::vector<Triple> edges);
  static LinearThreeGraph empty(int n);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Triple>& edges() const { return edges_; }

  /// Throws std::out_of_range for an invalid id.
  const Triple& edge(EdgeId e) const;
  int degree(int v) const;
  const std::vector<EdgeId>& incident(int v) const;

  /// The unique edge containing both u and v, if any.
  std::optional<EdgeId> edge_containing(int u, int v) const;
  bool pair_free(int u, int v) const { return !edge_containing(u, v).has_value(); }
  bool can_add(const Triple& t) const;

  /// Returns this graph plus one edge; throws GraphError if the result is not linear.
  LinearThreeGraph with_edge(const Triple& t) const;

  /// Position of a normalized triple in the edge list.
  std::optional<EdgeId> find_edge(const Triple& t) const;

  friend bool operator==(const LinearThreeGraph& a, const LinearThreeGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend std::variant<LinearThreeGraph, LinearityViolation> validate_linear(std::span<const Triple>, int);

  LinearThreeGraph() = default;
  void check_vertex(int v) const;

  static std::uint64_t pair_key(int u, int v);

  int n_ = 0;
  std::vector<Triple> edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> pair_index_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Normalizes a raw triple list into a LinearThreeGraph, or reports the first
/// offending triple / pair of triples (by raw input position).
std::variant<LinearThreeGraph, LinearityViolation> validate_linear(std::span<const Triple> candidate, int n);

DegreeVector degree_vector(const LinearThreeGraph& h, EdgeId e);

/// E_X(H): all edges meeting X, in EdgeId order.
std::vector<EdgeId> edges_covering(const LinearThreeGraph& h, std::span<const int> x);

struct VertexRemoval {
  LinearThreeGraph graph;
  /// old_to_new[v] is the new index of v, or -1 if v was removed.
  std::vector<int> old_to_new;
};

/// Deletes X and every edge meeting X, reindexing the surviving vertices in order.
/// Throws GraphError when X covers every vertex.
VertexRemoval remove_vertices(const LinearThreeGraph& h, std::span<const int> x);

/// Sorts a triple ascending.
Triple normalized(Triple t);

}  // namespace crownfree
