#include "crownfree/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crownfree {

DegreeVector::DegreeVector(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end(), std::greater<>());
  x_ = v[0];
  y_ = v[1];
  z_ = v[2];
}

bool dominates(const DegreeVector& d1, const DegreeVector& d2) {
  return d1.x() >= d2.x() && d1.y() >= d2.y() && d1.z() >= d2.z();
}

std::string to_string(const DegreeVector& d) {
  std::ostringstream os;
  os << '(' << d.x() << ',' << d.y() << ',' << d.z() << ')';
  return os.str();
}

Triple normalized(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

std::string triple_text(const Triple& t) {
  std::ostringstream os;
  os << '{' << t[0] << ',' << t[1] << ',' << t[2] << '}';
  return os.str();
}

LinearityViolation violation(LinearityViolation::Kind kind, std::size_t first, std::string message) {
  LinearityViolation v;
  v.kind = kind;
  v.first = first;
  v.message = std::move(message);
  return v;
}

}  // namespace

std::uint64_t LinearThreeGraph::pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

std::variant<LinearThreeGraph, LinearityViolation> validate_linear(std::span<const Triple> candidate, int n) {
  using Kind = LinearityViolation::Kind;
  if (n < 1) {
    return violation(Kind::kEmptyVertexSet, 0, "vertex count must be at least 1");
  }
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const Triple& t = candidate[i];
    for (int v : t) {
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "edge #" << i << ' ' << triple_text(t) << ": vertex " << v << " out of range [0," << n << ')';
        return violation(Kind::kVertexOutOfRange, i, os.str());
      }
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      std::ostringstream os;
      os << "edge #" << i << ' ' << triple_text(t) << ": repeated vertex";
      return violation(Kind::kRepeatedVertex, i, os.str());
    }
  }

  // First pass in input order so that the reported pair of edges is the first one met.
  std::unordered_map<std::uint64_t, std::size_t> owner;
  owner.reserve(candidate.size() * 3);
  std::unordered_map<std::uint64_t, std::size_t> seen_triple;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const Triple t = normalized(candidate[i]);
    const std::uint64_t tkey = (static_cast<std::uint64_t>(t[0]) * static_cast<std::uint64_t>(n) + t[1]) *
                                   static_cast<std::uint64_t>(n) +
                               t[2];
    if (auto it = seen_triple.find(tkey); it != seen_triple.end()) {
      LinearityViolation v = violation(Kind::kDuplicateEdge, it->second, "");
      v.second = i;
      std::ostringstream os;
      os << "edges #" << it->second << " and #" << i << " are the same edge " << triple_text(t);
      v.message = os.str();
      return v;
    }
    seen_triple.emplace(tkey, i);
    const std::array<std::array<int, 2>, 3> pairs{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    for (const auto& p : pairs) {
      const std::uint64_t key = LinearThreeGraph::pair_key(p[0], p[1]);
      auto [it, inserted] = owner.emplace(key, i);
      if (!inserted) {
        LinearityViolation v = violation(Kind::kSharedPair, it->second, "");
        v.second = i;
        v.pair = p;
        std::ostringstream os;
        os << "edges #" << it->second << ' ' << triple_text(normalized(candidate[it->second])) << " and #" << i << ' '
           << triple_text(t) << " share pair {" << p[0] << ',' << p[1] << '}';
        v.message = os.str();
        return v;
      }
    }
  }

  LinearThreeGraph g;
  g.n_ = n;
  g.edges_.reserve(candidate.size());
  for (const Triple& t : candidate) g.edges_.push_back(normalized(t));
  std::sort(g.edges_.begin(), g.edges_.end());
  g.incidence_.assign(static_cast<std::size_t>(n), {});
  g.pair_index_.reserve(g.edges_.size() * 3);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Triple& t = g.edges_[i];
    const auto id = static_cast<std::uint32_t>(i);
    g.pair_index_.emplace(LinearThreeGraph::pair_key(t[0], t[1]), id);
    g.pair_index_.emplace(LinearThreeGraph::pair_key(t[0], t[2]), id);
    g.pair_index_.emplace(LinearThreeGraph::pair_key(t[1], t[2]), id);
    for (int v : t) g.incidence_[static_cast<std::size_t>(v)].push_back(EdgeId{i});
  }
  return g;
}

LinearThreeGraph LinearThreeGraph::build(int n, std::vector<Triple> edges) {
  auto result = validate_linear(edges, n);
  if (auto* v = std::get_if<LinearityViolation>(&result)) throw GraphError(v->message);
  return std::get<LinearThreeGraph>(std::move(result));
}

LinearThreeGraph LinearThreeGraph::empty(int n) { return build(n, {}); }

void LinearThreeGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
  }
}

const Triple& LinearThreeGraph::edge(EdgeId e) const {
  if (e.index >= edges_.size()) {
    throw std::out_of_range("edge id " + std::to_string(e.index) + " out of range (" +
                            std::to_string(edges_.size()) + " edges)");
  }
  return edges_[e.index];
}

int LinearThreeGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size());
}

const std::vector<EdgeId>& LinearThreeGraph::incident(int v) const {
  check_vertex(v);
  return incidence_[static_cast<std::size_t>(v)];
}

std::optional<EdgeId> LinearThreeGraph::edge_containing(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (auto it = pair_index_.find(pair_key(u, v)); it != pair_index_.end()) return EdgeId{it->second};
  return std::nullopt;
}

bool LinearThreeGraph::can_add(const Triple& t) const {
  for (int v : t) {
    if (v < 0 || v >= n_) return false;
  }
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return false;
  return pair_free(t[0], t[1]) && pair_free(t[0], t[2]) && pair_free(t[1], t[2]);
}

LinearThreeGraph LinearThreeGraph::with_edge(const Triple& t) const {
  std::vector<Triple> next = edges_;
  next.push_back(t);
  return build(n_, std::move(next));
}

std::optional<EdgeId> LinearThreeGraph::find_edge(const Triple& t) const {
  const Triple s = normalized(t);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), s);
  if (it == edges_.end() || *it != s) return std::nullopt;
  return EdgeId{static_cast<std::size_t>(it - edges_.begin())};
}

DegreeVector degree_vector(const LinearThreeGraph& h, EdgeId e) {
  const Triple& t = h.edge(e);
  return {h.degree(t[0]), h.degree(t[1]), h.degree(t[2])};
}

std::vector<EdgeId> edges_covering(const LinearThreeGraph& h, std::span<const int> x) {
  std::vector<char> hit(h.num_edges(), 0);
  for (int v : x) {
    for (EdgeId e : h.incident(v)) hit[e.index] = 1;
  }
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(EdgeId{i});
  }
  return out;
}

VertexRemoval remove_vertices(const LinearThreeGraph& h, std::span<const int> x) {
  const int n = h.num_vertices();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v : x) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    removed[static_cast<std::size_t>(v)] = 1;
  }
  const int kept = n - static_cast<int>(std::count(removed.begin(), removed.end(), 1));
  if (kept == 0) throw GraphError("cannot remove every vertex: a 3-graph has a non-empty vertex set");

  VertexRemoval out{LinearThreeGraph::empty(kept), std::vector<int>(static_cast<std::size_t>(n), -1)};
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[static_cast<std::size_t>(v)]) out.old_to_new[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Triple> edges;
  for (const Triple& t : h.edges()) {
    if (removed[static_cast<std::size_t>(t[0])] || removed[static_cast<std::size_t>(t[1])] ||
        removed[static_cast<std::size_t>(t[2])]) {
      continue;
    }
    edges.push_back({out.old_to_new[static_cast<std::size_t>(t[0])], out.old_to_new[static_cast<std::size_t>(t[1])],
                     out.old_to_new[static_cast<std::size_t>(t[2])]});
  }
  out.graph = LinearThreeGraph::build(kept, std::move(edges));
  return out;
}

}  // namespace crownfree
