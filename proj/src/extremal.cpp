#include "crownfree/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "crownfree/canonical.hpp"
#include "crownfree/crown.hpp"
#include "crownfree/random.hpp"

namespace crownfree {

namespace {

using Mask = std::uint32_t;

Mask bit(int v) { return Mask{1} << v; }
Mask mask_of(const Triple& t) { return bit(t[0]) | bit(t[1]) | bit(t[2]); }

// Incidence view of a small graph: per-vertex lists of edge masks.
struct MaskGraph {
  int n = 0;
  std::vector<Mask> edge_mask;
  std::vector<std::vector<Mask>> inc;
  std::vector<Mask> covered;  // covered[v]: vertices sharing an edge with v
  std::vector<int> degree;

  MaskGraph(int n_, std::span<const Triple> edges)
      : n(n_), inc(static_cast<std::size_t>(n_)), covered(static_cast<std::size_t>(n_), 0),
        degree(static_cast<std::size_t>(n_), 0) {
    edge_mask.reserve(edges.size());
    for (const Triple& t : edges) {
      const Mask m = mask_of(t);
      edge_mask.push_back(m);
      for (int v : t) {
        inc[static_cast<std::size_t>(v)].push_back(m);
        covered[static_cast<std::size_t>(v)] |= m & ~bit(v);
        ++degree[static_cast<std::size_t>(v)];
      }
    }
  }

  bool addable(int a, int b, int c) const {
    return !(covered[static_cast<std::size_t>(a)] & (bit(b) | bit(c))) &&
           !(covered[static_cast<std::size_t>(b)] & bit(c));
  }

  bool creates_crown(const Triple& t) const {
    const Mask tm = mask_of(t);
    const auto& ia = inc[static_cast<std::size_t>(t[0])];
    const auto& ib = inc[static_cast<std::size_t>(t[1])];
    const auto& ic = inc[static_cast<std::size_t>(t[2])];
    // t as the base.
    for (Mask fa : ia) {
      for (Mask fb : ib) {
        if (fa & fb) continue;
        for (Mask fc : ic) {
          if (!(fc & (fa | fb))) return true;
        }
      }
    }
    // t as a jewel of a base f meeting it at x.
    for (int x : t) {
      for (Mask f : inc[static_cast<std::size_t>(x)]) {
        const Mask rest = f & ~bit(x);
        const int p = std::countr_zero(rest);
        const int q = std::countr_zero(rest & (rest - 1));
        for (Mask jp : inc[static_cast<std::size_t>(p)]) {
          if (jp == f || (jp & tm)) continue;
          for (Mask jq : inc[static_cast<std::size_t>(q)]) {
            if (jq != f && !(jq & (tm | jp))) return true;
          }
        }
      }
    }
    return false;
  }

  // Best achievable edge count for any linear supergraph.
  int edge_bound() const {
    const int m = static_cast<int>(edge_mask.size());
    const int free_pairs = n * (n - 1) / 2 - 3 * m;
    int capacity = 0;
    for (int v = 0; v < n; ++v) capacity += (n - 1 - 2 * degree[static_cast<std::size_t>(v)]) / 2;
    return m + std::min(free_pairs / 3, capacity / 3);
  }
};

DegreeVector invariant(const std::vector<int>& degree, const Triple& t) {
  return {degree[static_cast<std::size_t>(t[0])], degree[static_cast<std::size_t>(t[1])],
          degree[static_cast<std::size_t>(t[2])]};
}

struct Node {
  std::vector<Triple> edges;  // canonical labels, sorted
  std::vector<Permutation> generators;
};

Permutation conjugate(const Permutation& g, const std::vector<int>& lab) {
  Permutation out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[static_cast<std::size_t>(lab[v])] = lab[static_cast<std::size_t>(g[v])];
  return out;
}

Node canonical_node(int n, std::span<const Triple> edges) {
  Canonization c = canonize(n, edges);
  Node node;
  node.edges = std::move(c.edges);
  node.generators.reserve(c.generators.size());
  for (const Permutation& g : c.generators) node.generators.push_back(conjugate(g, c.labeling));
  return node;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// The canonical-augmentation step: accepted children of a node, one per
// isomorphism class whose canonical parent is this node.
std::vector<Node> children(int n, const Node& node, bool crown_filter) {
  const MaskGraph g(n, node.edges);
  std::vector<Triple> candidates;
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> index(nn * nn * nn, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.covered[static_cast<std::size_t>(a)] & bit(b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.addable(a, b, c)) continue;
        const Triple t{a, b, c};
        if (crown_filter && g.creates_crown(t)) continue;
        index[(static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)) * nn + static_cast<std::size_t>(c)] =
            static_cast<int>(candidates.size());
        candidates.push_back(t);
      }
    }
  }

  UnionFind orbits(candidates.size());
  for (const Permutation& p : node.generators) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Triple& t = candidates[i];
      const Triple s = normalized({p[static_cast<std::size_t>(t[0])], p[static_cast<std::size_t>(t[1])],
                                   p[static_cast<std::size_t>(t[2])]});
      const int j =
          index[(static_cast<std::size_t>(s[0]) * nn + static_cast<std::size_t>(s[1])) * nn + static_cast<std::size_t>(s[2])];
      if (j >= 0) orbits.join(i, static_cast<std::size_t>(j));
    }
  }

  std::vector<Node> out;
  std::vector<int> degree(nn);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (orbits.find(i) != i) continue;
    const Triple& t = candidates[i];

    degree = g.degree;
    for (int v : t) ++degree[static_cast<std::size_t>(v)];
    const DegreeVector key = invariant(degree, t);
    bool is_max = true;
    for (const Triple& f : node.edges) {
      if (invariant(degree, f) > key) {
        is_max = false;
        break;
      }
    }
    if (!is_max) continue;

    std::vector<Triple> child = node.edges;
    child.insert(std::upper_bound(child.begin(), child.end(), t), t);
    Canonization c = canonize(n, child);

    // Canonical deletion edge: maximal invariant, then greatest canonical image.
    std::size_t deletion = 0;
    Triple deletion_image{-1, -1, -1};
    std::size_t t_pos = 0;
    for (std::size_t k = 0; k < child.size(); ++k) {
      const Triple& f = child[k];
      if (f == t) t_pos = k;
      if (invariant(degree, f) != key) continue;
      const Triple image = normalized({c.labeling[static_cast<std::size_t>(f[0])], c.labeling[static_cast<std::size_t>(f[1])],
                                       c.labeling[static_cast<std::size_t>(f[2])]});
      if (image > deletion_image) {
        deletion_image = image;
        deletion = k;
      }
    }
    if (deletion != t_pos) {
      const std::vector<int> rep = edge_orbits(child, c.generators);
      if (rep[deletion] != rep[t_pos]) continue;
    }

    Node next;
    next.edges = std::move(c.edges);
    next.generators.reserve(c.generators.size());
    for (const Permutation& p : c.generators) next.generators.push_back(conjugate(p, c.labeling));
    out.push_back(std::move(next));
  }
  return out;
}

struct LocalResult {
  int best = -1;
  std::set<std::vector<Triple>> extremal;
  std::uint64_t nodes = 0;
};

class Search {
 public:
  Search(int n, const SearchOptions& options, std::function<void(std::span<const Triple>)> visitor = {})
      : n_(n), options_(options), visitor_(std::move(visitor)), start_(std::chrono::steady_clock::now()) {}

  void set_incumbent(int value) { incumbent_.store(value); }
  bool stopped() const { return stop_.load(); }

  // Records the node; false when its subtree must not be expanded.
  bool visit(const Node& node, LocalResult& local) {
    const std::uint64_t count = nodes_.fetch_add(1) + 1;
    ++local.nodes;
    if (options_.budget.max_nodes && count > *options_.budget.max_nodes) {
      stop_.store(true);
      return false;
    }
    if (options_.budget.max_seconds && (count & 255) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > *options_.budget.max_seconds) stop_.store(true);
    }
    if (stop_.load(std::memory_order_relaxed)) return false;
    if (visitor_) visitor_(node.edges);

    const int m = static_cast<int>(node.edges.size());
    if (m > local.best) {
      local.best = m;
      local.extremal.clear();
    }
    if (m == local.best) local.extremal.insert(node.edges);
    int seen = incumbent_.load();
    while (m > seen && !incumbent_.compare_exchange_weak(seen, m)) {
    }

    if (!options_.bound_pruning) return true;
    int bound = MaskGraph(n_, node.edges).edge_bound();
    if (options_.unsafe_5n3_prune) bound = std::min(bound, (5 * n_ - 1) / 3);
    return bound > m && bound >= incumbent_.load();
  }

  void explore(const Node& node, LocalResult& local) {
    if (!visit(node, local)) return;
    for (const Node& child : children(n_, node, options_.crown_filter)) {
      explore(child, local);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  // Expands the top of the tree breadth-first until there is enough work to share.
  std::vector<Node> frontier(const Node& root, LocalResult& local, std::size_t want) {
    std::vector<Node> level{root};
    for (int depth = 0; depth < 4 && level.size() < want && !level.empty(); ++depth) {
      std::vector<Node> next;
      for (const Node& node : level) {
        if (!visit(node, local)) continue;
        for (Node& child : children(n_, node, options_.crown_filter)) next.push_back(std::move(child));
      }
      level.swap(next);
    }
    return level;
  }

  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  int n_;
  SearchOptions options_;
  std::function<void(std::span<const Triple>)> visitor_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<int> incumbent_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

}  // namespace

bool adding_creates_crown(int n, std::span<const Triple> edges, const Triple& t) {
  if (n > 31) throw PreconditionError("adding_creates_crown supports n <= 31");
  return MaskGraph(n, edges).creates_crown(normalized(t));
}

ExtremalCertificate exact_ex(int n, const SearchOptions& options) {
  if (n < 3 || n > 31) throw PreconditionError("exact_ex needs 3 <= n <= 31, got " + std::to_string(n));
  ExtremalCertificate cert;
  cert.n = n;
  cert.options = options;
  cert.lower_bound_seed = lower_bound_value(n);

  Search search(n, options);
  if (options.bound_pruning && options.crown_filter) search.set_incumbent(cert.lower_bound_seed);

  const int threads = std::max(1, options.threads);
  LocalResult top;
  const Node root = canonical_node(n, {});
  const std::vector<Node> tasks = search.frontier(root, top, threads > 1 ? 16 * static_cast<std::size_t>(threads) : 1);

  std::vector<LocalResult> locals(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t w) {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      search.explore(tasks[i], locals[w]);
      if (search.stopped()) return;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
    for (std::thread& t : pool) t.join();
  }
  locals.push_back(std::move(top));

  int best = -1;
  for (const LocalResult& l : locals) best = std::max(best, l.best);
  std::set<std::vector<Triple>> extremal;
  for (LocalResult& l : locals) {
    if (l.best == best) extremal.merge(l.extremal);
  }

  cert.exhaustive = !search.stopped();
  cert.nodes_explored = search.nodes();
  cert.value = best;
  if (!cert.exhaustive && best < cert.lower_bound_seed) {
    cert.value = cert.lower_bound_seed;
    extremal.clear();
    extremal.insert(canonize(n, lower_bound_construction(n).edges()).edges);
  }
  cert.extremal_classes = extremal.size();
  for (const auto& edges : extremal) {
    if (cert.witnesses.size() >= options.witness_cap) break;
    cert.witnesses.push_back(LinearThreeGraph::build(n, edges));
  }
  cert.elapsed_seconds = search.elapsed();
  return cert;
}

std::uint64_t enumerate_linear_graphs(int n, bool crown_filter,
                                      const std::function<void(std::span<const Triple>)>& visit) {
  if (n < 1 || n > 31) throw PreconditionError("enumeration needs 1 <= n <= 31");
  SearchOptions options;
  options.crown_filter = crown_filter;
  options.bound_pruning = false;
  Search search(n, options, visit);
  LocalResult local;
  search.explore(canonical_node(n, {}), local);
  return search.nodes();
}

int lower_bound_value(int n) { return n < 3 ? 0 : 6 * ((n - 3) / 4); }

LinearThreeGraph lower_bound_construction(int n) {
  if (n < 3) throw PreconditionError("lower_bound_construction needs n >= 3");
  static constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kFactor{{
      {{{0, 1}, {2, 3}}},
      {{{0, 2}, {1, 3}}},
      {{{0, 3}, {1, 2}}},
  }};
  std::vector<Triple> edges;
  for (int g = 0; g < (n - 3) / 4; ++g) {
    const int base = 3 + 4 * g;
    for (int hub = 0; hub < 3; ++hub) {
      for (const auto& pair : kFactor[static_cast<std::size_t>(hub)]) {
        edges.push_back({hub, base + pair[0], base + pair[1]});
      }
    }
  }
  LinearThreeGraph h = LinearThreeGraph::build(n, std::move(edges));
  if (static_cast<int>(h.num_edges()) != lower_bound_value(n)) {
    throw std::logic_error("hub construction has the wrong edge count");
  }
  // The 4-subset oracle is quartic in the edge count; past a few hundred
  // edges fall back to the link-graph detector.
  const bool has_crown = h.num_edges() <= 120 ? crown_oracle(h).has_value() : find_crown(h).has_value();
  if (has_crown) throw std::logic_error("hub construction contains a crown");
  return h;
}

RandomGraphResult random_linear_graph(int n, int m, std::uint64_t seed, std::uint64_t retry_budget) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (m < 0 || static_cast<std::int64_t>(m) > static_cast<std::int64_t>(n) * (n - 1) / 6) {
    throw PreconditionError("m must be in [0, n(n-1)/6]");
  }
  if (retry_budget == 0) retry_budget = 2000 * (static_cast<std::uint64_t>(m) + 1);
  Rng rng(seed);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<char> used(nn * nn, 0);
  std::vector<Triple> edges;
  std::uint64_t attempts = 0;
  while (static_cast<int>(edges.size()) < m && n >= 3 && attempts < retry_budget) {
    ++attempts;
    const int a = static_cast<int>(rng.below(nn));
    const int b = static_cast<int>(rng.below(nn));
    const int c = static_cast<int>(rng.below(nn));
    if (a == b || a == c || b == c) continue;
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    const auto uc = static_cast<std::size_t>(c);
    if (used[ua * nn + ub] || used[ua * nn + uc] || used[ub * nn + uc]) continue;
    used[ua * nn + ub] = used[ub * nn + ua] = 1;
    used[ua * nn + uc] = used[uc * nn + ua] = 1;
    used[ub * nn + uc] = used[uc * nn + ub] = 1;
    edges.push_back({a, b, c});
  }
  RandomGraphResult out{LinearThreeGraph::build(n, edges), static_cast<int>(edges.size()) < m};
  return out;
}

LinearThreeGraph densify_crown_free(int n, std::uint64_t seed, int iterations) {
  if (n < 3) throw PreconditionError("densify_crown_free needs n >= 3");
  Rng rng(seed);
  std::vector<Triple> current = lower_bound_construction(n).edges();
  std::vector<Triple> best = current;

  auto addable = [&](const LinearThreeGraph& h, const Triple& t) {
    if (!h.can_add(t)) return false;
    const LinearThreeGraph next = h.with_edge(t);
    const EdgeId id = *next.find_edge(t);
    if (find_crown_with_base(next, id)) return false;
    for (int v : t) {
      for (EdgeId f : next.incident(v)) {
        if (f != id && find_crown_with_base(next, f)) return false;
      }
    }
    return true;
  };

  for (int it = 0; it < iterations; ++it) {
    // Saturate with random legal insertions.
    for (;;) {
      const LinearThreeGraph h = LinearThreeGraph::build(n, current);
      std::vector<Triple> options;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (!h.pair_free(a, b)) continue;
          for (int c = b + 1; c < n; ++c) {
            if (addable(h, {a, b, c})) options.push_back({a, b, c});
          }
        }
      }
      if (options.empty()) break;
      current.push_back(options[static_cast<std::size_t>(rng.below(options.size()))]);
    }
    if (current.size() > best.size()) best = current;
    // Kick: drop one or two random edges.
    const int drops = std::min(static_cast<int>(current.size()), rng.between(1, 2));
    for (int d = 0; d < drops; ++d) {
      current.erase(current.begin() + static_cast<std::ptrdiff_t>(rng.below(current.size())));
    }
  }
  return LinearThreeGraph::build(n, best);
}

}  // namespace crownfree
