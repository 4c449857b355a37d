#include "crownfree/lemma_lab.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crownfree/canonical.hpp"
#include "crownfree/extremal.hpp"

namespace crownfree {

namespace {

using Pair = std::array<int, 2>;
using replay_labels::v;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool pairs_disjoint(const Pair& p, const Pair& q) {
  return p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1];
}

bool touches(const Pair& p, int x) { return p[0] == x || p[1] == x; }

// All ways to pick `k` pairwise disjoint pairs from `pool` (indices increasing).
template <typename Visit>
void matchings(const std::vector<Pair>& pool, int k, Visit&& visit) {
  std::vector<Pair> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const Pair& c) { return pairs_disjoint(c, pool[i]); });
      if (!ok) continue;
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

// New vertices are interchangeable, so only matchings that use a prefix
// first, first+1, ... of them are kept.
bool uses_prefix(const std::vector<Pair>& chosen, int first, int last) {
  std::vector<char> used(static_cast<std::size_t>(last - first + 1), 0);
  for (const Pair& p : chosen) {
    for (int x : p) {
      if (x >= first && x <= last) used[static_cast<std::size_t>(x - first)] = 1;
    }
  }
  const auto end = std::find(used.begin(), used.end(), 0);
  return std::find(end, used.end(), 1) == used.end();
}

ColoredLinkGraph colored(const std::vector<Pair>& a, const std::vector<Pair>& b, const std::vector<Pair>& c) {
  std::vector<ColoredEdge> edges;
  for (const Pair& p : a) edges.push_back({p[0], p[1], LinkColor::kA, std::nullopt});
  for (const Pair& p : b) edges.push_back({p[0], p[1], LinkColor::kB, std::nullopt});
  for (const Pair& p : c) edges.push_back({p[0], p[1], LinkColor::kC, std::nullopt});
  return make_link_graph({replay_labels::kA, replay_labels::kB, replay_labels::kC}, std::move(edges));
}

std::string triple_text(const Triple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

}  // namespace

ColoredLinkGraph canonical_link_graph_G() {
  const std::vector<Pair> a{{v(1), v(4)}, {v(2), v(3)}, {v(6), v(7)}, {v(5), v(8)}};
  const std::vector<Pair> b{{v(1), v(2)}, {v(3), v(4)}, {v(5), v(6)}, {v(7), v(8)}};
  const std::vector<Pair> c{{v(1), v(3)}, {v(2), v(4)}, {v(5), v(7)}, {v(6), v(8)}};
  return colored(a, b, c);
}

LinearThreeGraph realize_link_graph(const ColoredLinkGraph& g) {
  std::map<int, int> label;
  for (int i = 0; i < 3; ++i) label[g.base[static_cast<std::size_t>(i)]] = i;
  int next = 3;
  for (int x : g.vertices) {
    if (!label.count(x)) label[x] = next++;
  }
  std::vector<Triple> edges{{0, 1, 2}};
  for (const ColoredEdge& e : g.edges) {
    edges.push_back({static_cast<int>(e.color), label.at(e.u), label.at(e.v)});
  }
  return LinearThreeGraph::build(next, std::move(edges));
}

LinkGraphEnumeration enumerate_555_link_graphs() {
  // Link vertices: 3..10 carry the fixed A-matching, 11..18 may be new
  // vertices of B, 19..26 new vertices of C.
  constexpr int kOldFirst = 3;
  constexpr int kOldLast = 10;
  constexpr int kFreshB = 11;
  constexpr int kFreshBLast = 18;
  constexpr int kFreshC = 19;
  constexpr int kFreshCLast = 26;

  const std::vector<Pair> a{{3, 4}, {5, 6}, {7, 8}, {9, 10}};
  const auto in_a = [&](const Pair& p) { return std::find(a.begin(), a.end(), p) != a.end(); };

  LinkGraphEnumeration out;

  std::vector<Pair> b_pool;
  for (int x = kOldFirst; x <= kFreshBLast; ++x) {
    for (int y = x + 1; y <= kFreshBLast; ++y) {
      if (!in_a({x, y})) b_pool.push_back({x, y});
    }
  }
  std::set<std::vector<Triple>> ab_seen;
  std::vector<std::vector<Pair>> ab_reps;
  matchings(b_pool, 4, [&](const std::vector<Pair>& b) {
    if (!uses_prefix(b, kFreshB, kFreshBLast)) return;
    ++out.ab_configurations;
    const LinearThreeGraph h = realize_link_graph(colored(a, b, {}));
    if (ab_seen.insert(canonical_form(h).edges).second) ab_reps.push_back(b);
  });
  out.ab_classes = ab_reps.size();

  std::set<std::vector<Triple>> seen;
  for (const std::vector<Pair>& b : ab_reps) {
    const bool old_only = std::all_of(b.begin(), b.end(), [](const Pair& p) { return p[1] <= kOldLast; });
    bool eight_cycle = false;
    if (old_only) {
      std::vector<int> comp(kOldLast + 1);
      std::iota(comp.begin(), comp.end(), 0);
      auto find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
        return x;
      };
      for (const auto* set : {&a, &b}) {
        for (const Pair& p : *set) comp[static_cast<std::size_t>(find(p[0]))] = find(p[1]);
      }
      std::set<int> roots;
      for (int x = kOldFirst; x <= kOldLast; ++x) roots.insert(find(x));
      eight_cycle = roots.size() == 1;
      (eight_cycle ? out.ab_eight_cycles : out.ab_two_four_cycles) += 1;
    } else {
      ++out.ab_with_new_vertices;
    }

    std::vector<int> pool;
    for (int x = kOldFirst; x <= kOldLast; ++x) pool.push_back(x);
    for (int x = kFreshB; x <= kFreshBLast; ++x) {
      if (std::any_of(b.begin(), b.end(), [&](const Pair& p) { return touches(p, x); })) pool.push_back(x);
    }
    for (int x = kFreshC; x <= kFreshCLast; ++x) pool.push_back(x);

    std::vector<std::pair<Pair, Pair>> disjoint_ab;
    for (const Pair& p : a) {
      for (const Pair& q : b) {
        if (pairs_disjoint(p, q)) disjoint_ab.push_back({p, q});
      }
    }
    std::vector<Pair> c_pool;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const Pair p{pool[i], pool[j]};
        if (in_a(p) || std::find(b.begin(), b.end(), p) != b.end()) continue;
        // A C-pair missing some disjoint A/B pair completes a rainbow matching.
        const bool safe = std::all_of(disjoint_ab.begin(), disjoint_ab.end(), [&](const auto& ab) {
          return !pairs_disjoint(p, ab.first) || !pairs_disjoint(p, ab.second);
        });
        if (safe) c_pool.push_back(p);
      }
    }
    matchings(c_pool, 4, [&](const std::vector<Pair>& c) {
      if (!uses_prefix(c, kFreshC, kFreshCLast)) return;
      ++out.completions;
      if (eight_cycle) ++out.eight_cycle_completions;
      ColoredLinkGraph g = colored(a, b, c);
      if (find_rainbow_matching(g)) throw std::logic_error("C-pair filter admitted a rainbow matching");
      if (!link_graph_violations(g).empty()) throw std::logic_error("enumerated an invalid link graph");
      if (seen.insert(canonical_form(realize_link_graph(g)).edges).second) out.classes.push_back(std::move(g));
    });
  }
  return out;
}

int min_counterexample_order() {
  // n(n-1)/6 >= 5n/3  <=>  3 n (n-1) >= 30 n.
  for (std::int64_t n = 1;; ++n) {
    if (3 * n * (n - 1) >= 30 * n) return static_cast<int>(n);
  }
}

std::pair<LinearThreeGraph, EdgeId> planted_642_instance(Rng& rng, int n) {
  if (n < 13) throw PreconditionError("planted (6,4,2) instances need n >= 13");
  for (;;) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    rng.shuffle(verts);
    const Triple base = normalized({verts[0], verts[1], verts[2]});

    const int dx = rng.between(6, 8);
    const int dy = rng.between(4, dx);
    const int dz = rng.between(2, dy);
    std::array<int, 3> target{dx, dy, dz};
    std::vector<int> slots{0, 1, 2};
    rng.shuffle(slots);

    LinearThreeGraph h = LinearThreeGraph::build(n, {base});
    bool ok = true;
    for (std::size_t s = 0; s < 3 && ok; ++s) {
      const int w = base[static_cast<std::size_t>(slots[s])];
      for (int petal = 1; petal < target[s] && ok; ++petal) {
        ok = false;
        for (int attempt = 0; attempt < 400; ++attempt) {
          const int p = verts[static_cast<std::size_t>(rng.between(3, n - 1))];
          const int q = verts[static_cast<std::size_t>(rng.between(3, n - 1))];
          if (p == q) continue;
          const Triple t = normalized({w, p, q});
          if (h.can_add(t)) {
            h = h.with_edge(t);
            ok = true;
            break;
          }
        }
      }
    }
    if (!ok) continue;

    const int noise = rng.between(0, n);
    for (int k = 0, attempts = 0; k < noise && attempts < 50 * n; ++attempts) {
      const Triple t{static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                     static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                     static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))};
      if (h.can_add(t)) {
        h = h.with_edge(normalized(t));
        ++k;
      }
    }
    const EdgeId e = *h.find_edge(base);
    return {std::move(h), e};
  }
}

DegreeFunction random_degree_function(Rng& rng, int max_n) {
  if (max_n < 3) throw PreconditionError("max_n must be at least 3");
  for (;;) {
    const int n = rng.between(3, max_n);
    const int l = rng.between(0, 2);
    std::vector<int> d(static_cast<std::size_t>(n), 5);
    std::vector<char> planted(static_cast<std::size_t>(n), 0);
    const int plants = rng.between(0, std::min(3, n / 6));
    bool ok = true;
    for (int p = 0; p < plants && ok; ++p) {
      const auto v = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
      planted[v] = 1;
      const int target = rng.between(9, 15);
      while (d[v] < target && ok) {
        std::vector<std::size_t> donors;
        for (std::size_t u = 0; u < d.size(); ++u) {
          if (!planted[u] && d[u] > 2) donors.push_back(u);
        }
        if (donors.empty()) {
          ok = false;
          break;
        }
        --d[donors[static_cast<std::size_t>(rng.below(donors.size()))]];
        ++d[v];
      }
    }
    if (!ok) continue;
    for (int k = 0; k < l; ++k) ++d[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))];
    const int moves = rng.between(0, 2 * n);
    for (int k = 0; k < moves; ++k) {
      const auto u = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
      const auto w = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == w || planted[u] || d[u] <= 2) continue;
      --d[u];
      ++d[w];
    }
    std::vector<int> sorted = d;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (l == 1 && sorted[0] < 6) continue;
    if (l == 2 && sorted[0] < 7 && sorted[1] < 6) continue;
    return DegreeFunction{std::move(d)};
  }
}

ReplayReport replay_555_extensions() {
  Stopwatch clock;
  ReplayReport r;
  r.suite = "replay3";
  const ColoredLinkGraph g = canonical_link_graph_G();
  const LinearThreeGraph h0 = realize_link_graph(g);
  const EdgeId e = *h0.find_edge({replay_labels::kA, replay_labels::kB, replay_labels::kC});
  ++r.instances;

  r.check(degree_vector(h0, e) == DegreeVector(5, 5, 5), "H0", "D(e) = (5,5,5)");
  for (int x = 0; x < h0.num_vertices(); ++x) {
    r.check(h0.degree(x) == (x < 3 ? 5 : 3), "H0", "vertex " + std::to_string(x) + " has degree " + (x < 3 ? "5" : "3"));
  }
  r.check(!crown_oracle(h0).has_value(), "H0", "crown-free by the 4-subset oracle");
  r.check(!find_crown(h0).has_value(), "H0", "crown-free by the link-graph detector");
  r.check(canonical_form(realize_link_graph(link_graph(h0, e))).same_class(canonical_form(h0)), "H0",
          "G(e) is the canonical link graph");

  std::vector<int> x(static_cast<std::size_t>(h0.num_vertices()));
  std::iota(x.begin(), x.end(), 0);
  const std::size_t ex = edges_covering(h0, x).size();
  const std::array<int, 3> base_vertices{replay_labels::kA, replay_labels::kB, replay_labels::kC};
  const std::size_t ee = edges_covering(h0, base_vertices).size();
  r.fact("|X|", std::to_string(x.size()));
  r.fact("|E_X|", std::to_string(ex));
  r.check(ex == 13, "H0", "|E_X| = 13");
  r.check(ee == ex, "H0", "E_X = E_e");
  r.check(3 * ex < 5 * x.size(), "H0", "|E_X| < 5|X|/3");

  const struct {
    const char* name;
    int w1;
  } cases[] = {{"w1=v5", v(5)}, {"w1=fresh", -1}};
  for (const auto& c : cases) {
    ++r.instances;
    const int w2 = h0.num_vertices();
    const int w1 = c.w1 >= 0 ? c.w1 : w2 + 1;
    const int n = c.w1 >= 0 ? w2 + 1 : w2 + 2;
    const Triple f = normalized({v(1), w1, w2});
    std::vector<Triple> edges = h0.edges();
    edges.push_back(f);
    auto built = validate_linear(edges, n);
    r.check(std::holds_alternative<LinearThreeGraph>(built), c.name, "adding f keeps the graph linear");
    if (!std::holds_alternative<LinearThreeGraph>(built)) continue;
    const LinearThreeGraph h = std::get<LinearThreeGraph>(std::move(built));

    const auto found = find_crown(h);
    r.check(found.has_value() && is_valid_witness(h, *found), c.name, "the detector finds a valid crown");
    r.check(crown_oracle(h).has_value(), c.name, "the 4-subset oracle finds a crown");

    // Base {v1, v4, a}; jewels {v6, v7, a}, f, {v2, v4, c} in base-vertex order (a < v1 < v4).
    const auto base = h.find_edge({v(1), v(4), replay_labels::kA});
    const auto j_a = h.find_edge({v(6), v(7), replay_labels::kA});
    const auto j_v1 = h.find_edge(f);
    const auto j_v4 = h.find_edge({v(2), v(4), replay_labels::kC});
    const bool present = base && j_a && j_v1 && j_v4;
    r.check(present, c.name, "the stated crown edges exist");
    if (present) {
      const CrownWitness stated{*base, {*j_a, *j_v1, *j_v4}};
      r.check(is_valid_witness(h, stated), c.name, "base {v1,v4,a} with jewels f, {v2,v4,c}, {v6,v7,a} is a crown");
      r.fact(std::string(c.name) + " f", triple_text(f));
    }
  }
  r.elapsed_ms = clock.ms();
  return r;
}

ReplayReport verify_642_on_corpus(std::uint64_t seed, std::size_t count, int min_n, int max_n) {
  Stopwatch clock;
  ReplayReport r;
  r.suite = "lemma1";
  r.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = rng.between(min_n, max_n);
    auto [h, e] = planted_642_instance(rng, n);
    ++r.instances;
    const std::string id = "#" + std::to_string(i) + " n=" + std::to_string(n) + " m=" + std::to_string(h.num_edges());
    if (!dominates(degree_vector(h, e), DegreeVector(6, 4, 2))) {
      r.check(false, id, "planted edge dominates (6,4,2)");
      continue;
    }
    const auto with_base = find_crown_with_base(h, e);
    r.check(with_base.has_value() && is_valid_witness(h, *with_base), id, "a crown with the planted base exists");
    try {
      const CrownWitness w = greedy_crown_642(h, e);
      r.check(w.base == e && is_valid_witness(h, w), id, "the greedy witness is a crown on the planted base");
    } catch (const std::exception& ex) {
      r.check(false, id, std::string("greedy construction threw: ") + ex.what());
    }
    r.check(crown_oracle(h).has_value(), id, "the 4-subset oracle finds a crown");
  }
  r.fact("instances", std::to_string(r.instances));
  r.elapsed_ms = clock.ms();
  return r;
}

ReplayReport links555_suite() {
  Stopwatch clock;
  ReplayReport r;
  r.suite = "links555";
  const ColoredLinkGraph g = canonical_link_graph_G();
  ++r.instances;

  r.check(link_graph_violations(g).empty(), "G", "valid link graph");
  for (LinkColor c : {LinkColor::kA, LinkColor::kB, LinkColor::kC}) {
    const auto cls = g.color_class(c);
    std::set<int> covered;
    for (const ColoredEdge& e : cls) {
      covered.insert(e.u);
      covered.insert(e.v);
    }
    r.check(cls.size() == 4 && covered.size() == 8, "G",
            std::string("color ") + color_name(c) + " is a perfect matching of size 4");
  }
  r.check(!find_rainbow_matching(g).has_value(), "G", "no rainbow matching");
  for (LinkColor i : {LinkColor::kA, LinkColor::kB, LinkColor::kC}) {
    for (LinkColor j : {LinkColor::kA, LinkColor::kB, LinkColor::kC}) {
      if (i == j) continue;
      for (const ColoredEdge& e : g.color_class(i)) {
        int hits = 0;
        for (const ColoredEdge& f : g.color_class(j)) {
          hits += !(e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v);
        }
        r.check(hits == 2, "G",
                std::string("every ") + color_name(i) + "-edge meets exactly two " + color_name(j) + "-edges");
      }
    }
  }

  const LinkGraphEnumeration en = enumerate_555_link_graphs();
  r.instances += en.completions;
  r.fact("ab_configurations", std::to_string(en.ab_configurations));
  r.fact("ab_classes", std::to_string(en.ab_classes));
  r.fact("ab_eight_cycles", std::to_string(en.ab_eight_cycles));
  r.fact("ab_two_four_cycles", std::to_string(en.ab_two_four_cycles));
  r.fact("ab_with_new_vertices", std::to_string(en.ab_with_new_vertices));
  r.fact("eight_cycle_completions", std::to_string(en.eight_cycle_completions));
  r.fact("completions", std::to_string(en.completions));
  r.fact("classes", std::to_string(en.classes.size()));
  r.check(en.eight_cycle_completions == 0, "enumeration", "alternating 8-cycles admit no C-matching");
  r.check(en.classes.size() == 1, "enumeration", "exactly one isomorphism class");
  if (!en.classes.empty()) {
    r.check(canonical_form(realize_link_graph(en.classes.front())).same_class(canonical_form(realize_link_graph(g))),
            "enumeration", "the class is the canonical link graph G");
  }
  r.elapsed_ms = clock.ms();
  return r;
}

ReplayReport order11_suite() {
  Stopwatch clock;
  ReplayReport r;
  r.suite = "order11";
  const int order = min_counterexample_order();
  r.fact("order", std::to_string(order));
  r.check(order == 11, "order", "least order of a counter-example is 11");
  for (std::int64_t n = 1; n <= 40; ++n) {
    ++r.instances;
    const bool feasible = 3 * n * (n - 1) >= 30 * n;
    r.check(feasible == (n >= 11), "n=" + std::to_string(n), "n(n-1)/6 >= 5n/3 exactly when n >= 11");
  }
  // Every pair lies in at most one edge and each edge covers three pairs.
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    ++r.instances;
    const int n = rng.between(3, 25);
    const int m = n * (n - 1) / 6;
    const RandomGraphResult g = random_linear_graph(n, m, rng.next(), 200);
    r.check(g.graph.num_edges() <= static_cast<std::size_t>(m), "random n=" + std::to_string(n),
            "|E| <= n(n-1)/6");
  }
  r.elapsed_ms = clock.ms();
  return r;
}

ReplayReport discharge_suite(std::uint64_t seed, std::size_t count, int max_n) {
  Stopwatch clock;
  ReplayReport r;
  r.suite = "discharge";
  r.seed = seed;
  Rng rng(seed);
  std::uint64_t large_checked = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const DegreeFunction d = random_degree_function(rng, max_n);
    ++r.instances;
    const std::string id = "#" + std::to_string(i) + " n=" + std::to_string(d.n());
    try {
      const DischargeTrace trace = build_discharge_sequence(d);
      for (const std::string& v : verify_discharge_trace(trace, d).violations) r.check(false, id, v);
      r.check(trace.t.back() == d.sum_of_squares(), id, "T_k = sum of d(v)^2");
      for (int x = 0; x < d.n(); ++x) {
        const int m = d.values[static_cast<std::size_t>(x)];
        if (m < 9) continue;
        ++large_checked;
        const DeltaBound b = delta_v_bound_check(trace, x, m);
        r.check(b.holds, id, "Delta_v >= m^2 - 9m + 14 at vertex " + std::to_string(x));
        r.check(b.loss_within_9, id, "h(i) <= 9 on I_v at vertex " + std::to_string(x));
      }
    } catch (const std::exception& ex) {
      r.check(false, id, std::string("trace construction threw: ") + ex.what());
    }
  }
  r.fact("large_vertices_checked", std::to_string(large_checked));
  r.elapsed_ms = clock.ms();
  return r;
}

std::vector<ReplayReport> run_suites(const std::string& name, std::uint64_t seed, std::size_t count) {
  static const std::vector<std::string> kNames{"lemma1", "links555", "replay3", "discharge", "order11"};
  if (name != "all" && std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  std::vector<ReplayReport> out;
  for (const std::string& s : kNames) {
    if (name != "all" && name != s) continue;
    if (s == "lemma1") out.push_back(verify_642_on_corpus(seed, count, 13, 30));
    if (s == "links555") out.push_back(links555_suite());
    if (s == "replay3") out.push_back(replay_555_extensions());
    if (s == "discharge") out.push_back(discharge_suite(seed, count));
    if (s == "order11") out.push_back(order11_suite());
  }
  return out;
}

}  // namespace crownfree
