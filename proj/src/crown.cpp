#include "crownfree/crown.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace crownfree {

namespace {

bool disjoint(const ColoredEdge& x, const ColoredEdge& y) {
  return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
}

int common_vertices(const Triple& s, const Triple& t) {
  int k = 0;
  for (int a : s) {
    for (int b : t) k += (a == b);
  }
  return k;
}

std::optional<int> single_common_vertex(const Triple& s, const Triple& t) {
  std::optional<int> out;
  for (int a : s) {
    for (int b : t) {
      if (a == b) {
        if (out) return std::nullopt;
        out = a;
      }
    }
  }
  return out;
}

auto edge_order(const ColoredEdge& x, const ColoredEdge& y) {
  return std::tie(x.color, x.u, x.v) < std::tie(y.color, y.u, y.v);
}

}  // namespace

char color_name(LinkColor c) { return static_cast<char>('A' + static_cast<int>(c)); }

std::vector<ColoredEdge> ColoredLinkGraph::color_class(LinkColor c) const {
  std::vector<ColoredEdge> out;
  for (const ColoredEdge& e : edges) {
    if (e.color == c) out.push_back(e);
  }
  return out;
}

ColoredLinkGraph make_link_graph(const Triple& base, std::vector<ColoredEdge> edges) {
  ColoredLinkGraph g;
  g.base = normalized(base);
  for (ColoredEdge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), edge_order);
  std::set<int> vs;
  for (const ColoredEdge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  g.vertices.assign(vs.begin(), vs.end());
  g.edges = std::move(edges);
  return g;
}

std::vector<std::string> link_graph_violations(const ColoredLinkGraph& g) {
  std::vector<std::string> out;
  std::set<std::pair<int, int>> pairs;
  std::array<std::set<int>, 3> used;
  for (const ColoredEdge& e : g.edges) {
    const std::string name = "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}/" + color_name(e.color);
    if (e.u == e.v) out.push_back(name + " is a loop");
    for (int b : g.base) {
      if (e.u == b || e.v == b) out.push_back(name + " touches base vertex " + std::to_string(b));
    }
    if (!pairs.insert({e.u, e.v}).second) out.push_back(name + " repeats an underlying pair");
    auto& seen = used[static_cast<std::size_t>(e.color)];
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) {
      out.push_back(name + " breaks the matching property of color " + color_name(e.color));
    }
  }
  return out;
}

std::vector<std::string> witness_violations(const LinearThreeGraph& h, const CrownWitness& w) {
  std::vector<std::string> out;
  const std::size_t m = h.num_edges();
  std::array<EdgeId, 4> all{w.base, w.jewels[0], w.jewels[1], w.jewels[2]};
  for (EdgeId id : all) {
    if (id.index >= m) {
      out.push_back("edge id " + std::to_string(id.index) + " not in graph");
      return out;
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (all[i] == all[j]) out.push_back("edges are not distinct");
    }
  }
  const Triple& base = h.edge(w.base);
  for (std::size_t i = 0; i < 3; ++i) {
    const Triple& jewel = h.edge(w.jewels[i]);
    const auto meet = single_common_vertex(base, jewel);
    if (!meet) {
      out.push_back("jewel " + std::to_string(i) + " does not meet the base in exactly one vertex");
    } else if (*meet != base[i]) {
      out.push_back("jewel " + std::to_string(i) + " meets the base at " + std::to_string(*meet) + ", expected " +
                    std::to_string(base[i]));
    }
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (common_vertices(jewel, h.edge(w.jewels[j])) != 0) {
        out.push_back("jewels " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
  return out;
}

ColoredLinkGraph link_graph(const LinearThreeGraph& h, EdgeId e) {
  const Triple& base = h.edge(e);
  std::vector<ColoredEdge> edges;
  for (std::size_t c = 0; c < 3; ++c) {
    const int x = base[c];
    for (EdgeId f : h.incident(x)) {
      if (f == e) continue;
      const Triple& t = h.edge(f);
      if (common_vertices(base, t) != 1) {
        throw GraphError("edge " + std::to_string(f.index) + " shares two vertices with the base: corrupted graph");
      }
      ColoredEdge ce;
      int k = 0;
      for (int v : t) {
        if (v == x) continue;
        (k++ == 0 ? ce.u : ce.v) = v;
      }
      ce.color = static_cast<LinkColor>(c);
      ce.source = f;
      edges.push_back(ce);
    }
  }
  return make_link_graph(base, std::move(edges));
}

std::optional<std::array<ColoredEdge, 3>> find_rainbow_matching(const ColoredLinkGraph& g) {
  const auto a = g.color_class(LinkColor::kA);
  const auto b = g.color_class(LinkColor::kB);
  const auto c = g.color_class(LinkColor::kC);
  for (const ColoredEdge& x : a) {
    for (const ColoredEdge& y : b) {
      if (!disjoint(x, y)) continue;
      for (const ColoredEdge& z : c) {
        if (disjoint(x, z) && disjoint(y, z)) return std::array<ColoredEdge, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<CrownWitness> find_crown_with_base(const LinearThreeGraph& h, EdgeId e) {
  if (h.num_edges() < 4) {
    h.edge(e);
    return std::nullopt;
  }
  const auto rainbow = find_rainbow_matching(link_graph(h, e));
  if (!rainbow) return std::nullopt;
  return CrownWitness{e, {*(*rainbow)[0].source, *(*rainbow)[1].source, *(*rainbow)[2].source}};
}

std::optional<CrownWitness> find_crown(const LinearThreeGraph& h) {
  if (h.num_edges() < 4) return std::nullopt;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (auto w = find_crown_with_base(h, EdgeId{i})) return w;
  }
  return std::nullopt;
}

CrownWitness greedy_crown_642(const LinearThreeGraph& h, EdgeId e) {
  const DegreeVector d = degree_vector(h, e);
  if (!dominates(d, DegreeVector(6, 4, 2))) {
    throw PreconditionError("degree vector " + to_string(d) + " does not dominate (6,4,2)");
  }
  const Triple& base = h.edge(e);
  std::array<std::size_t, 3> slot{0, 1, 2};  // base positions, by (degree, vertex) ascending
  std::sort(slot.begin(), slot.end(), [&](std::size_t i, std::size_t j) {
    return std::pair(h.degree(base[i]), base[i]) < std::pair(h.degree(base[j]), base[j]);
  });

  CrownWitness w{e, {}};
  std::vector<EdgeId> chosen;
  for (std::size_t s : slot) {
    std::optional<EdgeId> pick;
    for (EdgeId f : h.incident(base[s])) {
      if (f == e) continue;
      const bool clear = std::all_of(chosen.begin(), chosen.end(),
                                     [&](EdgeId g) { return common_vertices(h.edge(f), h.edge(g)) == 0; });
      if (clear) {
        pick = f;
        break;
      }
    }
    if (!pick) throw std::logic_error("greedy crown construction found no free edge; graph is not linear");
    w.jewels[s] = *pick;
    chosen.push_back(*pick);
  }
  return w;
}

std::optional<CrownWitness> crown_oracle(const LinearThreeGraph& h) {
  const std::size_t m = h.num_edges();
  if (m < 4) return std::nullopt;
  // meet[i*m+j]: number of shared vertices (0 or 1 in a linear graph).
  std::vector<unsigned char> meet(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      meet[i * m + j] = static_cast<unsigned char>(common_vertices(h.edges()[i], h.edges()[j]));
    }
  }
  auto crown_with_base = [&](std::size_t b, std::size_t x, std::size_t y, std::size_t z) -> std::optional<CrownWitness> {
    if (meet[b * m + x] != 1 || meet[b * m + y] != 1 || meet[b * m + z] != 1) return std::nullopt;
    if (meet[x * m + y] || meet[x * m + z] || meet[y * m + z]) return std::nullopt;
    // Disjoint jewels each meeting the base once necessarily hit distinct base vertices.
    const Triple& base = h.edges()[b];
    CrownWitness w{EdgeId{b}, {}};
    for (std::size_t j : {x, y, z}) {
      const int v = *single_common_vertex(base, h.edges()[j]);
      const auto pos = static_cast<std::size_t>(std::find(base.begin(), base.end(), v) - base.begin());
      w.jewels[pos] = EdgeId{j};
    }
    return w;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          if (auto w = crown_with_base(i, j, k, l)) return w;
          if (auto w = crown_with_base(j, i, k, l)) return w;
          if (auto w = crown_with_base(k, i, j, l)) return w;
          if (auto w = crown_with_base(l, i, j, k)) return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::string link_graph_dot(const ColoredLinkGraph& g) {
  static constexpr std::array<const char*, 3> kPalette{"red", "blue", "darkgreen"};
  std::ostringstream os;
  os << "graph link {\n";
  os << "  label=\"base {" << g.base[0] << "," << g.base[1] << "," << g.base[2] << "}\";\n";
  for (int v : g.vertices) os << "  " << v << ";\n";
  for (const ColoredEdge& e : g.edges) {
    os << "  " << e.u << " -- " << e.v << " [label=\"" << color_name(e.color) << "\", color="
       << kPalette[static_cast<std::size_t>(e.color)] << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace crownfree
