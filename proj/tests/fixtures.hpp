#pragma once

#include <vector>

#include "crownfree/hypergraph.hpp"

namespace fixtures {

using crownfree::LinearThreeGraph;
using crownfree::Triple;

inline LinearThreeGraph crown() { return LinearThreeGraph::build(9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}}); }

inline std::vector<Triple> fano_edges() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}
inline LinearThreeGraph fano() { return LinearThreeGraph::build(7, fano_edges()); }

inline LinearThreeGraph matching4() {
  return LinearThreeGraph::build(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
}

// Affine plane of order 3: point (i, j) is 3i + j.
inline LinearThreeGraph ag23() {
  std::vector<Triple> lines;
  for (int i = 0; i < 3; ++i) {
    lines.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    lines.push_back({i, 3 + i, 6 + i});
  }
  for (int a = 1; a <= 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      Triple t{};
      for (int i = 0; i < 3; ++i) t[static_cast<std::size_t>(i)] = 3 * i + (a * i + b) % 3;
      lines.push_back(crownfree::normalized(t));
    }
  }
  return LinearThreeGraph::build(9, lines);
}

// Base {0,1,2} plus `a`, `b`, `c` fresh-vertex petals at 0, 1, 2.
inline LinearThreeGraph sunflower(int a, int b, int c) {
  std::vector<Triple> edges{{0, 1, 2}};
  int next = 3;
  for (int x = 0; x < 3; ++x) {
    const int petals = x == 0 ? a : x == 1 ? b : c;
    for (int p = 0; p < petals; ++p, next += 2) edges.push_back({x, next, next + 1});
  }
  return LinearThreeGraph::build(next, edges);
}

// m edges {0, u_i, w_i} with fresh endpoints.
inline LinearThreeGraph star(int m) {
  std::vector<Triple> edges;
  for (int i = 0; i < m; ++i) edges.push_back({0, 1 + 2 * i, 2 + 2 * i});
  return LinearThreeGraph::build(1 + 2 * m, edges);
}

// Star of m edges {0, u, w}; each leaf pair gets a 2x2 grid f = {u,x,y},
// f' = {u,z,t}, g = {w,x,z}, g' = {w,y,t}. Leaves end at degree 3, grid
// vertices at degree 2, so every edge has s <= m + 6 and the graph is
// crown-free.
inline LinearThreeGraph star_with_grids(int m) {
  std::vector<Triple> edges;
  int next = 1;
  for (int i = 0; i < m; ++i) {
    const int u = next, w = next + 1, x = next + 2, y = next + 3, z = next + 4, t = next + 5;
    next += 6;
    edges.push_back({0, u, w});
    edges.push_back(crownfree::normalized({u, x, y}));
    edges.push_back(crownfree::normalized({u, z, t}));
    edges.push_back(crownfree::normalized({w, x, z}));
    edges.push_back(crownfree::normalized({w, y, t}));
  }
  return LinearThreeGraph::build(next, edges);
}

}  // namespace fixtures
