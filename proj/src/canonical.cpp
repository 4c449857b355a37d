#include "crownfree/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace crownfree {

namespace {

// Union-find over a small index range.
class Orbits {
 public:
  explicit Orbits(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

// Individualization-refinement search over ordered vertex partitions.
//
// A partition is stored as color[v] = start position of v's cell in the
// ordered partition. Refinement splits cells by the multiset of color pairs
// seen through incident edges; every step depends only on colors, so the
// procedure commutes with relabeling. Leaves (discrete partitions) give a
// labeling; the canonical form is the least relabeled edge list over all
// leaves. Automorphisms discovered from equal leaves prune the tree.
class Canonizer {
 public:
  Canonizer(int n, std::span<const Triple> edges) : n_(n), edges_(edges.begin(), edges.end()) {
    incidence_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (int v : edges_[i]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
      offsets_[static_cast<std::size_t>(v) + 1] =
          offsets_[static_cast<std::size_t>(v)] + incidence_[static_cast<std::size_t>(v)].size();
    }
    codes_.resize(offsets_.back());
    order_.resize(static_cast<std::size_t>(n));
  }

  Canonization run() {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    search(color);

    Canonization out;
    out.n = n_;
    out.labeling = best_lab_;
    out.edges.reserve(best_cert_.size());
    const auto nn = static_cast<std::uint64_t>(n_);
    for (std::uint64_t code : best_cert_) {
      out.edges.push_back({static_cast<int>(code / (nn * nn)), static_cast<int>((code / nn) % nn),
                           static_cast<int>(code % nn)});
    }
    out.generators = std::move(generators_);
    return out;
  }

 private:
  void refine(std::vector<int>& color) {
    const auto n = static_cast<std::size_t>(n_);
    const auto nn = static_cast<std::uint32_t>(n_);
    int cells = count_cells(color);
    while (cells < n_) {
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t k = offsets_[v];
        for (int e : incidence_[v]) {
          const Triple& t = edges_[static_cast<std::size_t>(e)];
          int a = -1;
          int b = -1;
          for (int w : t) {
            if (static_cast<std::size_t>(w) == v) continue;
            (a < 0 ? a : b) = color[static_cast<std::size_t>(w)];
          }
          if (a > b) std::swap(a, b);
          codes_[k++] = static_cast<std::uint32_t>(a) * nn + static_cast<std::uint32_t>(b);
        }
        std::sort(codes_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  codes_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
      }
      std::iota(order_.begin(), order_.end(), 0);
      auto less = [&](int u, int v) {
        const auto su = static_cast<std::size_t>(u);
        const auto sv = static_cast<std::size_t>(v);
        if (color[su] != color[sv]) return color[su] < color[sv];
        return std::lexicographical_compare(
            codes_.begin() + static_cast<std::ptrdiff_t>(offsets_[su]),
            codes_.begin() + static_cast<std::ptrdiff_t>(offsets_[su + 1]),
            codes_.begin() + static_cast<std::ptrdiff_t>(offsets_[sv]),
            codes_.begin() + static_cast<std::ptrdiff_t>(offsets_[sv + 1]));
      };
      std::sort(order_.begin(), order_.end(), less);
      std::vector<int> next(n);
      int start = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && less(order_[i - 1], order_[i])) start = static_cast<int>(i);
        next[static_cast<std::size_t>(order_[i])] = start;
      }
      const int next_cells = count_cells(next);
      color.swap(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
  }

  int count_cells(const std::vector<int>& color) {
    seen_.assign(static_cast<std::size_t>(n_), 0);
    int cells = 0;
    for (int c : color) {
      if (!seen_[static_cast<std::size_t>(c)]) {
        seen_[static_cast<std::size_t>(c)] = 1;
        ++cells;
      }
    }
    return cells;
  }

  void search(std::vector<int>& color) {
    refine(color);
    const int depth = static_cast<int>(path_.size());

    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : color) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }

    std::vector<int> cell;
    for (int v = 0; v < n_; ++v) {
      if (color[static_cast<std::size_t>(v)] == target) cell.push_back(v);
    }
    std::vector<int> explored;
    for (int u : cell) {
      if (!explored.empty() && equivalent_to_explored(u, explored)) continue;
      explored.push_back(u);

      std::vector<int> child = color;
      for (int v : cell) {
        if (v != u) child[static_cast<std::size_t>(v)] = target + 1;
      }
      path_.push_back(u);
      search(child);
      path_.pop_back();

      if (backjump_ >= 0) {
        if (backjump_ < depth) return;
        backjump_ = -1;
      }
    }
  }

  // Is u in the orbit of an explored sibling under the known automorphisms
  // that fix the current path pointwise?
  bool equivalent_to_explored(int u, const std::vector<int>& explored) {
    Orbits orbits(n_);
    bool any = false;
    for (const Permutation& g : generators_) {
      bool fixes = true;
      for (int p : path_) {
        if (g[static_cast<std::size_t>(p)] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) orbits.join(v, g[static_cast<std::size_t>(v)]);
    }
    if (!any) return false;
    const int r = orbits.find(u);
    return std::any_of(explored.begin(), explored.end(), [&](int w) { return orbits.find(w) == r; });
  }

  std::vector<std::uint64_t> certificate(const std::vector<int>& lab) const {
    const auto nn = static_cast<std::uint64_t>(n_);
    std::vector<std::uint64_t> cert;
    cert.reserve(edges_.size());
    for (const Triple& t : edges_) {
      std::array<std::uint64_t, 3> r{static_cast<std::uint64_t>(lab[static_cast<std::size_t>(t[0])]),
                                     static_cast<std::uint64_t>(lab[static_cast<std::size_t>(t[1])]),
                                     static_cast<std::uint64_t>(lab[static_cast<std::size_t>(t[2])])};
      std::sort(r.begin(), r.end());
      cert.push_back((r[0] * nn + r[1]) * nn + r[2]);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  // gamma(v) = reference^{-1}(lab(v)): maps the reference leaf onto this one.
  Permutation automorphism(const std::vector<int>& reference, const std::vector<int>& lab) const {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(reference[static_cast<std::size_t>(v)])] = v;
    Permutation g(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) g[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
    return g;
  }

  void leaf(const std::vector<int>& lab) {
    std::vector<std::uint64_t> cert = certificate(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_cert_ = cert;
      first_lab_ = lab;
      first_path_ = path_;
      best_cert_ = std::move(cert);
      best_lab_ = lab;
      return;
    }
    if (cert == first_cert_) {
      generators_.push_back(automorphism(first_lab_, lab));
      std::size_t common = 0;
      while (common < path_.size() && common < first_path_.size() && path_[common] == first_path_[common]) ++common;
      backjump_ = static_cast<int>(common);
      return;
    }
    if (cert == best_cert_) {
      generators_.push_back(automorphism(best_lab_, lab));
      return;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
  }

  int n_;
  std::vector<Triple> edges_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> codes_;
  std::vector<int> order_;
  std::vector<char> seen_;

  std::vector<int> path_;
  bool have_leaf_ = false;
  std::vector<std::uint64_t> first_cert_;
  std::vector<int> first_lab_;
  std::vector<int> first_path_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<int> best_lab_;
  std::vector<Permutation> generators_;
  int backjump_ = -1;
};

}  // namespace

Canonization canonize(int n, std::span<const Triple> edges) {
  if (n <= 0) {
    Canonization out;
    out.n = n < 0 ? 0 : n;
    return out;
  }
  return Canonizer(n, edges).run();
}

Canonization canonical_form(const LinearThreeGraph& h) { return canonize(h.num_vertices(), h.edges()); }

bool isomorphic(const LinearThreeGraph& a, const LinearThreeGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a).same_class(canonical_form(b));
}

std::vector<Triple> permute_edges(std::span<const Triple> edges, const Permutation& perm) {
  std::vector<Triple> out;
  out.reserve(edges.size());
  for (const Triple& t : edges) {
    out.push_back(normalized({perm[static_cast<std::size_t>(t[0])], perm[static_cast<std::size_t>(t[1])],
                              perm[static_cast<std::size_t>(t[2])]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> edge_orbits(std::span<const Triple> edges, std::span<const Permutation> generators) {
  Orbits orbits(static_cast<int>(edges.size()));
  for (const Permutation& g : generators) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Triple& t = edges[i];
      const Triple image = normalized(
          {g[static_cast<std::size_t>(t[0])], g[static_cast<std::size_t>(t[1])], g[static_cast<std::size_t>(t[2])]});
      auto it = std::lower_bound(edges.begin(), edges.end(), image);
      if (it != edges.end() && *it == image) orbits.join(static_cast<int>(i), static_cast<int>(it - edges.begin()));
    }
  }
  std::vector<int> rep(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) rep[i] = orbits.find(static_cast<int>(i));
  return rep;
}

}  // namespace crownfree
