#include "crownfree/discharging.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crownfree {

std::int64_t DegreeFunction::sum() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

std::int64_t DegreeFunction::sum_of_squares() const {
  std::int64_t s = 0;
  for (int v : values) s += static_cast<std::int64_t>(v) * v;
  return s;
}

DegreeFunction degree_function(const LinearThreeGraph& h) {
  DegreeFunction d;
  d.values.resize(static_cast<std::size_t>(h.num_vertices()));
  for (int v = 0; v < h.num_vertices(); ++v) d.values[static_cast<std::size_t>(v)] = h.degree(v);
  return d;
}

int s_of(const LinearThreeGraph& h, EdgeId e) { return degree_vector(h, e).sum(); }

int s_star(const DegreeVector& d) { return d.x() >= 9 ? std::min(d.sum(), 15) : d.sum(); }

int s_star(const LinearThreeGraph& h, EdgeId e) { return s_star(degree_vector(h, e)); }

std::vector<int> large_set(const LinearThreeGraph& h) {
  std::vector<int> out;
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) >= 9) out.push_back(v);
  }
  return out;
}

std::int64_t t_star(const LinearThreeGraph& h) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) total += s_star(h, EdgeId{i});
  return total;
}

std::int64_t t_plain(const LinearThreeGraph& h) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) total += s_of(h, EdgeId{i});
  return total;
}

namespace {

std::int64_t sq(std::int64_t x) { return x * x; }

}  // namespace

DischargeTrace build_discharge_sequence(const DegreeFunction& d) {
  const int n = d.n();
  if (n < 1) throw PreconditionError("empty degree function");
  const auto& deg = d.values;
  if (*std::min_element(deg.begin(), deg.end()) < 2) throw PreconditionError("minimum degree must be at least 2");
  const std::int64_t l = d.sum() - 5 * static_cast<std::int64_t>(n);
  if (l < 0 || l > 2) {
    throw PreconditionError("degree sum " + std::to_string(d.sum()) + " is not 5n + l with l in {0,1,2} (n = " +
                            std::to_string(n) + ")");
  }

  DischargeTrace trace;
  trace.residue = static_cast<int>(l);
  trace.order.resize(static_cast<std::size_t>(n));
  std::iota(trace.order.begin(), trace.order.end(), 0);
  std::stable_sort(trace.order.begin(), trace.order.end(),
                   [&](int a, int b) { return deg[static_cast<std::size_t>(a)] < deg[static_cast<std::size_t>(b)]; });
  const auto at = [&](int pos) { return static_cast<std::size_t>(trace.order[static_cast<std::size_t>(pos)]); };

  trace.f0.assign(static_cast<std::size_t>(n), 5);
  const std::size_t top = at(n - 1);
  if (l == 1) {
    if (deg[top] < 6) throw PreconditionError("l = 1 needs a vertex of degree at least 6");
    trace.f0[top] = 6;
  } else if (l == 2) {
    if (deg[top] >= 7) {
      trace.f0[top] = 7;
    } else if (n >= 2 && deg[at(n - 2)] >= 6) {
      trace.f0[top] = 6;
      trace.f0[at(n - 2)] = 6;
    } else {
      throw PreconditionError("l = 2 needs a vertex of degree at least 7 or two of degree at least 6");
    }
  }

  std::vector<int> f = trace.f0;
  std::vector<char> decreased(static_cast<std::size_t>(n), 0);
  for (;;) {
    int a = -1;
    for (int i = 0; i < n; ++i) {
      if (f[at(i)] > deg[at(i)]) {
        a = i;
        break;
      }
    }
    int b = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (f[at(i)] < deg[at(i)]) {
        b = i;
        break;
      }
    }
    if (a < 0 && b < 0) break;
    if (a < 0 || b < 0) throw std::logic_error("transfer sequence lost conservation");
    const std::size_t x = at(b);
    const std::size_t y = at(a);
    if (f[x] < f[y]) {
      std::ostringstream os;
      os << "transfer step " << trace.steps.size() + 1 << " has f(x) = " << f[x] << " < f(y) = " << f[y]
         << " for degree function [";
      for (int i = 0; i < n; ++i) os << (i ? "," : "") << deg[static_cast<std::size_t>(i)];
      os << "]";
      throw std::logic_error(os.str());
    }
    ++f[x];
    --f[y];
    decreased[y] = 1;
    trace.steps.push_back({static_cast<int>(x), static_cast<int>(y)});
  }

  trace.partition.resize(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
    trace.partition[v] = decreased[v] ? Side::kDecrease : Side::kIncrease;
  }
  fill_derived(trace);
  return trace;
}

void fill_derived(DischargeTrace& trace) {
  const std::size_t n = trace.f0.size();
  std::vector<std::int64_t> f(trace.f0.begin(), trace.f0.end());
  std::int64_t total = 0;
  for (std::int64_t x : f) total += sq(x);

  trace.t.assign(1, total);
  trace.delta.clear();
  trace.gain.clear();
  trace.loss.clear();
  trace.steps_at.assign(n, {});
  trace.delta_v.assign(n, 0);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto x = static_cast<std::size_t>(trace.steps[i].gains);
    const auto y = static_cast<std::size_t>(trace.steps[i].loses);
    const std::int64_t g = sq(f[x] + 1) - sq(f[x]);
    const std::int64_t h = sq(f[y]) - sq(f[y] - 1);
    ++f[x];
    --f[y];
    total += g - h;
    trace.t.push_back(total);
    trace.gain.push_back(g);
    trace.loss.push_back(h);
    trace.delta.push_back(g - h);
    trace.steps_at[x].push_back(i + 1);
    trace.steps_at[y].push_back(i + 1);
    trace.delta_v[x] += g - h;
    trace.delta_v[y] += g - h;
  }
}

TraceCheck verify_discharge_trace(const DischargeTrace& trace, const DegreeFunction& d) {
  TraceCheck check;
  auto fail = [&](const std::string& s) { check.violations.push_back(s); };
  const std::size_t n = d.values.size();
  if (trace.f0.size() != n || trace.partition.size() != n) {
    fail("trace size does not match the degree function");
    return check;
  }
  if (trace.residue < 0 || trace.residue > 2) fail("residue l outside {0,1,2}");

  for (std::size_t v = 0; v < n; ++v) {
    if (trace.f0[v] < 5 || trace.f0[v] > 7) {
      fail("(1) f0(" + std::to_string(v) + ") = " + std::to_string(trace.f0[v]) + " not in [5,7]");
    }
    if (trace.partition[v] == Side::kDecrease && trace.f0[v] != 5) {
      fail("(4) vertex " + std::to_string(v) + " in D has f0 = " + std::to_string(trace.f0[v]));
    }
  }

  const std::int64_t target = 5 * static_cast<std::int64_t>(n) + trace.residue;
  std::vector<std::int64_t> f(trace.f0.begin(), trace.f0.end());
  auto total_of = [&] { return std::accumulate(f.begin(), f.end(), std::int64_t{0}); };
  auto squares_of = [&] {
    std::int64_t s = 0;
    for (std::int64_t x : f) s += sq(x);
    return s;
  };
  if (total_of() != target) fail("sum of f_0 is not 5n + l");

  std::vector<std::int64_t> t{squares_of()};
  std::vector<std::int64_t> delta;
  std::vector<std::int64_t> gain;
  std::vector<std::int64_t> loss;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const std::string tag = "step " + std::to_string(i + 1) + ": ";
    const int xs = trace.steps[i].gains;
    const int ys = trace.steps[i].loses;
    if (xs < 0 || ys < 0 || static_cast<std::size_t>(xs) >= n || static_cast<std::size_t>(ys) >= n || xs == ys) {
      fail(tag + "invalid vertices");
      return check;
    }
    const auto x = static_cast<std::size_t>(xs);
    const auto y = static_cast<std::size_t>(ys);
    if (trace.partition[x] != Side::kIncrease) fail("(3) " + tag + "x = " + std::to_string(x) + " is not in I");
    if (trace.partition[y] != Side::kDecrease) fail("(3) " + tag + "y = " + std::to_string(y) + " is not in D");
    if (f[x] < f[y]) fail("(3) " + tag + "f(x) < f(y)");
    gain.push_back(sq(f[x] + 1) - sq(f[x]));
    loss.push_back(sq(f[y]) - sq(f[y] - 1));
    ++f[x];
    --f[y];
    if (total_of() != target) fail(tag + "sum of f_i is not 5n + l");
    t.push_back(squares_of());
    delta.push_back(t.back() - t[t.size() - 2]);
    if (delta.back() <= 0) fail(tag + "Delta_i <= 0");
    if (delta.back() != gain.back() - loss.back()) fail(tag + "Delta_i != g(i) - h(i)");
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (f[v] != d.values[v]) {
      fail("(2) f_k(" + std::to_string(v) + ") = " + std::to_string(f[v]) + " but d = " + std::to_string(d.values[v]));
    }
  }
  if (t.back() != d.sum_of_squares()) fail("T_k differs from the sum of squared degrees");

  if (!trace.t.empty() && (trace.t != t || trace.delta != delta || trace.gain != gain || trace.loss != loss)) {
    fail("stored T_i / Delta_i / g / h differ from recomputation");
  }
  return check;
}

DeltaBound delta_v_bound_check(const DischargeTrace& trace, int v, int m) {
  if (m < 9) throw PreconditionError("delta_v bound needs m >= 9, got m = " + std::to_string(m));
  if (v < 0 || static_cast<std::size_t>(v) >= trace.f0.size()) throw std::out_of_range("vertex out of range");
  DischargeTrace fresh = trace;
  fill_derived(fresh);
  const auto sv = static_cast<std::size_t>(v);
  std::int64_t final_value = fresh.f0[sv];
  for (const TransferStep& s : fresh.steps) {
    final_value += (s.gains == v) - (s.loses == v);
  }
  if (final_value != m) {
    throw PreconditionError("vertex " + std::to_string(v) + " ends at " + std::to_string(final_value) + ", not m = " +
                            std::to_string(m));
  }
  DeltaBound out;
  out.delta_v = fresh.delta_v[sv];
  out.bound = static_cast<std::int64_t>(m) * m - 9 * static_cast<std::int64_t>(m) + 14;
  out.holds = out.delta_v >= out.bound;
  for (std::size_t i : fresh.steps_at[sv]) out.max_loss = std::max(out.max_loss, fresh.loss[i - 1]);
  out.loss_within_9 = out.max_loss <= 9;
  return out;
}

StarDeficit star_deficit_check(const LinearThreeGraph& h, int v) {
  const int m = h.degree(v);
  if (m < 9) throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(m) + " < 9");
  StarDeficit out;
  out.bound = static_cast<std::int64_t>(m) * m - 9 * static_cast<std::int64_t>(m);
  bool coedge_ok = true;
  for (EdgeId e : h.incident(v)) {
    out.deficit += s_of(h, e) - s_star(h, e);
    for (int u : h.edge(e)) {
      if (u != v && h.degree(u) > 3) coedge_ok = false;
    }
  }
  out.holds = out.deficit <= out.bound;

  if (find_crown(h)) out.premise_failures.push_back("graph is not crown-free");
  for (int u = 0; u < h.num_vertices(); ++u) {
    if (h.degree(u) < 2) {
      out.premise_failures.push_back("minimum degree below 2 (vertex " + std::to_string(u) + ")");
      break;
    }
  }
  if (!coedge_ok) out.premise_failures.push_back("a vertex sharing an edge with v has degree above 3");
  return out;
}

Rational edge_ratio_bound(std::int64_t n, std::int64_t large) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (large < 0) throw PreconditionError("|L| must be non-negative");
  return Rational(3 * (25 * n + 14 * large), 5 * n + 2);
}

}  // namespace crownfree
