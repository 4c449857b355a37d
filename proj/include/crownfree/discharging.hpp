#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crownfree/crown.hpp"
#include "crownfree/hypergraph.hpp"
#include "crownfree/rational.hpp"

namespace crownfree {

/// Vertex-indexed non-negative integers; usually a degree sequence.
struct DegreeFunction {
  std::vector<int> values;

  int n() const { return static_cast<int>(values.size()); }
  std::int64_t sum() const;
  std::int64_t sum_of_squares() const;
};

DegreeFunction degree_function(const LinearThreeGraph& h);

/// s(e): sum of the degree-vector coordinates.
int s_of(const LinearThreeGraph& h, EdgeId e);
/// s*(e): s(e) capped at 15 when the largest coordinate is at least 9.
int s_star(const LinearThreeGraph& h, EdgeId e);
int s_star(const DegreeVector& d);

/// L(H): vertices of degree >= 9, ascending.
std::vector<int> large_set(const LinearThreeGraph& h);

/// T*(H) = sum of s*(e) over all edges.
std::int64_t t_star(const LinearThreeGraph& h);
/// sum of s(e) over all edges (equals the sum of squared degrees).
std::int64_t t_plain(const LinearThreeGraph& h);

enum class Side : std::uint8_t { kIncrease, kDecrease };

struct TransferStep {
  int gains = 0;  // x_i, in I
  int loses = 0;  // y_i, in D

  friend bool operator==(const TransferStep&, const TransferStep&) = default;
};

/// A unit-transfer sequence f_0, ..., f_k from near-uniform values (5, with one
/// 6 or 7 or two 6s absorbing the residue) to a degree function, plus all the
/// square-sum bookkeeping.
///
/// Steps are numbered from 1 in I_v and in messages; step i lives at index i-1.
struct DischargeTrace {
  std::vector<int> f0;
  std::vector<TransferStep> steps;
  std::vector<Side> partition;
  int residue = 0;
  /// Vertex order v_1..v_n (degree non-decreasing, ties by index).
  std::vector<int> order;

  std::vector<std::int64_t> t;      // T_0..T_k
  std::vector<std::int64_t> delta;  // Delta_i
  std::vector<std::int64_t> gain;   // g(i)
  std::vector<std::int64_t> loss;   // h(i)
  std::vector<std::int64_t> delta_v;
  /// I_v as 1-based step numbers.
  std::vector<std::vector<std::size_t>> steps_at;

  std::size_t k() const { return steps.size(); }
};

/// Builds the transfer sequence. Throws PreconditionError naming the failed
/// clause (min degree >= 2; sum = 5n + l with l in {0,1,2}; residue
/// absorbable), and std::logic_error if a chosen step ever has
/// f(x) < f(y).
DischargeTrace build_discharge_sequence(const DegreeFunction& d);

/// Recomputes (T_i, Delta_i, g, h, I_v, Delta_v) from f0 and the steps.
void fill_derived(DischargeTrace& trace);

struct TraceCheck {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every trace condition against d, independently of how the trace
/// was built: 5 <= f0 <= 7, f_k = d, step legality and partition, D starts at
/// 5, conservation, positivity, Delta_i = g - h, T_k = sum d^2, and that the
/// stored derived values match a fresh recomputation.
TraceCheck verify_discharge_trace(const DischargeTrace& trace, const DegreeFunction& d);

struct DeltaBound {
  std::int64_t delta_v = 0;
  std::int64_t bound = 0;  // m^2 - 9m + 14
  bool holds = false;
  std::int64_t max_loss = 0;  // max h(i) over I_v
  bool loss_within_9 = false;
};

/// Throws PreconditionError when m < 9 or the trace does not end at m for v.
DeltaBound delta_v_bound_check(const DischargeTrace& trace, int v, int m);

struct StarDeficit {
  std::int64_t deficit = 0;  // sum over E_v of s(e) - s*(e)
  std::int64_t bound = 0;    // m^2 - 9m
  bool holds = false;
  /// Failed premises: crown-freeness, minimum degree >= 2, co-edge degrees <= 3.
  std::vector<std::string> premise_failures;
};

/// Throws PreconditionError when d(v) < 9; other premises are reported as data.
StarDeficit star_deficit_check(const LinearThreeGraph& h, int v);

/// (25n + 14L) / ((5n + 2) / 3), exact.
Rational edge_ratio_bound(std::int64_t n, std::int64_t large);

}  // namespace crownfree
