// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "crownfree/canonical.hpp"
#include "crownfree/cli.hpp"
#include "crownfree/crown.hpp"
#include "crownfree/discharging.hpp"
#include "crownfree/extremal.hpp"
#include "crownfree/graph_io.hpp"
#include "crownfree/lemma_lab.hpp"
#include "crownfree/random.hpp"

using namespace crownfree;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

std::string first_failure(const ReplayReport& r) {
  return r.failures.empty() ? "" : "; first failure: " + r.failures[0].instance + ": " + r.failures[0].claim;
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t classes = 0;
  std::uint64_t disagreements = 0;
  for (int n = 1; n <= 8; ++n) {
    enumerate_linear_graphs(n, false, [&](std::span<const Triple> e) {
      const auto g = LinearThreeGraph::build(n, std::vector<Triple>(e.begin(), e.end()));
      ++classes;
      disagreements += find_crown(g).has_value() != crown_oracle(g).has_value();
    });
  }
  Rng rng(20240601);
  std::uint64_t crowns = 0;
  constexpr int kRandom = 10000;
  for (int i = 0; i < kRandom; ++i) {
    const int n = rng.between(9, 15);
    const auto g = random_linear_graph(n, rng.between(0, n * (n - 1) / 6), rng.next(), 200).graph;
    const auto fast = find_crown(g);
    const bool slow = crown_oracle(g).has_value();
    if (fast.has_value() != slow || (fast && !is_valid_witness(g, *fast))) ++disagreements;
    crowns += slow;
  }
  const double s = seconds_since(t0);
  return {disagreements == 0 && s < 600,
          std::to_string(classes) + " classes (n<=8) + " + std::to_string(kRandom) + " random graphs (" +
              std::to_string(crowns) + " with crowns), " + std::to_string(disagreements) + " disagreements, " +
              fmt_seconds(s)};
}

Outcome planted_642() {
  const auto r = verify_642_on_corpus(1, 10000, 13, 30);
  return {r.passed() && r.instances == 10000,
          std::to_string(r.instances) + " planted instances, " + std::to_string(r.failures.size()) + " failures" +
              first_failure(r)};
}

Outcome link_uniqueness() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = enumerate_555_link_graphs();
  const double s = seconds_since(t0);
  const bool matches = e.classes.size() == 1 &&
                       canonical_form(realize_link_graph(e.classes[0]))
                           .same_class(canonical_form(realize_link_graph(canonical_link_graph_G())));
  return {matches && e.eight_cycle_completions == 0 && s < 60,
          std::to_string(e.classes.size()) + " class(es) from " + std::to_string(e.ab_classes) +
              " A/B classes, isomorphic to G: " + (matches ? "yes" : "no") + ", " + fmt_seconds(s)};
}

Outcome replay() {
  const auto r = replay_555_extensions();
  std::string ex;
  for (const auto& [k, v] : r.facts) {
    if (k == "|E_X|") ex = v;
  }
  return {r.passed() && ex == "13", "|E_X| = " + ex + ", " + std::to_string(r.failures.size()) + " failures" + first_failure(r)};
}

Outcome order11() {
  const int order = min_counterexample_order();
  return {order == 11, "min_counterexample_order() = " + std::to_string(order)};
}

Outcome discharge() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = discharge_suite(7, 1000, 40);
  const double s = seconds_since(t0);
  std::string large;
  for (const auto& [k, v] : r.facts) {
    if (k == "large_vertices_checked") large = v;
  }
  return {r.passed() && r.instances == 1000 && s < 60,
          std::to_string(r.instances) + " degree functions, " + large + " vertices with m >= 9, " +
              std::to_string(r.failures.size()) + " failures, " + fmt_seconds(s) + first_failure(r)};
}

Outcome exact_values() {
  const auto t0 = std::chrono::steady_clock::now();
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<int> thread_counts{1, 2, hw};
  std::sort(thread_counts.begin(), thread_counts.end());
  thread_counts.erase(std::unique(thread_counts.begin(), thread_counts.end()), thread_counts.end());

  bool ok = true;
  std::string values;
  std::string problems;
  for (int n = 3; n <= 10; ++n) {
    std::vector<ExtremalCertificate> certs;
    for (int t : thread_counts) {
      SearchOptions o;
      o.threads = t;
      certs.push_back(exact_ex(n, o));
    }
    const auto& c = certs.front();
    auto fail = [&](const std::string& why) {
      ok = false;
      problems += " n=" + std::to_string(n) + ": " + why + ";";
    };
    if (!c.exhaustive) fail("not exhaustive");
    if (c.value < lower_bound_value(n)) fail("below 6 floor((n-3)/4)");
    if (3 * c.value >= 5 * n) fail("3 value >= 5n");
    if (c.value > n * (n - 1) / 6) fail("above n(n-1)/6");
    if (n == 7 && c.value != 7) fail("ex(7) != 7");
    if (n == 8 && c.value != 8) fail("ex(8) != 8");
    for (const auto& w : c.witnesses) {
      if (static_cast<int>(w.num_edges()) != c.value || crown_oracle(w)) fail("witness does not re-validate");
    }
    for (const auto& other : certs) {
      const bool same = other.value == c.value && other.exhaustive == c.exhaustive &&
                        other.extremal_classes == c.extremal_classes && other.witnesses.size() == c.witnesses.size() &&
                        std::equal(other.witnesses.begin(), other.witnesses.end(), c.witnesses.begin());
      if (!same) fail("thread counts disagree");
    }
    values += (values.empty() ? "" : ",") + std::to_string(c.value);
  }
  const double s = seconds_since(t0);
  if (s > 1800) ok = false;
  std::string threads;
  for (int t : thread_counts) threads += (threads.empty() ? "" : "/") + std::to_string(t);
  return {ok, "ex(n) for n=3..10: " + values + " (threads " + threads + "), " + fmt_seconds(s) + problems};
}

Outcome ratio_bound() {
  std::int64_t bad = 0;
  for (std::int64_t n = 11; n <= 10000; ++n) bad += !(edge_ratio_bound(n, 0) > Rational(14));
  for (std::int64_t n = 1; n <= 10000; ++n) {
    for (std::int64_t l = 1; l <= n; l += (l < 20 ? 1 : 97)) bad += !(edge_ratio_bound(n, l) > Rational(15));
    bad += !(edge_ratio_bound(n, n) > Rational(15));
  }
  return {bad == 0 && edge_ratio_bound(11, 0) == Rational(275, 19),
          "rhs(n,0) > 14 for 11<=n<=10^4, rhs(n,L>=1) > 15 for 1<=n<=10^4, rhs(11,0) = " + edge_ratio_bound(11, 0).str() + ", " +
              std::to_string(bad) + " violations"};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

Outcome cli_contract() {
  int round_trip_failures = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const int n = 5 + seed % 20;
    const int m = (n * (n - 1) / 6) / 2;
    const CliRun r = cli({"random", "--n", std::to_string(n), "--m", std::to_string(m), "--seed", std::to_string(seed)});
    try {
      if (r.code != kExitOk || to_l3g(parse_l3g(r.out)) != r.out) ++round_trip_failures;
    } catch (const std::exception&) {
      ++round_trip_failures;
    }
  }

  struct Case {
    std::vector<std::string> args;
    int expected;
  };
  std::vector<Case> golden;
  Rng rng(99);
  int file_id = 0;
  auto file_with = [&](const std::string& content) {
    const std::string path = "acceptance_case_" + std::to_string(file_id++) + ".l3g";
    std::ofstream(path, std::ios::binary) << content;
    return path;
  };
  for (int i = 0; i < 12; ++i) {
    const int n = rng.between(9, 14);
    const auto g = random_linear_graph(n, rng.between(n, n * (n - 1) / 6), rng.next(), 200).graph;
    golden.push_back({{"check", file_with(to_l3g(g))}, crown_oracle(g) ? kExitPropertyFails : kExitOk});
  }
  golden.push_back({{"check", file_with("9 4\n0 1 2\n0 3 4\n1 5 6\n2 7 8\n")}, kExitPropertyFails});
  golden.push_back({{"check", file_with("4 2\n0 1 2\n0 1 3\n")}, kExitUsage});
  golden.push_back({{"exact", "--n", "7", "--json"}, exact_ex(7).exhaustive ? kExitOk : kExitBudget});
  golden.push_back({{"exact", "--n", "12", "--max-nodes", "2"}, kExitBudget});
  golden.push_back({{"lemmas", "--suite", "order11"}, min_counterexample_order() == 11 ? kExitOk : kExitPropertyFails});
  golden.push_back({{"construct", "--n", "11"}, kExitOk});
  golden.push_back({{"frobnicate"}, kExitUsage});
  golden.push_back({{"link", file_with("3 1\n0 1 2\n"), "--edge", "1"}, kExitUsage});

  int code_mismatches = 0;
  for (const Case& c : golden) code_mismatches += cli(c.args).code != c.expected;
  for (int i = 0; i < file_id; ++i) std::remove(("acceptance_case_" + std::to_string(i) + ".l3g").c_str());

  return {round_trip_failures == 0 && code_mismatches == 0 && golden.size() == 20,
          "100 round-trips (" + std::to_string(round_trip_failures) + " failures), " + std::to_string(golden.size()) +
              " golden exit codes (" + std::to_string(code_mismatches) + " mismatches)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence", oracle_equivalence},
      {"2 planted (6,4,2) crowns", planted_642},
      {"3 link-graph uniqueness", link_uniqueness},
      {"4 (5,5,5) replay", replay},
      {"5 order-11 check", order11},
      {"6 discharging suite", discharge},
      {"7 exact values n<=10", exact_values},
      {"8 edge-ratio bound arithmetic", ratio_bound},
      {"9 CLI contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
