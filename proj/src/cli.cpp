#include "crownfree/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "crownfree/crown.hpp"
#include "crownfree/discharging.hpp"
#include "crownfree/extremal.hpp"
#include "crownfree/graph_io.hpp"
#include "crownfree/lemma_lab.hpp"
#include "crownfree/serialize.hpp"

namespace crownfree {

namespace {

using nlohmann::json;

int default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string rational_json_text(const Rational& r) { return r.str(); }

int cmd_check(const std::string& file, std::ostream& out) {
  const LinearThreeGraph h = read_graph_file(file);
  if (const auto w = find_crown(h)) {
    out << witness_to_json(h, *w).dump() << '\n';
    return kExitPropertyFails;
  }
  out << "crown-free\n";
  return kExitOk;
}

void print_certificate_text(const ExtremalCertificate& c, bool stable, std::ostream& out) {
  out << "n = " << c.n << "\n"
      << "ex(n, crown) " << (c.exhaustive ? "= " : ">= ") << c.value << "\n"
      << "exhaustive: " << (c.exhaustive ? "yes" : "no") << "\n"
      << "lower-bound seed: " << c.lower_bound_seed << "\n"
      << "extremal classes: " << c.extremal_classes << "\n";
  if (!stable) {
    out << "nodes explored: " << c.nodes_explored << "\n"
        << "elapsed: " << std::fixed << std::setprecision(3) << c.elapsed_seconds << " s\n";
  }
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
    out << "# witness " << i + 1 << "\n" << to_l3g(c.witnesses[i]);
  }
}

json stable_certificate(json j) {
  j.erase("nodes_explored");
  j.erase("elapsed_seconds");
  j["options"].erase("threads");
  return j;
}

json discharge_json(const LinearThreeGraph& h) {
  const DegreeFunction d = degree_function(h);
  const std::vector<int> large = large_set(h);
  json edges = json::array();
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const EdgeId e{i};
    const DegreeVector dv = degree_vector(h, e);
    const Triple& t = h.edge(e);
    edges.push_back({{"edge", json::array({t[0], t[1], t[2]})},
                     {"degree_vector", json::array({dv.x(), dv.y(), dv.z()})},
                     {"s", s_of(h, e)},
                     {"s_star", s_star(h, e)}});
  }
  const std::int64_t ts = t_star(h);
  const auto m = static_cast<std::int64_t>(h.num_edges());
  json j = {{"schema", schema::kDischarge},
            {"n", h.num_vertices()},
            {"m", m},
            {"degrees", d.values},
            {"large", large},
            {"edges", std::move(edges)},
            {"t_star", ts},
            {"sum_of_squares", d.sum_of_squares()}};
  const Rational rhs = edge_ratio_bound(h.num_vertices(), static_cast<std::int64_t>(large.size()));
  json cmp = {{"rhs", rational_json_text(rhs)}};
  if (m > 0) {
    const Rational ratio(ts, m);
    cmp["t_star_per_edge"] = ratio.str();
    cmp["meets_rhs"] = ratio >= rhs;
  } else {
    cmp["t_star_per_edge"] = nullptr;
    cmp["meets_rhs"] = nullptr;
  }
  j["edge_ratio"] = std::move(cmp);
  try {
    const DischargeTrace trace = build_discharge_sequence(d);
    j["trace"] = trace_to_json(trace);
    json bounds = json::array();
    for (int v : large) {
      const DeltaBound b = delta_v_bound_check(trace, v, d.values[static_cast<std::size_t>(v)]);
      bounds.push_back({{"vertex", v}, {"delta_v", b.delta_v}, {"bound", b.bound}, {"holds", b.holds}});
    }
    j["delta_v_bounds"] = std::move(bounds);
  } catch (const PreconditionError& e) {
    j["trace"] = nullptr;
    j["trace_unavailable"] = e.what();
  }
  return j;
}

void print_discharge_text(const json& j, std::ostream& out) {
  out << "n = " << j["n"] << ", m = " << j["m"] << "\n";
  out << "degrees:";
  for (const auto& x : j["degrees"]) out << ' ' << x;
  out << "\nL(H):";
  for (const auto& x : j["large"]) out << ' ' << x;
  out << "\n";
  for (const auto& e : j["edges"]) {
    out << "  " << e["edge"].dump() << "  D=" << e["degree_vector"].dump() << "  s=" << e["s"]
        << "  s*=" << e["s_star"] << "\n";
  }
  out << "T* = " << j["t_star"] << ", sum d^2 = " << j["sum_of_squares"] << "\n";
  const json& l2 = j["edge_ratio"];
  out << "T*/|E| = " << (l2["t_star_per_edge"].is_null() ? std::string("n/a") : l2["t_star_per_edge"].get<std::string>())
      << ", (25n+14|L|)/((5n+2)/3) = " << l2["rhs"].get<std::string>() << "\n";
  if (j["trace"].is_null()) {
    out << "trace: unavailable (" << j["trace_unavailable"].get<std::string>() << ")\n";
    return;
  }
  const json& t = j["trace"];
  out << "trace: k = " << t["steps"].size() << ", f0 = " << t["f0"].dump() << "\n";
  for (std::size_t i = 0; i < t["steps"].size(); ++i) {
    out << "  step " << i + 1 << ": " << t["steps"][i][1] << " -> " << t["steps"][i][0] << "  T=" << t["T"][i + 1]
        << "  delta=" << t["delta"][i] << "\n";
  }
  for (const auto& b : j["delta_v_bounds"]) {
    out << "  vertex " << b["vertex"] << ": delta_v = " << b["delta_v"] << " >= " << b["bound"] << ": "
        << (b["holds"].get<bool>() ? "yes" : "NO") << "\n";
  }
}

void print_reports_text(const std::vector<ReplayReport>& reports, bool stable, std::ostream& out) {
  for (const ReplayReport& r : reports) {
    out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances << " instances, "
        << r.failures.size() << " failures";
    if (!stable) out << ", " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
    out << ")\n";
    for (const auto& [k, v] : r.facts) out << "  " << k << " = " << v << "\n";
    for (const ReplayFailure& f : r.failures) out << "  failed: " << f.instance << ": " << f.claim << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crown-free linear 3-graph toolkit", "crownfree"};
  app.require_subcommand(1);

  std::string file;
  bool json_out = false;
  bool stable = false;
  bool dot = false;
  int n = 0;
  int m = 0;
  int threads = default_threads();
  double max_seconds = 0;
  std::uint64_t max_nodes = 0;
  bool unsafe = false;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t edge = 0;
  std::string suite = "all";

  auto* check = app.add_subcommand("check", "Validate a graph and look for a crown");
  check->add_option("file", file, "L3G or JSON graph")->required();

  auto* exact = app.add_subcommand("exact", "Exact ex(n, crown) by exhaustive search");
  exact->add_option("--n", n)->required()->check(CLI::Range(3, 31));
  exact->add_option("--threads", threads)->check(CLI::PositiveNumber);
  auto* max_seconds_opt = exact->add_option("--max-seconds", max_seconds)->check(CLI::PositiveNumber);
  auto* max_nodes_opt = exact->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
  exact->add_flag("--json", json_out);
  exact->add_flag("--unsafe-5n3-prune", unsafe, "Cap the bound below 5n/3 (assumes the result being tested)");
  exact->add_flag("--stable", stable, "Omit timing, node counts and thread count");

  auto* construct = app.add_subcommand("construct", "Crown-free hub construction, as L3G");
  construct->add_option("--n", n)->required()->check(CLI::Range(3, 1 << 20));

  auto* discharge = app.add_subcommand("discharge", "Degree statistics and the discharging trace");
  discharge->add_option("file", file)->required();
  discharge->add_flag("--json", json_out);

  auto* lemmas = app.add_subcommand("lemmas", "Run the verification suites");
  lemmas->add_option("--suite", suite)
      ->check(CLI::IsMember({"lemma1", "links555", "replay3", "discharge", "order11", "all"}));
  lemmas->add_option("--seed", seed);
  lemmas->add_option("--count", count);
  lemmas->add_flag("--json", json_out);
  lemmas->add_flag("--stable", stable, "Omit timing");

  auto* random = app.add_subcommand("random", "Seeded random linear 3-graph, as L3G");
  random->add_option("--n", n)->required()->check(CLI::Range(1, 1 << 20));
  random->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--seed", seed)->required();

  auto* link = app.add_subcommand("link", "Colored link graph of one edge");
  link->add_option("file", file)->required();
  link->add_option("--edge", edge)->required();
  link->add_flag("--dot", dot);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, out);

    if (exact->parsed()) {
      SearchOptions options;
      options.threads = threads;
      options.unsafe_5n3_prune = unsafe;
      if (*max_seconds_opt) options.budget.max_seconds = max_seconds;
      if (*max_nodes_opt) options.budget.max_nodes = max_nodes;
      const ExtremalCertificate c = exact_ex(n, options);
      if (json_out) {
        json j = certificate_to_json(c);
        out << (stable ? stable_certificate(std::move(j)) : j).dump(2) << '\n';
      } else {
        print_certificate_text(c, stable, out);
      }
      if (!c.exhaustive) {
        err << "search budget exhausted; value is a lower bound only\n";
        return kExitBudget;
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      out << to_l3g(lower_bound_construction(n));
      return kExitOk;
    }

    if (discharge->parsed()) {
      const json j = discharge_json(read_graph_file(file));
      if (json_out) {
        out << j.dump(2) << '\n';
      } else {
        print_discharge_text(j, out);
      }
      return kExitOk;
    }

    if (lemmas->parsed()) {
      const std::vector<ReplayReport> reports = run_suites(suite, seed, count);
      if (json_out) {
        out << reports_to_json(reports, !stable).dump(2) << '\n';
      } else {
        print_reports_text(reports, stable, out);
      }
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const ReplayReport& r) { return r.passed(); });
      return ok ? kExitOk : kExitPropertyFails;
    }

    if (random->parsed()) {
      const RandomGraphResult r = random_linear_graph(n, m, seed);
      out << to_l3g(r.graph);
      if (r.saturated) {
        err << "placed only " << r.graph.num_edges() << " of " << m << " edges within the retry budget\n";
        return kExitBudget;
      }
      return kExitOk;
    }

    if (link->parsed()) {
      const LinearThreeGraph h = read_graph_file(file);
      if (edge >= h.num_edges()) {
        err << "error: edge index " << edge << " out of range (graph has " << h.num_edges() << " edges)\n";
        return kExitUsage;
      }
      const ColoredLinkGraph g = link_graph(h, EdgeId{edge});
      out << (dot ? link_graph_dot(g) : link_graph_to_json(g).dump(2) + "\n");
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace crownfree
