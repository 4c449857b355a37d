#include "crownfree/serialize.hpp"

#include <algorithm>
#include <string>

#include "crownfree/graph_io.hpp"

namespace crownfree {

using nlohmann::json;

namespace {

json triple_json(const Triple& t) { return json::array({t[0], t[1], t[2]}); }

const char* side_tag(Side s) { return s == Side::kIncrease ? "I" : "D"; }

}  // namespace

json graph_to_json(const LinearThreeGraph& h) {
  json edges = json::array();
  for (const Triple& t : h.edges()) edges.push_back(triple_json(t));
  return {{"schema", schema::kGraph}, {"n", h.num_vertices()}, {"edges", std::move(edges)}};
}

LinearThreeGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "graph JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") {
      if (!value.is_string() || value.get<std::string>() != schema::kGraph) {
        throw ParseError(0, "unsupported schema");
      }
    } else if (key != "n" && key != "edges") {
      throw ParseError(0, "unexpected key '" + key + "'");
    }
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError(0, "field 'n' must be an integer");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError(0, "field 'edges' must be an array");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1 || n > (1 << 24)) throw ParseError(0, "n out of range");

  std::vector<Triple> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& e = j["edges"][i];
    const std::string where = "edge #" + std::to_string(i);
    if (!e.is_array() || e.size() != 3) throw ParseError(0, where + " is not a triple");
    Triple t{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!e[k].is_number_integer()) throw ParseError(0, where + " has a non-integer entry");
      const auto x = e[k].get<std::int64_t>();
      if (x < 0 || x >= n) throw ParseError(0, where + " has a vertex out of range");
      t[k] = static_cast<int>(x);
    }
    if (!(t[0] < t[1] && t[1] < t[2])) throw ParseError(0, where + " is not strictly ascending");
    if (!edges.empty() && !(edges.back() < t)) throw ParseError(0, where + " is out of lexicographic order");
    edges.push_back(t);
  }
  auto built = validate_linear(edges, static_cast<int>(n));
  if (auto* bad = std::get_if<LinearityViolation>(&built)) throw ParseError(0, bad->message);
  return std::get<LinearThreeGraph>(std::move(built));
}

json witness_to_json(const LinearThreeGraph& h, const CrownWitness& w) {
  json jewels = json::array();
  for (EdgeId e : w.jewels) jewels.push_back(triple_json(h.edge(e)));
  return {{"schema", schema::kWitness}, {"base", triple_json(h.edge(w.base))}, {"jewels", std::move(jewels)}};
}

json link_graph_to_json(const ColoredLinkGraph& g) {
  json edges = json::array();
  for (const ColoredEdge& e : g.edges) {
    json item = {{"pair", json::array({e.u, e.v})}, {"color", std::string(1, color_name(e.color))}};
    if (e.source) item["source"] = e.source->index;
    edges.push_back(std::move(item));
  }
  return {{"schema", schema::kLinkGraph},
          {"base", triple_json(g.base)},
          {"vertices", g.vertices},
          {"edges", std::move(edges)}};
}

json trace_to_json(const DischargeTrace& trace) {
  json steps = json::array();
  for (const TransferStep& s : trace.steps) steps.push_back(json::array({s.gains, s.loses}));
  json partition = json::array();
  for (Side s : trace.partition) partition.push_back(side_tag(s));
  json steps_at = json::array();
  for (const auto& at : trace.steps_at) steps_at.push_back(at);
  return {{"schema", schema::kTrace},
          {"f0", trace.f0},
          {"residue", trace.residue},
          {"order", trace.order},
          {"steps", std::move(steps)},
          {"partition", std::move(partition)},
          {"T", trace.t},
          {"delta", trace.delta},
          {"gain", trace.gain},
          {"loss", trace.loss},
          {"delta_v", trace.delta_v},
          {"steps_at", std::move(steps_at)}};
}

json certificate_to_json(const ExtremalCertificate& c) {
  json witnesses = json::array();
  for (const LinearThreeGraph& h : c.witnesses) witnesses.push_back(to_l3g(h));
  json budget = json::object();
  budget["max_nodes"] = c.options.budget.max_nodes ? json(*c.options.budget.max_nodes) : json(nullptr);
  budget["max_seconds"] = c.options.budget.max_seconds ? json(*c.options.budget.max_seconds) : json(nullptr);
  return {{"schema", schema::kCertificate},
          {"n", c.n},
          {"value", c.value},
          {"exhaustive", c.exhaustive},
          {"lower_bound_seed", c.lower_bound_seed},
          {"extremal_classes", c.extremal_classes},
          {"witnesses", std::move(witnesses)},
          {"nodes_explored", c.nodes_explored},
          {"elapsed_seconds", c.elapsed_seconds},
          {"options",
           {{"threads", c.options.threads},
            {"crown_filter", c.options.crown_filter},
            {"bound_pruning", c.options.bound_pruning},
            {"unsafe_5n3_prune", c.options.unsafe_5n3_prune},
            {"witness_cap", c.options.witness_cap},
            {"budget", std::move(budget)}}}};
}

json report_to_json(const ReplayReport& r, bool include_timing) {
  json failures = json::array();
  for (const ReplayFailure& f : r.failures) failures.push_back({{"instance", f.instance}, {"claim", f.claim}});
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  json out = {{"suite", r.suite},
              {"passed", r.passed()},
              {"instances", r.instances},
              {"failure_count", r.failures.size()},
              {"failures", std::move(failures)},
              {"seed", r.seed},
              {"facts", std::move(facts)}};
  if (include_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

json reports_to_json(const std::vector<ReplayReport>& reports, bool include_timing) {
  json list = json::array();
  for (const ReplayReport& r : reports) list.push_back(report_to_json(r, include_timing));
  const bool all = std::all_of(reports.begin(), reports.end(), [](const ReplayReport& r) { return r.passed(); });
  return {{"schema", schema::kReports}, {"passed", all}, {"reports", std::move(list)}};
}

}  // namespace crownfree
