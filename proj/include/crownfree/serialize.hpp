#pragma once

#include <string_view>

#include "crownfree/crown.hpp"
#include "crownfree/discharging.hpp"
#include "crownfree/extremal.hpp"
#include "crownfree/hypergraph.hpp"
#include "crownfree/lemma_lab.hpp"
#include "json.hpp"

namespace crownfree {

/// Versioned "schema" values carried by every JSON document.
namespace schema {
inline constexpr std::string_view kGraph = "crownfree.graph/1";
inline constexpr std::string_view kWitness = "crownfree.witness/1";
inline constexpr std::string_view kLinkGraph = "crownfree.link/1";
inline constexpr std::string_view kTrace = "crownfree.trace/1";
inline constexpr std::string_view kDischarge = "crownfree.discharge/1";
inline constexpr std::string_view kCertificate = "crownfree.certificate/1";
inline constexpr std::string_view kReports = "crownfree.reports/1";
}  // namespace schema

nlohmann::json graph_to_json(const LinearThreeGraph& h);
/// Strict: integer n, sorted ascending triples, optional matching "schema",
/// no other keys. Throws ParseError.
LinearThreeGraph graph_from_json(const nlohmann::json& j);

/// {"base":[a,b,c],"jewels":[[..],[..],[..]]}
nlohmann::json witness_to_json(const LinearThreeGraph& h, const CrownWitness& w);
nlohmann::json link_graph_to_json(const ColoredLinkGraph& g);
nlohmann::json trace_to_json(const DischargeTrace& trace);

/// Witness graphs are embedded as L3G text.
nlohmann::json certificate_to_json(const ExtremalCertificate& c);

/// Timing is the only nondeterministic field; leave it out for byte-stable output.
nlohmann::json report_to_json(const ReplayReport& r, bool include_timing = true);
nlohmann::json reports_to_json(const std::vector<ReplayReport>& reports, bool include_timing = true);

}  // namespace crownfree
