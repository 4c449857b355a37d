#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crownfree/canonical.hpp"
#include "crownfree/crown.hpp"
#include "crownfree/discharging.hpp"
#include "crownfree/extremal.hpp"
#include "crownfree/graph_io.hpp"
#include "crownfree/lemma_lab.hpp"
#include "crownfree/serialize.hpp"

namespace py = pybind11;
using namespace crownfree;

namespace {

std::optional<std::string> witness_json(const LinearThreeGraph& h, const std::optional<CrownWitness>& w) {
  if (!w) return std::nullopt;
  return witness_to_json(h, *w).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crown-free linear 3-graphs: detection, exact search, discharging checks";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<LinearThreeGraph>(m, "LinearThreeGraph")
      .def(py::init([](int n, std::vector<Triple> edges) { return LinearThreeGraph::build(n, std::move(edges)); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &LinearThreeGraph::num_vertices)
      .def_property_readonly("edges", &LinearThreeGraph::edges)
      .def("num_edges", &LinearThreeGraph::num_edges)
      .def("degree", &LinearThreeGraph::degree)
      .def("degree_vector", [](const LinearThreeGraph& h, std::size_t e) {
        const DegreeVector d = degree_vector(h, EdgeId{e});
        return std::array<int, 3>{d.x(), d.y(), d.z()};
      })
      .def("to_l3g", [](const LinearThreeGraph& h) { return to_l3g(h); })
      .def("to_json", [](const LinearThreeGraph& h) { return to_graph_json(h); })
      .def("__eq__", [](const LinearThreeGraph& a, const LinearThreeGraph& b) { return a == b; })
      .def("__repr__", [](const LinearThreeGraph& h) {
        return "<LinearThreeGraph n=" + std::to_string(h.num_vertices()) + " m=" + std::to_string(h.num_edges()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("find_crown_json", [](const LinearThreeGraph& h) { return witness_json(h, find_crown(h)); });
  m.def("crown_oracle_json", [](const LinearThreeGraph& h) { return witness_json(h, crown_oracle(h)); });
  m.def("canonical_edges", [](const LinearThreeGraph& h) { return canonical_form(h).edges; });
  m.def("isomorphic", &isomorphic);
  m.def("link_graph_json", [](const LinearThreeGraph& h, std::size_t e) { return link_graph_to_json(link_graph(h, EdgeId{e})).dump(); });

  m.def(
      "exact_ex_json",
      [](int n, int threads, std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds) {
        SearchOptions o;
        o.threads = threads;
        o.budget.max_nodes = max_nodes;
        o.budget.max_seconds = max_seconds;
        py::gil_scoped_release release;
        return certificate_to_json(exact_ex(n, o)).dump();
      },
      py::arg("n"), py::arg("threads") = 1, py::arg("max_nodes") = py::none(), py::arg("max_seconds") = py::none());
  m.def("lower_bound_construction", &lower_bound_construction);
  m.def("lower_bound_value", &lower_bound_value);
  m.def("random_linear_graph", [](int n, int edges, std::uint64_t seed) { return random_linear_graph(n, edges, seed).graph; },
        py::arg("n"), py::arg("m"), py::arg("seed"));

  m.def("discharge_trace_json", [](std::vector<int> degrees) {
    return trace_to_json(build_discharge_sequence(DegreeFunction{std::move(degrees)})).dump();
  });
  m.def("t_star", &t_star);
  m.def("edge_ratio_bound", [](std::int64_t n, std::int64_t large) {
    const Rational r = edge_ratio_bound(n, large);
    return std::make_pair(r.num(), r.den());
  });
  m.def("min_counterexample_order", &min_counterexample_order);
  m.def(
      "run_suites_json",
      [](const std::string& name, std::uint64_t seed, std::size_t count) {
        return reports_to_json(run_suites(name, seed, count)).dump();
      },
      py::arg("name") = "all", py::arg("seed") = 1, py::arg("count") = 1000);
}
