"""Crown-free linear 3-graphs: detection, exact search, discharging checks."""

import json
from fractions import Fraction

from ._core import (
    GraphError,
    LinearThreeGraph,
    ParseError,
    PreconditionError,
    canonical_edges,
    isomorphic,
    lower_bound_construction,
    lower_bound_value,
    min_counterexample_order,
    parse_graph,
    random_linear_graph,
    t_star,
)
from . import _core

__all__ = [
    "GraphError",
    "LinearThreeGraph",
    "ParseError",
    "PreconditionError",
    "canonical_edges",
    "crown_oracle",
    "discharge_trace",
    "exact_ex",
    "find_crown",
    "isomorphic",
    "edge_ratio_bound",
    "link_graph",
    "lower_bound_construction",
    "lower_bound_value",
    "min_counterexample_order",
    "parse_graph",
    "random_linear_graph",
    "run_suites",
    "t_star",
]


def _maybe_json(text):
    return None if text is None else json.loads(text)


def find_crown(graph):
    """Witness dict {"base": [...], "jewels": [[...], ...]} or None."""
    return _maybe_json(_core.find_crown_json(graph))


def crown_oracle(graph):
    return _maybe_json(_core.crown_oracle_json(graph))


def link_graph(graph, edge):
    return json.loads(_core.link_graph_json(graph, edge))


def exact_ex(n, threads=1, max_nodes=None, max_seconds=None):
    return json.loads(_core.exact_ex_json(n, threads, max_nodes, max_seconds))


def discharge_trace(degrees):
    return json.loads(_core.discharge_trace_json(list(degrees)))


def edge_ratio_bound(n, large):
    return Fraction(*_core.edge_ratio_bound(n, large))


def run_suites(name="all", seed=1, count=1000):
    return json.loads(_core.run_suites_json(name, seed, count))
