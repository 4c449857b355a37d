from fractions import Fraction

import pytest

import crownfree


CROWN = "9 4\n0 1 2\n0 3 4\n1 5 6\n2 7 8\n"


def test_crown_detection():
    g = crownfree.parse_graph(CROWN)
    assert g.n == 9 and g.num_edges() == 4
    w = crownfree.find_crown(g)
    assert w["base"] == [0, 1, 2]
    assert len(w["jewels"]) == 3
    assert crownfree.crown_oracle(g) is not None
    assert g.to_l3g() == CROWN


def test_fano_is_crown_free():
    fano = crownfree.LinearThreeGraph(
        7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    )
    assert crownfree.find_crown(fano) is None
    assert [fano.degree(v) for v in range(7)] == [3] * 7


def test_linearity_is_enforced():
    with pytest.raises(ValueError):
        crownfree.LinearThreeGraph(4, [(0, 1, 2), (0, 1, 3)])
    with pytest.raises(ValueError):
        crownfree.parse_graph("4 2\n0 1 2\n0 1 3\n")


def test_exact_values():
    cert = crownfree.exact_ex(7)
    assert cert["value"] == 7 and cert["exhaustive"]
    assert crownfree.exact_ex(8, threads=2)["value"] == 8


def test_construction_and_random():
    g = crownfree.lower_bound_construction(11)
    assert g.num_edges() == crownfree.lower_bound_value(11) == 12
    assert crownfree.find_crown(g) is None
    a = crownfree.random_linear_graph(12, 10, 3)
    assert a == crownfree.random_linear_graph(12, 10, 3)
    assert crownfree.parse_graph(a.to_l3g()) == a


def test_discharging_and_lemmas():
    t = crownfree.discharge_trace([2, 2, 5, 5, 5, 11])
    assert t["T"][0] == 150 and t["T"][-1] == 204
    assert t["delta_v"][5] == 54
    assert crownfree.edge_ratio_bound(11, 0) == Fraction(275, 19)
    assert crownfree.min_counterexample_order() == 11
    out = crownfree.run_suites("order11")
    assert out["passed"]
