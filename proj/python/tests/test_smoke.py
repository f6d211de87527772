from fractions import Fraction
from pathlib import Path

import pytest

import gogkit

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def fixture(name):
    return gogkit.load(str(FIXTURES / f"{name}.gog"))


def test_load_and_validate():
    g = fixture("bs23")
    assert g.num_vertices == 1
    assert g.num_edges == 2
    assert g.base == "v"
    assert g.validate() == []
    assert len(fixture("singular").validate()) == 2


def test_reduce_and_q_ratio():
    g = fixture("bs23")
    assert gogkit.reduce(g, "(4) e") == "(1) e (2)"
    assert gogkit.q_ratio(g, "e") == Fraction(2, 3)
    with pytest.raises(ValueError):
        gogkit.reduce(g, "(1) nope")


def test_tree_valences_are_five_regular():
    levels = gogkit.tree_valences(fixture("bs23"), 3)
    assert [sum(level.values()) for level in levels] == [1, 5, 20, 80]
    assert all(set(level) == {5} for level in levels)


def test_analyze_and_classify():
    assert gogkit.analyze(fixture("bs12"))["minimal"]["value"] == "false"
    c = gogkit.classify(fixture("theta4"))
    assert c["dichotomy"] == "kirchberg"
    assert c["k0"] == "Z^4 + Z/3"
    odo = gogkit.classify(fixture("odometer"))
    assert odo["dichotomy"] == "stable_bunce_deddens"
    assert odo["supernatural"] == "2^inf"


def test_gfamily_relations_hold():
    r = gogkit.gfamily_verify(fixture("figure8"), depth=3, xi="; a")
    assert r["xi"] == "(a)^inf"
    assert r["relations"]["all_hold"]
    assert r["ck"]["all_hold"]
    assert r["relations"]["dim"] == 27


def test_bs_tail_functional():
    t = gogkit.bs_tail_functional(2, 3, 2)
    assert t["f_u"] == 1
    assert t["nonzero"] == 0


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        gogkit.parse("[vertices]\nx = Q\n")
