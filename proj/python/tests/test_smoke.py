import os

import pytest

import plumbroots as pr

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data")

UNKNOT = {
    "vertices": [{"id": 0, "framing": None, "marked": True}, {"id": 1, "framing": -1}],
    "edges": [[0, 1]],
}
TWO_THREE = {"vertices": [{"id": 0, "framing": -2}, {"id": 1, "framing": -3}], "edges": [[0, 1]]}


def test_load_and_classes():
    g = pr.load_graph(UNKNOT)
    assert g["schema"] == pr.SCHEMA
    assert len(g["vertices"]) == 2
    assert pr.spinc(TWO_THREE)["count"] == 5
    star = pr.load_graph(os.path.join(DATA, "star.json"))
    assert len(star["vertices"]) == 5


def test_schema_error():
    bad = {"vertices": [{"id": 0, "framing": -2}, {"id": 1, "framing": -3}], "edges": [[0, 1], [1, 0]]}
    with pytest.raises(pr.SchemaError):
        pr.load_graph(bad)
    with pytest.raises(pr.PlumbError):
        pr.surgery(os.path.join(DATA, "trefoil.json"), m0=0)


def test_roots():
    r = pr.graded_root({"vertices": [{"id": 0, "framing": -1}], "edges": []}, depth=3)
    assert len(r["nodes"]) == 4
    b = pr.bigraded_root(os.path.join(DATA, "trefoil.json"), depth=2)
    assert len(b["nodes"]) == 8


def test_family_and_series():
    assert pr.check_axioms()["ad2"]
    assert pr.what(1, 1) == "-1"
    assert pr.what(3, -1) == "-1/2"
    z1 = pr.zhat(TWO_THREE, eps=1, q_max=8)
    z2 = pr.zhat(TWO_THREE, eps=-1, q_max=8)
    assert z1["series"] == z2["series"]


def test_unknot_weights():
    w = pr.weighted_root(UNKNOT, depth=2)
    texts = {n["weight_text"] for n in w["nodes"]}
    assert texts == {"X^1*(1)"}


def test_neumann_and_verify():
    out = pr.neumann(TWO_THREE, "B+@1")
    assert len(out["graph"]["vertices"]) == 3
    rep = pr.verify(os.path.join(DATA, "trefoil.json"), seed=7, moves=4, cases=2)
    assert rep["all_pass"]


def test_surgery_surgery_weight_w():
    s = pr.surgery(os.path.join(DATA, "trefoil.json"), m0=-7, depth=6, specialize="t=1")
    assert s["equal_to_direct"]
    texts = [n["weight_text"] for p in s["pieces"] for n in p["nodes"]]
    assert texts.count("1/2*q^(21/2) - 1/2*q^(23/2)") == 2
