from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hbtensor import HbGraph, Multiset, ParseError, e_adjacency_tensor, uniformize
from hbtensor.io import (
    dump_hbgraph,
    dump_tensor_coo,
    dump_trace,
    dumps,
    format_rational,
    hbgraph_from_obj,
    hbgraph_to_obj,
    incidence_csv,
    load_hbgraph,
    load_tensor_coo,
    load_trace,
    mset_from_obj,
    mset_to_obj,
    tensor_from_coo,
    tensor_from_obj,
    tensor_to_coo,
    tensor_to_obj,
    trace_from_obj,
    trace_to_obj,
)
from randgen import random_hbgraph


def test_format_rational():
    assert format_rational(5) == "5"
    assert format_rational(Fraction(5, 3)) == "5/3"
    assert format_rational(Fraction(4, 2)) == "2"


def test_mset_round_trip():
    m = Multiset(("a", "b", "c"), {"a": 2, "c": Fraction(1, 3)})
    obj = mset_to_obj(m)
    assert obj == {"universe": ["a", "b", "c"], "mult": {"a": 2, "c": "1/3"}}
    assert mset_from_obj(obj) == m


def test_hbgraph_round_trip(demo, tmp_path):
    path = tmp_path / "g.json"
    dump_hbgraph(demo, path)
    assert load_hbgraph(path) == demo
    weighted = HbGraph(demo.vertices, demo.edges, weights=[1, 2, Fraction(5, 3), 7])
    dump_hbgraph(weighted, path)
    assert load_hbgraph(path) == weighted


def test_hbgraph_json_accepts_decimal_floats():
    obj = {"vertices": ["a"], "edges": [{"mult": {"a": 1.2}}]}
    import json

    parsed = json.loads(json.dumps(obj), parse_float=Fraction)
    h = hbgraph_from_obj(parsed)
    assert h.edges[0].multiplicity("a") == Fraction(6, 5)


def test_hbgraph_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_hbgraph(bad)
    assert "line 1" in str(err.value)
    with pytest.raises(ParseError) as err:
        hbgraph_from_obj({"vertices": "oops", "edges": []})
    assert "vertices" in str(err.value)
    with pytest.raises(ParseError) as err:
        hbgraph_from_obj({"vertices": ["a"], "edges": [{"mult": {"a": "x/y"}}]})
    assert "edges[0]" in str(err.value)
    with pytest.raises(ParseError):
        hbgraph_from_obj({"vertices": ["a"], "edges": [{"mult": {"b": 1}}]})


def test_tensor_coo_round_trip(demo, tmp_path):
    t, _ = e_adjacency_tensor(demo, "silo")
    path = tmp_path / "t.coo"
    dump_tensor_coo(t, path)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "# order=5 dim=11 entries=4"
    assert load_tensor_coo(path) == t


def test_tensor_coo_full_mode_reimports(demo):
    t, _ = e_adjacency_tensor(demo, "straightforward")
    text = tensor_to_coo(t, mode="full")
    assert tensor_from_coo(text) == t


def test_tensor_coo_errors():
    with pytest.raises(ParseError):
        tensor_from_coo("1 2 1/2\n")  # no header
    with pytest.raises(ParseError):
        tensor_from_coo("# order=2 dim=2 entries=2\n1 2 1/2\n")  # count mismatch
    with pytest.raises(ParseError):
        tensor_from_coo("# order=2 dim=2 entries=1\n1 2 x\n")
    with pytest.raises(ParseError):
        tensor_from_coo("# order=2 dim=2 entries=2\n1 2 1/2\n2 1 1/3\n")


def test_tensor_json_round_trip(demo):
    t, _ = e_adjacency_tensor(demo, "layered")
    assert tensor_from_obj(tensor_to_obj(t)) == t


def test_trace_round_trip(demo, tmp_path):
    for approach in ("straightforward", "silo", "layered"):
        _, trace = uniformize(demo, approach)
        path = tmp_path / f"{approach}.trace.json"
        dump_trace(trace, path)
        assert load_trace(path) == trace


def test_trace_provenance_serialized_one_based(demo):
    _, trace = uniformize(demo, "silo")
    obj = trace_to_obj(trace)
    assert obj["edge_provenance"] == [4, 3, 2, 1]
    assert trace_from_obj(obj).edge_provenance == (3, 2, 1, 0)


def test_incidence_csv(demo):
    text = incidence_csv(demo.incidence_matrix())
    lines = text.splitlines()
    assert lines[0] == "vertex,e1,e2,e3,e4"
    assert lines[1] == "v1,2,0,0,0"
    assert lines[7] == "v7,0,0,0,0"


def test_deterministic_output(demo):
    a = dumps(hbgraph_to_obj(demo))
    b = dumps(hbgraph_to_obj(HbGraph.from_dicts(
        ("v1", "v2", "v3", "v4", "v5", "v6", "v7"),
        ({"v1": 2, "v4": 2, "v5": 1}, {"v2": 3, "v3": 1}, {"v3": 1, "v5": 2}, {"v6": 1}),
    )))
    assert a == b
    t1, _ = e_adjacency_tensor(demo, "silo")
    t2, _ = e_adjacency_tensor(demo, "silo")
    assert tensor_to_coo(t1) == tensor_to_coo(t2)


def test_random_round_trips():
    rng = random.Random(71)
    for _ in range(20):
        h = random_hbgraph(rng)
        assert hbgraph_from_obj(hbgraph_to_obj(h)) == h
        t, trace = e_adjacency_tensor(h, "silo")
        assert tensor_from_coo(tensor_to_coo(t)) == t
        assert tensor_from_obj(tensor_to_obj(t)) == t
        assert trace_from_obj(trace_to_obj(trace)) == trace
