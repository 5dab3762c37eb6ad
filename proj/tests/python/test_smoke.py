import os
import pathlib

import pytest

import qstack

FIXTURES = pathlib.Path(os.environ.get("QSTACK_FIXTURE_DIR", pathlib.Path(__file__).parents[1] / "fixtures"))


def read(name):
    return (FIXTURES / name).read_text()


def test_parse_and_canonical():
    doc = qstack.parse(read("a2.qv"))
    assert doc["name"] == "A2"
    text = qstack.canonical(read("spacing.qv"))
    assert text.startswith("quiver spacing\n")
    assert qstack.canonical(text) == text


def test_parse_error():
    with pytest.raises(qstack.ParseError):
        qstack.parse("quiver q\nedge e : a -> b\n")
    assert issubclass(qstack.ParseError, qstack.Error)


def test_build_tilde():
    out = qstack.build(read("example.qv"), "tilde")
    assert (out["vertices"], out["edges"], out["triangles"]) == (5, 9, 7)


def test_count():
    out = qstack.count(read("square.qv"), 3, {"a": 1, "b": 1, "c": 1, "d": 1})
    assert out["rep_count"] == "33"
    jordan = qstack.count(read("jordan.qv"), 3, {"a": 1}, orbits=True)
    assert jordan["stacky_count"] == "3/2"
    assert len(jordan["census"]["orbits"]) == 3


def test_solve():
    out = qstack.solve_nakajima(read("jordan.qv"), {"a": 1, "w_a": 1}, {}, seed=5, starts=3)
    assert out["converged_count"] >= 2
    assert out["best"]["residual"] <= 1e-10


def test_check_higgs():
    good = qstack.check_higgs({"n": 2, "m": 2, "phi": [[[0, 1], [0, 0]], [[1, 0], [0, 1]]]})
    assert good["integrable"] and good["diagram_valid"]
    bad = qstack.check_higgs({"n": 2, "m": 2, "phi": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]})
    assert not bad["integrable"] and not bad["diagram_valid"]


def test_verify():
    out = qstack.verify("trace-composition", seed=1, cases=20)
    assert out["ok"] and out["cases"] == 20


def test_errors_are_exceptions():
    with pytest.raises(qstack.Error):
        qstack.count(read("a2.qv"), 4, {})
