import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f4rigid import __version__
from f4rigid.cli import COMMANDS, canonical, run
from f4rigid.structconst import builtin_group


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(["--no-timing", *argv], out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def results(*argv):
    status, out, _ = call(*argv)
    return status, json.loads(out)


def test_involutions():
    status, rep = results("involutions")
    assert status == 0
    assert rep["command"] == "involutions" and rep["version"] == __version__
    got = sorted((c["centralizer_type"], c["orbit_size"], c["label"]) for c in rep["results"]["classes"])
    assert got == [("A1+C3", 12, "x"), ("B4", 3, "y_s")]
    assert rep["results"]["involution_count"] == 15


def test_order_poly():
    status, rep = results("order-poly")
    r = rep["results"]
    assert status == 0
    assert r["degree"] == 52 and r["monic"] and r["poincare_identity"]
    assert r["order_poly"]["coeffs"][0] == [52, "1"]


def test_verify_parabolics():
    status, rep = results("verify-parabolics")
    assert status == 0
    assert [c["contradiction_holds"] for c in rep["results"]["cases"]] == [True] * 4
    status, rep = results("verify-parabolics", "--case", "1", "--soundness", "20")
    assert status == 0
    assert rep["results"]["cases"][0]["minimal_margin"] == 1
    assert all(s["product_violations"] == 0 for s in rep["results"]["cases"][0]["soundness"])


def test_semisimple_and_characteristic():
    status, rep = results("semisimple", "--torsion", "3")
    assert status == 0 and len(rep["results"]["classes"]) == 4
    assert rep["results"]["characteristic"] == "generic p > 3"
    assert call("semisimple", "--torsion", "5")[0] == 2
    assert call("semisimple", "--torsion", "6", "--characteristic", "3")[0] == 2
    assert call("semisimple", "--torsion", "3", "--characteristic", "4")[0] == 2
    status, rep = results("semisimple", "--torsion", "5", "--characteristic", "7", "--type", "A2")
    assert status == 0 and rep["results"]["characteristic"] == 7


def test_torus_orders():
    status, rep = results("torus-orders", "--type", "B3")
    assert status == 0
    assert rep["results"]["class_count"] == 10
    assert all(c["divides_group_order"] for c in rep["results"]["classes"])


def test_levi():
    status, rep = results("levi", "--index", "4", "--weights")
    assert status == 0
    assert set(rep["results"]) == {"levi_index", "weights"}
    assert rep["results"]["weights"]["dimension"] == 7
    status, rep = results("levi", "--index", "2")
    assert {"fusion", "weights", "eigen"} <= set(rep["results"])


def test_structconst_and_rigidity(tmp_path):
    status, rep = results("structconst", "--group", "A5", "--classes", "2a,3a,5a", "--table", "A5", "--brute-force")
    assert status == 0 and rep["results"]["agree"] and rep["results"]["count"] == 60
    assert rep["results"]["formula"] == "1/1"
    # group file path instead of a builtin name
    p = tmp_path / "s3.json"
    p.write_text(json.dumps(builtin_group("S3").to_json()))
    status, rep = results("rigidity", "--group", str(p), "--classes", "2a,2a,3a")
    assert status == 0 and rep["results"]["rigid"]
    assert results("rigidity", "--group", "A4", "--classes", "2a,3a,3a")[0] == 1


def test_dump_datum(tmp_path):
    status, rep = results("dump-datum")
    assert status == 0 and len(rep["results"]["roots"]) == 48
    target = tmp_path / "f4.json"
    status, out, _ = call("--dump-datum", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["label"] == "F4"


def test_text_mode():
    status, out, _ = call("--text", "order-poly")
    assert status == 0 and "degree: 52" in out
    status, out, _ = call("verify-parabolics", "--text")
    assert "all_hold: true" in out


@pytest.mark.parametrize("argv", [
    ["--bogus"],
    [],
    ["nonsense"],
    ["levi", "--index", "7"],
    ["levi"],
    ["semisimple"],
    ["semisimple", "--torsion", "x"],
    ["structconst", "--group", "nope", "--classes", "2a,3a,5a"],
    ["structconst", "--group", "A5", "--classes", "2a,3a"],
    ["structconst", "--group", "A5", "--classes", "2a,3a,9z"],
    ["rigidity", "--group", "S4"],
    ["dump-datum", "--type", "Q7"],
    ["verify-parabolics", "--case", "0"],
])
def test_usage_errors(argv):
    status, out, err = call(*argv)
    assert status == 2
    assert out == ""
    assert err


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["--json", "--text", "--x", "-q", "levi", "--index", "1", "2", "semisimple",
                                 "--torsion", "order-poly", "--case", "dump-datum", "foo"]), max_size=4))
def test_exit_status_contract(argv):
    status, out, err = call(*argv)
    assert status in (0, 1, 2)
    if status == 2:
        assert out == "" and err
    else:
        assert out


def test_canonical():
    from fractions import Fraction
    assert canonical({"a": Fraction(1, 2), "b": 2 ** 60, "c": (1, 2)}) == {"a": "1/2", "b": str(2 ** 60), "c": [1, 2]}
    with pytest.raises(TypeError):
        canonical(object())


def test_timing_field():
    out = io.StringIO()
    assert run(["involutions"], out=out, err=io.StringIO()) == 0
    assert isinstance(json.loads(out.getvalue())["elapsed_ms"], float)


def test_every_command_is_wired():
    assert set(COMMANDS) == {"involutions", "semisimple", "torus-orders", "order-poly", "levi",
                             "verify-parabolics", "structconst", "rigidity", "dump-datum"}
