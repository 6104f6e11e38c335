import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from qpart.cli import OutputRecord, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, (json.loads(out) if out else None), err


def test_expand(capsys):
    code, doc, _ = run_json(capsys, "expand", "--r", "2", "--terms", "4")
    assert code == 0
    assert doc["results"] == ["1", "2", "5", "10"]
    assert list(doc) == ["command", "parameters", "results", "depth", "status"]
    _, doc, _ = run_json(capsys, "expand", "--r", "-1", "--terms", "6")
    assert doc["results"] == ["1", "-1", "-1", "0", "0", "1"]
    _, doc, _ = run_json(capsys, "expand", "--r", "1", "--terms", "1")
    assert doc["results"] == ["1"]


def test_expand_csv(capsys):
    code, out, _ = run(capsys, "expand", "--r", "2", "--terms", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,1", "1,2", "2,5", "3,10"]


@pytest.mark.parametrize("r", [-5, -1, 1, 3])
def test_expand_mod_matches_reduced(capsys, r):
    _, plain, _ = run_json(capsys, "expand", "--r", str(r), "--terms", "60")
    _, modded, _ = run_json(capsys, "expand", "--r", str(r), "--terms", "60", "--mod", "7")
    assert [int(v) % 7 for v in plain["results"]] == [int(v) for v in modded["results"]]


def test_expand_errors(capsys):
    code, out, err = run(capsys, "expand", "--r", "0", "--terms", "4")
    assert code == 2 and out == "" and "nonzero" in err
    code, out, _ = run(capsys, "expand", "--r", "1", "--terms", "0")
    assert code == 2 and out == ""


def test_expand_default_terms_env(capsys, monkeypatch):
    _, doc, _ = run_json(capsys, "expand", "--r", "1")
    assert len(doc["results"]) == 500
    monkeypatch.setenv("QPART_DEFAULT_TERMS", "12")
    _, doc, _ = run_json(capsys, "expand", "--r", "1")
    assert len(doc["results"]) == 12
    monkeypatch.setenv("QPART_DEFAULT_TERMS", "lots")
    code, out, _ = run(capsys, "expand", "--r", "1")
    assert code == 2 and out == ""


def test_verify(capsys):
    code, doc, _ = run_json(capsys, "verify", "--r", "1", "--A", "5", "--B", "4", "--M", "5", "--nmax", "100")
    assert code == 0 and doc["status"] == "HoldsToDepth"
    code, doc, _ = run_json(capsys, "verify", "--r", "1", "--A", "13", "--B", "6", "--M", "11", "--nmax", "5")
    assert code == 1
    assert doc["results"][0]["witness"] == {"n": 1, "value": "6"}
    code, out, _ = run(capsys, "verify", "--r", "1", "--A", "0", "--B", "0", "--M", "5", "--nmax", "5")
    assert code == 2 and out == ""


def test_verify_csv(capsys):
    code, out, _ = run(
        capsys, "verify", "--r", "1", "--A", "13", "--B", "6", "--M", "11", "--nmax", "5", "--format", "csv"
    )
    assert code == 1
    rows = out.splitlines()
    assert rows[0] == "field,value"
    assert "report[0].witness_n,1" in rows and "report[0].witness_value,6" in rows


def test_theorem(capsys):
    code, doc, _ = run_json(capsys, "theorem", "--id", "T2", "--lambda-min", "0", "--lambda-max", "2", "--nmax", "100")
    assert code == 0 and len(doc["results"]) == 9
    code, _, _ = run_json(capsys, "theorem", "--id", "T5", "--lambda-min", "-1", "--lambda-max", "1", "--nmax", "20")
    assert code == 0
    code, out, _ = run(capsys, "theorem", "--id", "T9", "--lambda-min", "0", "--lambda-max", "1", "--nmax", "5")
    assert code == 2 and out == ""
    code, out, _ = run(capsys, "theorem", "--id", "T1", "--lambda-min", "3", "--lambda-max", "1", "--nmax", "5")
    assert code == 2 and out == ""


def test_identity(capsys):
    code, doc, _ = run_json(capsys, "identity", "--name", "lemma-h5", "--k", "3", "--terms", "300")
    assert code == 0 and doc["results"][0]["detail"]["constant"] == "5"
    code, _, _ = run_json(capsys, "identity", "--name", "dissection5", "--terms", "500")
    assert code == 0
    code, _, _ = run_json(capsys, "identity", "--name", "frobenius", "--p", "5", "--terms", "500")
    assert code == 0
    code, _, _ = run_json(capsys, "identity", "--name", "jacobi", "--terms", "100")
    assert code == 0
    code, doc, _ = run_json(capsys, "identity", "--name", "ramanujan-pm4", "--w", "5,11", "--nmax", "20")
    assert code == 0 and len(doc["results"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["--name", "lemma-h5", "--terms", "50"],
        ["--name", "lemma-h5", "--k", "5", "--terms", "50"],
        ["--name", "frobenius", "--terms", "50"],
        ["--name", "frobenius", "--p", "4", "--terms", "50"],
        ["--name", "ramanujan-pm4"],
        ["--name", "ramanujan-pm4", "--w", "7"],
        ["--name", "ramanujan-pm4", "--w", "5,x"],
        ["--name", "nope"],
    ],
)
def test_identity_usage_errors(capsys, argv):
    code, out, _ = run(capsys, "identity", *argv)
    assert code == 2 and out == ""


def test_scan(capsys):
    code, doc, _ = run_json(capsys, "scan", "--r-min", "1", "--r-max", "1", "--modulus", "5", "--A", "5", "--nmax", "200")
    assert code == 0
    assert [(c["r"], c["B"]) for c in doc["results"]] == [(1, 4)]
    assert doc["results"][0]["label"] == "candidate to depth 200"
    _, doc, _ = run_json(capsys, "scan", "--r-min", "-4", "--r-max", "-4", "--modulus", "5", "--A", "5", "--nmax", "200")
    assert 4 in [c["B"] for c in doc["results"]]
    code, doc, _ = run_json(capsys, "scan", "--r-min", "3", "--r-max", "3", "--modulus", "5", "--A", "5", "--nmax", "200")
    assert code == 0 and isinstance(doc["results"], list)
    code, out, _ = run(capsys, "scan", "--r-min", "1", "--r-max", "1", "--modulus", "5", "--A", "5", "--nmax", "3")
    assert code == 2 and out == ""


def test_oracle(capsys):
    code, doc, _ = run_json(capsys, "oracle", "--n", "5", "--r", "-1")
    assert code == 0
    assert doc["results"] == [{"n": 5, "r": -1, "value": "1", "even": "2", "odd": "1"}]
    _, doc, _ = run_json(capsys, "oracle", "--n", "3", "--r", "2")
    assert doc["results"][0]["value"] == "10"
    _, doc, _ = run_json(capsys, "oracle", "--n", "0", "--r", "7")
    assert doc["results"][0]["value"] == "1"
    code, out, _ = run(capsys, "oracle", "--n", "500", "--r", "2")
    assert code == 2 and out == ""
    code, out, _ = run(capsys, "oracle", "--n", "3", "--r", "2", "--format", "csv")
    assert out.splitlines() == ["n,value", "3,10"]


scalars = st.one_of(st.integers(), st.text(max_size=5), st.none(), st.booleans())
json_values = st.recursive(
    scalars,
    lambda inner: st.one_of(st.lists(inner, max_size=4), st.dictionaries(st.text(max_size=4), inner, max_size=4)),
    max_leaves=12,
)


@given(
    st.text(max_size=10),
    st.dictionaries(st.text(max_size=6), scalars, max_size=5),
    st.lists(json_values, max_size=5),
    st.integers(0, 10**6),
    st.sampled_from(["ok", "HoldsToDepth", "Counterexample"]),
)
def test_output_record_roundtrip(command, params, results, depth, status):
    rec = OutputRecord(command, params, results, depth, status)
    assert OutputRecord.from_json(rec.to_json()) == rec
    assert rec.to_json() == OutputRecord.from_json(rec.to_json()).to_json()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qpart", "expand", "--r", "2", "--terms", "4", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "3,10"
