import csv
import io
import json

import jsonschema
import pytest

from jackpoly.cli import main
from jackpoly.serialize import JACK_RECORD_SCHEMA, coeff_from_json, result_record
from jackpoly.jack import JackResult
from jackpoly.alpha import AlphaRational
from jackpoly.multipoly import MultiPoly
from jackpoly.partitions import Partition
from jackpoly.symmetric import MExpansion


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_plain(capsys):
    code, out, _ = run(capsys, "compute", "--partition", "1,1", "--n", "2", "--format", "plain")
    assert code == 0
    assert out == "J[1,1] = (2) m[1,1]\n"


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--partition", "2", "--n", "2", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    jsonschema.validate(rec, JACK_RECORD_SCHEMA)
    assert rec == {"lambda": [2], "n": 2, "coeffs": [
        {"mu": [2], "v": [[0, 1], [1, 1]]},
        {"mu": [1, 1], "v": [[0, 2]]},
    ]}


def test_compute_json_schema_larger(capsys):
    code, out, _ = run(capsys, "compute", "--partition", "3,2,1", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    jsonschema.validate(rec, JACK_RECORD_SCHEMA)
    assert rec["n"] == 6
    assert {tuple(c["mu"]) for c in rec["coeffs"]} >= {(3, 2, 1), (1, 1, 1, 1, 1, 1)}


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--partition", "2", "--format", "csv")
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [
        ["lambda", "n", "mu", "v"], ["2", "2", "2", "1+a"], ["2", "2", "1,1", "2"]]


def test_compute_too_long(capsys):
    code, out, err = run(capsys, "compute", "--partition", "2,1,1", "--n", "2")
    assert code == 2 and out == ""
    assert "partition has 3 parts but n = 2" in err


@pytest.mark.parametrize("bad", ["1,2", "a", "1,,2", "-1"])
def test_compute_malformed_partition(capsys, bad):
    code, out, err = run(capsys, "compute", f"--partition={bad}")
    assert code == 2 and out == "" and err


def test_compute_alpha_substitution(capsys):
    code, out, _ = run(capsys, "compute", "--partition", "2", "--alpha", "1/2")
    assert code == 0
    assert out == "J[2] = (3/2) m[2] + (2) m[1,1]\n"
    code, out, _ = run(capsys, "compute", "--partition", "2", "--alpha", "1/2", "--format", "json")
    rec = json.loads(out)
    jsonschema.validate(rec, JACK_RECORD_SCHEMA)
    assert rec["coeffs"][0]["v"] == {"num": [[0, 3]], "den": [[0, 2]]}


def test_bad_alpha_is_usage_error(capsys):
    code, _, err = run(capsys, "compute", "--partition", "2", "--alpha", "x/y")
    assert code == 2 and err


def test_rational_record_is_flagged():
    fake = JackResult(Partition((2,)), 2, MultiPoly.zero(2),
                      MExpansion(2, {Partition((2,)): AlphaRational([1], [1, 1])}))
    rec = result_record(fake)
    jsonschema.validate(rec, JACK_RECORD_SCHEMA)
    assert rec["flagged"] is True
    assert rec["coeffs"][0]["v"] == {"num": [[0, 1]], "den": [[0, 1], [1, 1]]}
    assert coeff_from_json(rec["coeffs"][0]["v"]) == AlphaRational([1], [1, 1])


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "4", "--checks", "eigen,oracle")
    assert code == 0
    assert out == "eigen: 12/12 pass, oracle: 12/12 pass\n"
    code, out, _ = run(capsys, "verify", "--max-weight", "2", "--checks", "positivity")
    assert code == 0 and out == "positivity: 4/4 pass\n"


def test_verify_unknown_check(capsys):
    code, out, err = run(capsys, "verify", "--checks", "frobnicate")
    assert code == 2 and out == "" and "frobnicate" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    import jackpoly.verify as v

    monkeypatch.setitem(v._RUNNERS, "eigen", lambda lam: (len(lam) < 2, f"forced failure at {lam}"))
    code, out, _ = run(capsys, "verify", "--max-weight", "2", "--checks", "eigen")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "eigen: 3/4 pass"
    assert lines[1] == "counterexample [eigen] unit=1,1"
    assert lines[2] == "forced failure at 1,1"


def test_verify_parallel_identical(capsys):
    _, out1, _ = run(capsys, "verify", "--max-weight", "3", "--jobs", "1")
    _, out4, _ = run(capsys, "verify", "--max-weight", "3", "--jobs", "4")
    assert out1 == out4


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-weight", "2", "--format", "csv")
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [
        ["lambda", "mu", "v", "tilde_v"],
        ["1", "1", "1", "1"],
        ["2", "2", "1+a", "1+a"],
        ["2", "1,1", "2", "1"],
        ["1,1", "1,1", "2", "1"],
    ]


def test_table_small(capsys):
    _, out, _ = run(capsys, "table", "--max-weight", "1")
    assert out.splitlines() == ["lambda,mu,v,tilde_v", "1,1,1,1"]
    _, out, _ = run(capsys, "table", "--max-weight", "0")
    assert out.splitlines() == ["lambda,mu,v,tilde_v"]


def test_table_json_and_output(tmp_path, capsys):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--max-weight", "3", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    rows = json.loads(path.read_text())
    assert len(rows) == 1 + 3 + 6
    assert rows[0] == {"lambda": [1], "mu": [1], "v": [[0, 1]], "tilde_v": [[0, 1]]}


def test_table_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "table", "--output", str(tmp_path / "missing" / "t.csv"))
    assert code == 2 and "cannot write" in err


def test_deterministic_output(capsys):
    _, a, _ = run(capsys, "table", "--max-weight", "4", "--format", "json")
    _, b, _ = run(capsys, "table", "--max-weight", "4", "--format", "json", "--jobs", "3")
    assert a == b
