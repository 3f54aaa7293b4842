import io
import json

import pytest

from selforth.basis_lab import Basis
from selforth.cli import emit_report, run
from selforth.criteria import image_selforth
from selforth.ff_core import default_tower
from selforth.forms import canonical
from selforth.codes import ScalableCode
from selforth.quantum import search_table

COUNTEREXAMPLE = {
    "field": {"q": 2, "m": 2},
    "code": {"kind": "scalable", "reps": [["a^0", "a^1", "a^2"]]},
    "basis": ["a^0", "a^1"],
    "form": {"variant": "canonical"},
}

CYCLIC7 = {
    "field": {"q": 4, "m": 3},
    "code": {"kind": "cyclic", "n": 7, "nonzeros": [1, 2, 3]},
    "basis": ["a^0", "a^3", "a^15"],
    "form": {"variant": "hermitian", "k": 0, "l": 1},
}


def _job(tmp_path, doc, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def _run(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def _records(path):
    return [json.loads(line) for line in open(path)]


def test_check_image_counterexample(tmp_path):
    rec = str(tmp_path / "r.jsonl")
    code, out = _run(["check-image", "-i", _job(tmp_path, COUNTEREXAMPLE), "--records", rec, "--assert"])
    assert code == 0
    assert "image self-orthogonal: TRUE" in out
    recs = _records(rec)
    assert all(r["schema"] == "selforth/1" for r in recs)
    assert [r["check"] for r in recs if r["type"] == "evidence"] == ["ok", "skipped"]
    assert recs[-1]["type"] == "shortcut"


def test_check_trace_assert_exit(tmp_path):
    job = _job(tmp_path, COUNTEREXAMPLE)
    assert _run(["check-trace", "-i", job])[0] == 0
    code, out = _run(["check-trace", "-i", job, "--assert"])
    assert code == 1 and "FALSE" in out


def test_check_image_dual_flag(tmp_path):
    code, out = _run(["check-image", "-i", _job(tmp_path, CYCLIC7), "--dual", "--assert"])
    assert code == 0
    lines = [line.split() for line in out.splitlines()[1:4]]
    assert [(row[0], row[-1]) for row in lines] == [("1", "skipped"), ("3", "ok"), ("5", "skipped")]


def test_table_form_and_explicit_field(tmp_path):
    doc = {
        "field": {"p": 3, "r": 1, "m": 2, "inner_modulus": [0, 1], "outer_modulus": [2, 2, 1]},
        "code": {"kind": "linear", "gens": [["a^0", "a^7", "a^6"]]},
        "basis": ["a^5", "a^6"],
        "form": {"variant": "table", "n": 3, "entries": [[1, 1, 0, 1, "a^4"], [2, 0, 0, 0, "a^7"]]},
    }
    code, out = _run(["check-image", "-i", _job(tmp_path, doc), "--dual", "--assert"])
    assert code == 1 and "FALSE" in out


def test_quantum_search_rows(tmp_path):
    rec = str(tmp_path / "q.jsonl")
    code, out = _run(["quantum-search", "--m", "3", "--n0", "7", "--records", rec])
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:]]
    assert [(r[0], r[1], r[2], r[-1]) for r in rows] == [
        ("21", "15", "2", "All"),
        ("21", "9", "3", "All"),
        ("21", "3", "4", "B'1"),
    ]
    assert [r["basis"] for r in _records(rec)] == ["All", "All", "B'1"]


def test_quantum_search_deterministic():
    a = _run(["quantum-search", "--m", "3", "--n0", "63"])
    b = _run(["quantum-search", "--m", "3", "--n0", "63"])
    assert a == b


def test_quantum_search_basis_file(tmp_path):
    pool = _job(tmp_path, [{"label": "Bx", "dual": ["a^0", "a^1", "a^5"]}], "pool.json")
    code, out = _run(["quantum-search", "--m", "3", "--n0", "63", "--basis-file", pool])
    assert code == 0 and out.splitlines()[-1].split()[-1] == "Bx"


def test_quantum_search_empty_pool_header_only(tmp_path):
    pool = _job(tmp_path, [], "pool.json")
    code, out = _run(["quantum-search", "--m", "3", "--n0", "7", "--basis-file", pool])
    assert code == 0 and out.splitlines()[-1].split()[-1] == "All"
    text, recs = emit_report([])
    assert text.count("\n") == 0 and recs == []


def test_quantum_check():
    code, out = _run(["quantum-check", "--m", "3", "--n0", "7", "--S", "1,2,3", "--basis", "a^0,a^3,a^15", "--assert"])
    assert code == 0 and "[[21, 3, 4]]" in out
    code, out = _run(["quantum-check", "--m", "3", "--n0", "7", "--S", "1,2,3", "--assert"])
    assert code == 1


def test_verify_oracle():
    code, out = _run(["verify-oracle", "--seed", "7", "--instances", "200"])
    assert code == 0 and out.startswith("200/200 agree")


def test_field_info_and_basis_commands(tmp_path):
    code, out = _run(["field-info", "--q", "4", "--m", "3"])
    assert code == 0 and "outer_modulus: [2, 0, 0, 1]" in out
    job = _job(tmp_path, COUNTEREXAMPLE)
    code, out = _run(["basis-dual", "-i", job])
    assert code == 0 and out.splitlines()[1].split() == ["0", "a^0", "a^2"]
    code, out = _run(["basis-powersums", "-i", job])
    assert code == 0 and out.splitlines()[-1].split() == ["1", "3", "0", "yes"]
    code, out = _run(["basis-enum", "--q", "3", "--m", "2", "--ordered"])
    assert out.startswith("48 ordered bases")


def test_check_all_bases(tmp_path):
    code, out = _run(["check-all-bases", "-i", _job(tmp_path, COUNTEREXAMPLE), "--assert"])
    assert code == 0 and "q=m=2 exception" in out


def test_cyclic_info(tmp_path):
    rec = str(tmp_path / "c.jsonl")
    code, out = _run(["cyclic-info", "-i", _job(tmp_path, CYCLIC7), "--records", rec])
    assert code == 0
    (r,) = _records(rec)
    assert r["trace_nonzeros"] == [1, 2, 3, 4, 5, 6] and r["dual_bch_bound"] == 4


@pytest.mark.parametrize(
    "doc",
    [
        {"field": {"q": 6, "m": 2}, "code": {"kind": "linear", "gens": [["a^0"]]}},
        {"field": {"q": 4, "m": 2}, "code": {"kind": "bogus"}},
        {"field": {"q": 4, "m": 2}, "code": {"kind": "linear", "gens": [["x^2"]]}},
        {"field": {"q": 4, "m": 2}, "code": {"kind": "linear", "gens": [["0"]]}, "basis": ["a^0", "a^0"]},
        {"field": {"q": 4}, "code": {"kind": "linear", "gens": [["a^1"]]}},
    ],
)
def test_invalid_input_exit_2(tmp_path, doc):
    assert _run(["check-image", "-i", _job(tmp_path, doc)])[0] == 2


def test_usage_errors_exit_2(tmp_path):
    assert _run(["check-image"])[0] == 2
    assert _run(["no-such-command"])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert _run(["check-trace", "-i", str(bad)])[0] == 2
    assert _run(["check-trace", "-i", str(tmp_path / "missing.json")])[0] == 2


def test_size_guard_reported(capsys):
    code, _ = _run(["basis-enum", "--q", "4", "--m", "3", "--limit", "10"])
    assert code == 2
    assert "guard" in capsys.readouterr().err


def test_emit_report_verdict_rows():
    t = default_tower(4, 3)
    c = ScalableCode(t, [(1, 2, 3)])
    v = image_selforth(c, Basis.of(t, ["a^0", "a^3", "a^15"]), canonical())
    text, recs = emit_report(v, t)
    assert len(text.splitlines()) == 1 + len(v.evidence) + 1
    assert len([r for r in recs if r["type"] == "evidence"]) == 3


def test_printed_elements_reparse(tmp_path):
    rec = str(tmp_path / "d.jsonl")
    _run(["basis-dual", "-i", _job(tmp_path, CYCLIC7), "--records", rec])
    (r,) = _records(rec)
    t = default_tower(4, 3)
    dual = Basis.of(t, r["dual"])
    assert Basis.of(t, r["basis"]) == Basis.of(t, CYCLIC7["basis"])
    assert [t.format(x) for x in dual.elems] == r["dual"]
