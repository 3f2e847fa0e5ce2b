import json
import subprocess
import sys

import pytest

from sigcayley.cayley import family, validate_spec
from sigcayley.cli import main
from sigcayley.harness import AnalysisDocument, analyze, claims_for, verify


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_dot(capsys):
    code, out, _ = run(capsys, "build", "--p", "2", "--n", "6", "--format", "dot")
    assert code == 0
    assert out.count("style=solid") == 4 and out.count("style=dashed") == 8


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--p", "3", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["spec"] == {"p": 3, "n": 3} and doc["phi_size"] == 4
    assert len(doc["vertices"]) == 9 and len(doc["edges"]) == 18
    assert {e["sign"] for e in doc["edges"]} == {"+", "-"}


def test_build_invalid_prime(capsys):
    code, _, err = run(capsys, "build", "--p", "4", "--n", "8")
    assert code == 2 and "p must be prime" in err


def test_build_to_file(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "build", "--p", "2", "--n", "2", "--format", "dot", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("graph")


@pytest.mark.parametrize(
    "p, n, balanced, clusterable",
    [(3, 3, False, False), (2, 6, True, True), (2, 2, True, True)],
)
def test_analyze(capsys, p, n, balanced, clusterable):
    code, out, _ = run(capsys, "analyze", "--p", str(p), "--n", str(n))
    a = json.loads(out)["analysis"]
    assert code == 0
    assert a["balance"]["balanced"] is balanced
    assert a["clusters"]["clusterable"] is clusterable
    assert a["compat"]["compatible"] is True


def test_analyze_2_2_components(capsys):
    _, out, _ = run(capsys, "analyze", "--p", "2", "--n", "2")
    assert json.loads(out)["analysis"]["components"] == [2, 2]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "3", "--n", "3", "--format", "text")
    assert code == 0 and "balanced        False" in out


def test_verify_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--n", "3", "--format", "json")
    rows = {r["claim"]: r for r in json.loads(out)}
    assert code == 0
    assert rows["LEM33"]["predicted"] == 4 and rows["LEM33"]["observed"] == 4
    assert rows["LEM33"]["status"] == "AGREE"
    assert rows["THM37"]["predicted"] is False and rows["THM37"]["status"] == "AGREE"
    assert rows["PROP31_ODD"]["predicted"] == [16, 2]
    assert rows["PROP31_ODD"]["observed"] == [14, 4]
    assert rows["PROP31_ODD"]["status"] == "DISAGREE"


def test_verify_claim_filter(capsys):
    code, out, _ = run(capsys, "verify", "--sweep-max", "20", "--claims", "thm37,LEM33",
                       "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert {r["claim"] for r in rows} == {"THM37", "LEM33"}


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--claims", "NOPE")
    assert code == 2 and "NOPE" in err


def test_verify_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "--sweep-max", "30")
    assert code == 0
    assert "THM39" in out and "DISAGREE" in out


@pytest.mark.parametrize("n, lam, runs", [(15, 2, 2), (35, 2, 2), (7, 0, 0)])
def test_lambda(capsys, n, lam, runs):
    code, out, _ = run(capsys, "lambda", "--n", str(n), "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["lambda"] == lam and len(rep["run_starts"]) == runs


def test_lambda_rejects_small(capsys):
    code, _, err = run(capsys, "lambda", "--n", "1")
    assert code == 2


def test_cycles_gate_exit_code(capsys):
    code, _, err = run(capsys, "cycles", "--p", "3", "--n", "6")
    assert code == 3 and "gate" in err
    code, out, _ = run(capsys, "cycles", "--p", "2", "--n", "6")
    assert code == 0 and out.startswith("2 simple cycles")


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "sigcayley", "lambda", "--n", "15"],
        capture_output=True, text=True, check=True,
    )
    assert "lambda = 2" in out.stdout


@pytest.mark.parametrize("spec", family(120), ids=lambda s: f"{s.p}x{s.n}")
def test_json_round_trip(spec, doc_for):
    doc = doc_for(spec.p, spec.n)
    text = doc.to_json()
    back = AnalysisDocument.from_json(text)
    assert back == doc
    assert back.to_json() == text


def test_verify_uses_analyze_values(doc_for):
    spec = validate_spec(3, 15)
    doc = doc_for(3, 15)
    rows = {r.claim_id: r for r in verify([spec])}
    assert rows["LEM36"].observed == doc.counts.negative
    assert rows["THM37"].observed == doc.balance.balanced
    assert rows["THM39"].observed == doc.line_balanced
    assert rows["THM311"].observed == doc.clusters.clusterable
    assert rows["SIGNCOMPAT"].observed == doc.compat.compatible
    assert [r.to_dict() for r in claims_for(doc)] == [r.to_dict() for r in rows.values()]
