import json
import subprocess
import sys

import jsonschema
import pytest

from degseq import graphcore as gc
from degseq.cli import CLI_SCHEMAS, main
from degseq.verify import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, CLI_SCHEMAS[schema])
    return doc


def test_graphic(capsys):
    assert run(capsys, "graphic", "3 3 2 2")[:2] == (0, "yes\n")
    assert run(capsys, "graphic", "3 3 1 1", "--method", "recursive")[:2] == (0, "no\n")
    doc = run_json(capsys, "graphic", "graphic", "3,3,2,2")
    assert doc == {"sequence": [3, 3, 2, 2], "graphic": True}


def test_bad_sequence_names_token(capsys):
    code, _, err = run(capsys, "graphic", "3 x 2")
    assert code == 1
    assert "'x'" in err
    assert err.count("\n") == 1


def test_layoff(capsys):
    assert run(capsys, "layoff", "4 4 3 3 2 2", "--k", "3")[:2] == (0, "3 3 2 2 2\n")
    assert run_json(capsys, "layoff", "layoff", "2 2 2 2", "--k", "4")["residual"] == [2, 1, 1]
    assert run(capsys, "layoff", "2 2 2", "--k", "5")[0] == 1


def test_potential(capsys):
    assert run(capsys, "potential", "3 3 2 2", "--target", "Z4")[:2] == (0, "yes\n")
    assert run(capsys, "potential", "3 2 2 1", "--target", "C4")[:2] == (0, "no\n")
    doc = run_json(capsys, "potential", "potential", "9 9 4 4 3 3 3 3 3 3", "--target", "K5-Z4")
    assert doc["potentially"] is True
    g = gc.SimpleGraph(doc["witness"]["order"], [tuple(e) for e in doc["witness"]["edges"]])
    assert g.degrees == (9, 9, 4, 4, 3, 3, 3, 3, 3, 3)


def test_potential_witness_text_parses_back(capsys):
    code, out, _ = run(capsys, "potential", "3 3 2 2", "--target", "Z4", "--witness")
    assert code == 0
    first, rest = out.split("\n", 1)
    assert first == "yes"
    assert "map " in rest
    g = gc.parse_graph(rest)
    assert g.degrees == (3, 3, 2, 2)


def test_unknown_target_and_non_graphic(capsys):
    code, _, err = run(capsys, "potential", "2 2 2 2", "--target", "K5-Q4")
    assert code == 1 and "Q4" in err
    assert run(capsys, "potential", "3 3 1 1", "--target", "K3")[0] == 1


def test_potential_timeout_exit_code(capsys):
    code, _, err = run(capsys, "potential", " ".join(["3"] * 10), "--target", "K4", "--node-cap", "3")
    assert code == 2
    assert err.startswith("timeout")


def test_sufficient(capsys):
    code, out, _ = run(capsys, "sufficient", "9 9 4 4 3 3 3 3 3 3", "--r", "4")
    assert code == 0
    assert "L3.3 applicable → K5-Z4" in out.splitlines()
    doc = run_json(capsys, "sufficient", "sufficient", "4 4 4 4 4 4 4 4 4 4", "--r", "4", "--t", "2")
    assert [v["guaranteed"] for v in doc["verdicts"]] == ["K5-K1_2"]
    assert doc["verdicts"][0]["applicable"]


@pytest.mark.parametrize(
    "argv, line",
    [
        (["--which", "T1.1", "--r", "4", "--n", "36"], "110 even-branch T1.1 in-range"),
        (["--which", "T1.2", "--r", "4", "--n", "9"], "26 odd-branch T1.2 out-of-range"),
        (["--which", "T2.8", "--p", "4", "--t", "2", "--n", "10"], "46"),
        (["--which", "L3.6", "--r", "5", "--n", "12"], "56"),
        (["--which", "known", "--family", "C4", "--n", "4"], "10"),
    ],
)
def test_sigma_formula(capsys, argv, line):
    code, out, _ = run(capsys, "sigma", "formula", *argv)
    assert code == 0
    assert out.strip().startswith(line)


def test_sigma_formula_missing_args(capsys):
    code, _, err = run(capsys, "sigma", "formula", "--which", "T1.1", "--r", "4")
    assert code == 1 and "--n" in err


def test_sigma_brute(capsys):
    code, out, _ = run(capsys, "sigma", "brute", "--target", "C4", "--n", "4")
    assert code == 0
    assert out.strip() == "10 oracle C4 n=4 witness 3 2 2 1"
    doc = run_json(capsys, "sigma", "sigma", "brute", "--target", "K3", "--n", "6", "--no-zeros")
    assert doc["value"] == 12


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--r", "4", "--n", "9")
    assert code == 0
    g = gc.parse_graph(out)
    assert gc.edge_count(g) == 12
    assert "9 12" in out.splitlines()
    doc = run_json(capsys, "construct", "construct", "--r", "5", "--n", "10")
    assert doc["order"] == 10


def test_realize_all(capsys):
    doc = run_json(capsys, "realize", "realize", "3 3 3 3 3 3", "--all")
    assert len(doc["graphs"]) == 2


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["graphic"])
    assert exc.value.code == 1


def test_verify_writes_reports(tmp_path, capsys):
    js, txt = tmp_path / "r.json", tmp_path / "r.txt"
    code, out, _ = run(capsys, "verify", "--suite", "c4", "--json", str(js), "--text", str(txt))
    assert code == 0
    assert "4 cells, 0 violations, 0 timeouts" in out
    jsonschema.validate(json.loads(js.read_text()), REPORT_SCHEMA)
    assert "cell: formula_eq:C4:n=4" in txt.read_text()


def test_verify_timeout_exit_code(capsys):
    assert run(capsys, "verify", "--suite", "c4", "--node-cap", "5")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "degseq", "graphic", "2 2 2 2 2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "yes\n"
