import json
import subprocess
import sys

import pytest

from initalg.cli import EXIT_FAIL, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main, parse_order
from initalg.construction import FIXTURE_DIR
from initalg.laurent import LaurentPoly

RS = str(FIXTURE_DIR / "rs.json")
QUAD = str(FIXTURE_DIR / "quadratic.json")
HANOI = str(FIXTURE_DIR / "hanoi.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", RS)
    assert code == EXIT_OK
    assert json.loads(out)["valid"] is True


def test_validate_constant_term(tmp_path, capsys):
    data = json.loads(open(RS).read())
    x = LaurentPoly.variable(1, 0)
    data["source_gens"] = [(x + 1).to_json()]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "validate", "--spec", str(path))
    assert code == EXIT_INVALID
    assert "(A1)" in err


def test_validate_malformed_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run(capsys, "validate", str(path))[0] == EXIT_USAGE
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == EXIT_USAGE


def test_usage_errors(capsys):
    assert run(capsys, "example", "nosuch")[0] == EXIT_USAGE
    assert run(capsys, "analyze", "degrees")[0] == EXIT_USAGE
    assert run(capsys, "analyze", "degrees", "--spec", RS, "--order", "bogus")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_example_rs(capsys):
    code, out, _ = run(capsys, "example", "rs", "--order", "lex12", "--max-grade", "8", "--format", "text")
    assert code == EXIT_OK
    assert "PASS rs: minimal generator count" in out and "8 minimal generators" in out


def test_example_rs_other_lex(capsys):
    code, _, _ = run(capsys, "example", "rs", "--order", "lex21", "--max-grade", "5")
    assert code == EXIT_OK


def test_scenario_fail_is_exit_3(capsys):
    # lambda = 3 and mu = 2 both favour the y-block, so the fingerprints coincide
    code, out, _ = run(capsys, "example", "doubled", "--lambda", "3", "--mu", "2", "--max-grade", "4")
    assert code == EXIT_FAIL
    assert json.loads(out)["result"] == "FAIL"


def test_example_hanoi_and_doubled(capsys):
    code, out, _ = run(capsys, "example", "hanoi", "--max-grade", "9")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["checks"][0]["detail"].startswith("2 classes")
    code, out, _ = run(capsys, "example", "doubled", "--lambda", "2", "--mu", "1/2", "--max-grade", "4")
    assert code == EXIT_OK
    assert all(ch["anchor"] for ch in json.loads(out)["checks"])


def test_example_quadratic(capsys):
    code, out, _ = run(capsys, "example", "quadratic", "--format", "text")
    assert code == EXIT_OK
    assert "complete-consistent" in out


def test_analyze_examples(capsys):
    code, out, _ = run(capsys, "analyze", "degrees", "--spec", RS, "--order", "lex12", "--max-grade", "4")
    rep = json.loads(out)["report"]
    assert code == EXIT_OK
    assert [tuple(a) for a in rep["monoid_min_gens"]] == [(1, 0), (1, 1), (1, 2), (1, 3)]
    code, out, _ = run(capsys, "analyze", "completeness", "--spec", RS, "--order", "lex12", "--max-grade", "6")
    assert json.loads(out)["report"]["verdict"] == "incomplete-witnessed"
    code, out, _ = run(capsys, "analyze", "hypothesis", "--spec", QUAD, "--order", "weight:-2,-3")
    assert [v["verdict"] for v in json.loads(out)["report"]["verdicts"]] == ["fails", "fails"]


@pytest.mark.parametrize("which", ["mingens", "mu", "complement"])
def test_analyze_other_reports(capsys, which):
    code, out, _ = run(capsys, "analyze", which, "--spec", RS, "--order", "lex21", "--max-grade", "5")
    assert code == EXIT_OK
    assert json.loads(out)["analysis"] == which


def test_analyze_fingerprints(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", "fingerprints", "--spec", HANOI, "--orders", "lex12;lex21;grlex", "--max-grade", "9")
    assert code == EXIT_OK
    assert json.loads(out)["report"]["count"] == 2
    orders = tmp_path / "orders.json"
    orders.write_text(json.dumps([parse_order("lex12", 2).to_json(), parse_order("lex21", 2).to_json()]))
    code, out, _ = run(capsys, "analyze", "fingerprints", "--spec", HANOI, "--orders", str(orders), "--max-grade", "9")
    assert json.loads(out)["report"]["count"] == 2


def test_order_file_selector(tmp_path, capsys):
    path = tmp_path / "o.json"
    path.write_text(json.dumps(parse_order("weight:-2,-3", 2).to_json()))
    code, out, _ = run(capsys, "analyze", "hypothesis", "--spec", QUAD, "--order", str(path))
    assert code == EXIT_OK
    assert parse_order("doubled:1/2", 4).dim == 4


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        main(["analyze", "mu", "--spec", RS, "--order", "lex21", "--max-grade", "5", "--out", str(path)])
    capsys.readouterr()
    # the manifest records the output path, so compare with the path normalised
    ta, tb = a.read_text(), b.read_text().replace(str(b), str(a))
    assert ta == tb
    manifest = json.loads(ta)["manifest"]
    assert manifest["parameters"]["max_grade"] == "5"
    assert manifest["tool_version"]


def test_stdout_byte_identical(capsys):
    outs = [run(capsys, "example", "hanoi", "--seed", "4")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "initalg", "validate", RS, "--format", "text"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("# validate")
