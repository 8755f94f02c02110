from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from hopfcross.cli import main
from hopfcross.groups import builtin_group, group_algebra
from hopfcross.serialization import hopf_to_json, read_json, write_json
from hopfcross.tensor import ExactArray

SCHEMA = {"axiom", "location", "status", "witness", "lhs", "rhs"}


@pytest.fixture
def corrupted(tmp_path):
    H = group_algebra(builtin_group("Z4"))
    path = tmp_path / "corrupted.json"
    write_json(path, hopf_to_json(H.replace(antipode=ExactArray.identity(4))))
    return path


def _lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_verify_hopf_passes_on_a_good_file(tmp_path, capsys):
    path = tmp_path / "kz3.json"
    write_json(path, hopf_to_json(group_algebra(builtin_group("Z3"))))
    assert main(["verify-hopf", str(path)]) == 0
    assert capsys.readouterr().out.rstrip().endswith("0 failed")


def test_verify_hopf_reports_the_antipode_witness(corrupted, capsys):
    assert main(["verify-hopf", str(corrupted)]) == 1
    assert "antipode axiom at basis 'g'" in capsys.readouterr().err


def test_json_lines_schema(corrupted, capsys):
    assert main(["verify-hopf", str(corrupted), "--format", "json-lines"]) == 1
    rows = _lines(capsys.readouterr().out)
    entries = [r for r in rows if "header" not in r]
    assert entries
    for r in entries:
        assert {"axiom", "location", "status"} <= set(r) <= SCHEMA
        assert r["status"] in {"pass", "fail", "info"}
    bad = next(r for r in entries if r["status"] == "fail")
    assert bad["axiom"] == "antipode axiom" and bad["witness"] == "basis 'g'"
    assert bad["lhs"] != bad["rhs"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-hopf", "{missing}"],
        ["verify-hopf", "{badjson}"],
        ["check", "yd", "--group", "Z7"],
        ["check", "turaev", "--group", "Z3", "--pairs", "nosuchpair"],
        ["check", "turaev", "--group", "Z3", "--sample", "0"],
        ["check", "nosuchsuite", "--group", "Z3"],
        ["build", "codouble"],
    ],
)
def test_malformed_input_exits_2(argv, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    argv = [a.format(missing=tmp_path / "missing.json", badjson=bad) for a in argv]
    assert main(argv) == 2


def test_build_codouble_reloads(tmp_path, capsys):
    out = tmp_path / "out.json"
    assert main(["build", "codouble", "--group", "Z3", "-o", str(out)]) == 0
    obj = read_json(out)
    assert obj["dim"] == 9 and "mult" not in obj
    assert main(["verify-hopf", str(out)]) == 0


def test_build_crossed_coproduct_and_component(tmp_path, capsys):
    for kind in ("crossed-coproduct", "ct-component"):
        out = tmp_path / f"{kind}.json"
        assert main(["build", kind, "--group", "S3", "--label", "7", "-o", str(out)]) == 0
        assert read_json(out)["dim"] == 36
        assert main(["verify-hopf", str(out)]) == 0


def test_oracle_group_files_feed_check(tmp_path, capsys):
    d = tmp_path / "z3"
    assert main(["oracle-group", "Z3", "-o", str(d)]) == 0
    argv = ["check", "yd", "--hopf", str(d / "hopf.json")]
    for f in sorted(d.glob("aut*.json")):
        argv += ["--aut", str(f)]
    assert main(argv) == 0
    assert main(["check", "oracle", "--group", str(d / "group.json")]) == 0
    assert main(["check", "yd", "--hopf", str(d / "hopf.json"), "--group", "Z3"]) == 2


@pytest.mark.parametrize("kind", ["yd", "braiding", "rigidity", "correspondence", "turaev", "tct", "oracle"])
def test_every_check_passes_on_z3(kind, capsys):
    assert main(["check", kind, "--group", "Z3", "--pairs", "all"]) == 0
    assert capsys.readouterr().out.rstrip().endswith(" 0 failed")


def test_tct_report_only_lists_tct_axioms(capsys):
    assert main(["check", "tct", "--group", "Z3", "--format", "json-lines"]) == 0
    rows = [r for r in _lines(capsys.readouterr().out) if "header" not in r]
    assert rows and all(r["axiom"].startswith(("TCT", "sigma", "pair set")) for r in rows)


def test_sweedler_rigidity(capsys):
    assert main(["check", "rigidity", "--hopf", "sweedler"]) == 0


def test_sampled_report_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / f"r{i}.jl" for i in range(3)]
    base = ["check", "turaev", "--group", "S3", "--sample", "30", "--seed", "5", "--format", "json-lines"]
    assert main(base + ["--report", str(paths[0])]) == 0
    assert main(base + ["--report", str(paths[1])]) == 0
    assert main(base + ["--report", str(paths[2]), "--jobs", "2"]) == 0
    first = paths[0].read_bytes()
    assert first == paths[1].read_bytes() == paths[2].read_bytes()
    header = json.loads(first.splitlines()[0])["header"]
    assert header["seed"] == 5 and header["mode"] == "sampled"


def test_pairs_subset_by_index(capsys):
    # {(id, id), (id, inv)} is a subgroup; {(id, inv), (inv, id)} is not
    assert main(["check", "turaev", "--group", "Z3", "--pairs", "0;1"]) == 0
    capsys.readouterr()
    assert main(["check", "turaev", "--group", "Z3", "--pairs", "1;2", "--format", "json-lines"]) == 1
    assert "pair set closed" in capsys.readouterr().err


def test_module_entry_point(corrupted):
    proc = subprocess.run(
        [sys.executable, "-m", "hopfcross", "verify-hopf", str(corrupted)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stderr.startswith("FAIL: antipode axiom at basis 'g'")


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("HOPFCROSS_SLOW"), reason="exhaustive S3 sweep takes ~15 min; set HOPFCROSS_SLOW=1")
def test_exhaustive_s3_turaev(capsys):
    assert main(["check", "turaev", "--group", "S3", "--pairs", "all"]) == 0
