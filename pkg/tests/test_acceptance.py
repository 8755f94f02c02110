"""Acceptance criteria 1-10, one pass/fail line per criterion.

Every check is an exact equality of structure-constant tensors; nothing here
uses a tolerance.  Run with ``pytest tests/test_acceptance.py -v`` (add ``-s``
or read the terminal summary for the printed lines).
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from hopfcross.coproduct import (
    diagonal_crossed_coproduct,
    drinfeld_codouble,
    h_alpha_beta,
    regular_bimodule,
    trivial_bimodule,
    verify_bimodule_coalgebra,
    verify_codouble_actions,
    verify_coalgebra_axioms,
)
from hopfcross.groups import builtin_group, group_algebra, sweedler_fixture
from hopfcross.hopf import verify_hopf_axioms
from hopfcross.report import Report
from hopfcross.serialization import hopf_to_json, write_json
from hopfcross.suites import (
    Fixture,
    canonical_modules,
    group_fixture,
    suite_braiding,
    suite_oracle,
    suite_rigidity,
    suite_yd,
    sweedler_fixture_set,
    sweedler_pairs,
)
from hopfcross.tensor import ExactArray
from hopfcross.turaev import TuraevFamily, verify_correspondence_shadow, verify_turaev_axioms
from hopfcross.yd import from_comodule, to_comodule, verify_comodule_axioms

GROUPS = ["Z2", "Z3", "Z4", "Z2xZ2", "S3"]
S3_SUBSET_SEED = 4
S3_TCT_SAMPLE, S3_TCT_SEED = 9332, 7  # 9332 / 46656 triples = 20.002 %

RESULTS: dict[int, str] = {}


def _line(n: int, ok: bool, detail: str) -> str:
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.fixture
def verdict(capsys):
    def record(n: int, ok: bool, detail: str) -> None:
        text = _line(n, ok, detail)
        RESULTS[n] = text
        with capsys.disabled():
            print("\n" + text)

    return record


def _failures(*reports: Report) -> str:
    for rep in reports:
        bad = rep.first_failure()
        if bad is not None:
            return f"first failure: {bad.line()}"
    return ""


def _corrupt_antipode(H):
    """Send the second basis vector to the first one under S."""
    S = H.antipode.scalars()
    for row in range(H.dim):
        S[row][1] = H.field.one() if row == 0 else H.field.zero()
    return H.replace(antipode=ExactArray.from_scalars(S, H.field), name=f"{H.name}~")


def test_criterion_01_hopf_gate(verdict):
    algebras = [group_algebra(builtin_group(n)) for n in GROUPS] + [sweedler_fixture()]
    t0 = time.perf_counter()
    good = [verify_hopf_axioms(H) for H in algebras]
    bad = [verify_hopf_axioms(_corrupt_antipode(H)) for H in algebras]
    elapsed = time.perf_counter() - t0
    witnesses = [r.first_failure() for r in bad]
    ok = all(r.ok for r in good) and all(w is not None and w.witness for w in witnesses) and elapsed < 1.0
    detail = f"{len(algebras)} Hopf algebras pass, {len(bad)} corrupted fail with witnesses, {elapsed:.2f}s"
    verdict(1, ok, detail + ("" if ok else " " + _failures(*good)))
    assert ok


def test_criterion_02_crossed_coproducts(verdict):
    counts, reports = {}, []
    elapsed = {}
    for name in ("Z3", "S3"):
        fx = group_fixture(name)
        t0 = time.perf_counter()
        for g in fx.pairs:
            reports.append(verify_coalgebra_axioms(diagonal_crossed_coproduct(fx.H, h_alpha_beta(fx.H, g))))
        elapsed[name] = time.perf_counter() - t0
        counts[name] = len(fx.pairs)
    H = sweedler_fixture()
    lams = (1, -1, 2, Fraction(1, 2))
    sw = sweedler_pairs(H, lams)
    for g in sw:
        reports.append(verify_coalgebra_axioms(diagonal_crossed_coproduct(H, h_alpha_beta(H, g))))
    ok = counts == {"Z3": 4, "S3": 36} and all(r.ok for r in reports) and elapsed["S3"] < 60
    detail = f"Z3 {counts['Z3']} pairs, S3 {counts['S3']} pairs ({elapsed['S3']:.1f}s), Sweedler {len(sw)} scaling pairs"
    verdict(2, ok, detail + ("" if ok else " " + _failures(*reports)))
    assert ok


def test_criterion_03_codouble(verdict):
    reports = []
    for name in ("Z2", "Z3"):
        H = group_algebra(builtin_group(name))
        fx = group_fixture(name)
        reports.append(verify_coalgebra_axioms(drinfeld_codouble(H)))
        coalgebras = [regular_bimodule(H), trivial_bimodule(H)] + [h_alpha_beta(H, g) for g in fx.pairs]
        for C in coalgebras:
            reports.append(verify_bimodule_coalgebra(H, C))
            reports.append(verify_codouble_actions(H, C))
    n = sum(len(r) for r in reports)
    ok = all(r.ok for r in reports)
    verdict(3, ok, f"codouble of k(Z2), k(Z3): {n} exhaustive checks" + ("" if ok else " " + _failures(*reports)))
    assert ok


def test_criterion_04_yd_tensor_conjugate_braiding(verdict):
    z3 = group_fixture("Z3")
    s3 = group_fixture("S3")
    subset = random.Random(S3_SUBSET_SEED).sample(s3.pairs, 6)
    s3sub = Fixture(s3.H, subset, s3.group)
    reports = []
    for fx in (z3, s3sub):
        t0 = time.perf_counter()
        mods = canonical_modules(fx.H, fx.pairs)
        reports += [suite_yd(fx, mods), suite_braiding(fx, mods)]
        elapsed = time.perf_counter() - t0
    n = sum(len(r) for r in reports)
    ok = all(r.ok for r in reports) and elapsed < 300
    names = " ".join(g.name for g in subset)
    detail = f"Z3 all pairs + S3 subset [{names}]: {n} checks, S3 {elapsed:.0f}s"
    verdict(4, ok, detail + ("" if ok else " " + _failures(*reports)))
    assert ok


def test_criterion_05_duals(verdict):
    reports = [suite_rigidity(group_fixture("Z3")), suite_rigidity(sweedler_fixture_set())]
    n = sum(len(r) for r in reports)
    ok = all(r.ok for r in reports)
    verdict(5, ok, f"left/right duals and zigzags on k(Z3), Sweedler: {n} checks" + ("" if ok else " " + _failures(*reports)))
    assert ok


def test_criterion_06_comodule_correspondence(verdict):
    checked, bad = 0, []
    for fx in (group_fixture("Z3"), sweedler_fixture_set(), group_fixture("S3")):
        for M in canonical_modules(fx.H, fx.pairs):
            X = to_comodule(M)
            target = diagonal_crossed_coproduct(fx.H, h_alpha_beta(fx.H, M.label))
            rep = verify_comodule_axioms(X)
            back = from_comodule(X, fx.H, M.label, M.name)
            same = back.action == M.action and back.coaction == M.coaction
            matching = X.coalgebra.comult == target.comult and X.coalgebra.counit == target.counit
            checked += 1
            if not (rep.ok and same and matching):
                bad.append(M.name)
    ok = not bad
    verdict(6, ok, f"round trip is the identity on {checked} modules" + ("" if ok else f"; failing: {bad}"))
    assert ok


def test_criterion_07_turaev_axioms(verdict):
    z3 = group_fixture("Z3")
    t0 = time.perf_counter()
    rz3 = verify_turaev_axioms(TuraevFamily(z3.H), z3.pairs)
    tz3 = time.perf_counter() - t0
    s3 = group_fixture("S3")
    rs3 = verify_turaev_axioms(TuraevFamily(s3.H), s3.pairs, sample=S3_TCT_SAMPLE, seed=S3_TCT_SEED)
    done, total = map(int, rs3.header["coverage"]["triples"].split("/"))
    axioms = {e.axiom for e in rz3}
    required = {
        "G-algebra associativity",
        "multiplication is comultiplicative",
        "multiplication is counital",
        "antipode law (S * id)",
        "antipode law (id * S)",
        "crossing (i) multiplicative",
        "crossing (ii) compatible with m",
        "crossing (iii) fixes the unit",
        "crossing (iv) preserves the antipode",
        "sigma convolution inverse (left)",
        "sigma convolution inverse (right)",
        "TCT1",
        "TCT2",
        "TCT3",
        "TCT4",
        "unit component is a coquasitriangular Hopf algebra",
    }
    ok = (
        rz3.ok
        and rs3.ok
        and rz3.header["mode"] == "exhaustive"
        and tz3 < 30
        and rs3.header["seed"] == S3_TCT_SEED
        and 5 * done >= total
        and required <= axioms
    )
    detail = (
        f"Z3 exhaustive {len(rz3)} checks ({tz3:.1f}s); "
        f"S3 {len(rs3)} checks, triples {done}/{total} = {100 * done / total:.2f}% seed {S3_TCT_SEED}"
    )
    missing = required - axioms
    verdict(7, ok, detail + ("" if ok else f" missing={sorted(missing)} " + _failures(rz3, rs3)))
    assert ok


def test_criterion_08_oracle(verdict):
    reports = [suite_oracle(builtin_group(n)) for n in ("Z2", "Z3", "Z4", "S3")]
    n = sum(len(r) for r in reports)
    ok = all(r.ok for r in reports)
    verdict(8, ok, f"generic CT operations equal the closed forms on Z2, Z3, Z4, S3: {n} tensors" + ("" if ok else " " + _failures(*reports)))
    assert ok


def test_criterion_09_sigma_braiding(verdict):
    fx = group_fixture("Z3")
    mods = canonical_modules(fx.H, fx.pairs)
    rep = verify_correspondence_shadow(TuraevFamily(fx.H), mods, fx.pairs)
    pairs = rep.get("braiding equals the sigma braiding")
    ok = rep.ok and len(pairs) == len(mods) ** 2
    verdict(9, ok, f"YD braiding = sigma braiding on {len(pairs)} k(Z3) module pairs" + ("" if ok else " " + _failures(rep)))
    assert ok


RUN = [
    ["check", "yd", "--group", "Z3"],
    ["check", "braiding", "--group", "Z3"],
    ["check", "rigidity", "--hopf", "sweedler"],
    ["check", "correspondence", "--group", "Z3"],
    ["check", "turaev", "--group", "Z3"],
    ["check", "turaev", "--hopf", "sweedler"],
    ["check", "oracle", "--group", "S3"],
    ["check", "turaev", "--group", "S3", "--sample", "600", "--seed", str(S3_TCT_SEED)],
    ["verify-hopf", "{corrupted}"],
]


def _full_run(out_dir, corrupted, hash_seed: str, jobs: str) -> dict[str, bytes]:
    out_dir.mkdir()
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    blobs = {}
    for i, argv in enumerate(RUN):
        argv = [a.format(corrupted=corrupted) for a in argv]
        path = out_dir / f"{i:02d}.jl"
        extra = ["--jobs", jobs] if argv[0] == "check" and "turaev" in argv else []
        cmd = [sys.executable, "-m", "hopfcross", *argv, *extra, "--format", "json-lines", "--report", str(path)]
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        expected = 1 if argv[0] == "verify-hopf" else 0
        assert proc.returncode == expected, (argv, proc.stderr)
        blobs[path.name] = path.read_bytes()
    return blobs


def test_criterion_10_determinism(verdict, tmp_path):
    H = group_algebra(builtin_group("Z4"))
    corrupted = tmp_path / "corrupted.json"
    write_json(corrupted, hopf_to_json(H.replace(antipode=ExactArray.identity(4))))
    first = _full_run(tmp_path / "a", corrupted, "1", "1")
    second = _full_run(tmp_path / "b", corrupted, "2", "2")
    differing = [k for k in first if first[k] != second[k]]
    size = sum(len(v) for v in first.values())
    ok = not differing and len(first) == len(RUN)
    verdict(10, ok, f"{len(RUN)} reports ({size} bytes) byte-identical across two runs" + ("" if ok else f"; differ: {differing}"))
    assert ok


def test_summary(capsys):
    # repeats the lines of the criteria that ran in this session, in order
    with capsys.disabled():
        print()
        for n in sorted(RESULTS):
            print(RESULTS[n])
    assert all("PASS" in RESULTS[n] for n in RESULTS)
