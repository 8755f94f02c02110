"""Command-line front end.

Exit codes: 0 all checks pass, 1 an identity is violated (first witness
printed), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coproduct import Coalgebra, diagonal_crossed_coproduct, drinfeld_codouble, h_alpha_beta, verify_coalgebra_axioms
from .field import FieldError
from .groups import GroupError, builtin_group, enumerate_automorphisms, group_algebra, sweedler_fixture
from .hopf import GPair, GPairError, g_unit, verify_hopf_axioms
from .report import Report
from .serialization import (
    FormatError,
    automorphism_from_json,
    automorphism_to_json,
    coalgebra_from_json,
    coalgebra_to_json,
    dumps,
    hopf_from_json,
    hopf_to_json,
    load_group,
    read_json,
    write_json,
    yd_from_json,
)
from .suites import (
    Fixture,
    canonical_modules,
    closed_fixture,
    group_fixture,
    suite_braiding,
    suite_correspondence,
    suite_oracle,
    suite_rigidity,
    suite_yd,
    sweedler_fixture_set,
)
from .tensor import DimensionError
from .turaev import TuraevFamily, verify_turaev_axioms
from .yd import LabelError

MALFORMED = (FormatError, FieldError, GroupError, GPairError, DimensionError, LabelError)


class UsageError(ValueError):
    pass


# -- loading -----------------------------------------------------------------------

def _group(text: str):
    if Path(text).is_file():
        return load_group(read_json(text))
    return builtin_group(text)


def _fixture(args) -> Fixture:
    """The algebra and pair set named by ``--group`` or ``--hopf`` plus ``--aut``/``--pairs``."""
    if args.group and args.hopf:
        raise UsageError("give either --group or --hopf, not both")
    if args.group:
        fx = group_fixture(_group(args.group))
        if args.aut:
            raise UsageError("--aut applies to --hopf inputs; group pair sets come from --pairs")
    elif args.hopf:
        if args.hopf == "sweedler":
            fx = sweedler_fixture_set() if not args.aut else Fixture(sweedler_fixture(), [])
        else:
            fx = Fixture(hopf_from_json(read_json(args.hopf)), [])
        if args.aut:
            auts = [automorphism_from_json(read_json(p), fx.H) for p in args.aut]
            gens = [GPair(fx.H, a, b, name=f"(f{i},f{j})") for i, a in enumerate(auts) for j, b in enumerate(auts)]
            fx = closed_fixture(fx.H, gens)
        elif not fx.pairs:
            fx.pairs = [g_unit(fx.H)]
    else:
        raise UsageError("an input algebra is required (--group NAME|FILE or --hopf FILE|sweedler)")
    fx.pairs = _select(fx.pairs, args.pairs)
    return fx


def _select(pairs: list[GPair], text: str) -> list[GPair]:
    """``all`` or pair names / indices separated by spaces or semicolons."""
    if text in (None, "all"):
        return pairs
    chosen = []
    by_name = {g.name: g for g in pairs}
    for tok in text.replace(";", " ").split():
        if tok in by_name:
            chosen.append(by_name[tok])
        elif tok.isdigit() and int(tok) < len(pairs):
            chosen.append(pairs[int(tok)])
        else:
            raise UsageError(f"unknown pair {tok!r}; known: {', '.join(g.name for g in pairs)}")
    return chosen


def _modules(args, fx: Fixture):
    if not args.module:
        return canonical_modules(fx.H, fx.pairs)
    return [yd_from_json(read_json(p), fx.H) for p in args.module]


def _one_pair(fx: Fixture, text: str | None) -> GPair:
    if text is None:
        return fx.pairs[0] if len(fx.pairs) == 1 else g_unit(fx.H)
    (g,) = _select(fx.pairs, text) or [None]
    if g is None:
        raise UsageError(f"--label {text!r} selects nothing")
    return g


# -- output --------------------------------------------------------------------------

def _emit(rep: Report, args) -> int:
    text = rep.to_jsonl() if args.format == "json-lines" else _human(rep)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    bad = rep.first_failure()
    if bad is not None:
        where = bad.witness or "identity violated"
        sys.stderr.write(f"FAIL: {bad.axiom} at {where} ({bad.location})\n")
        return 1
    return 0


def _human(rep: Report) -> str:
    lines = []
    if rep.header:
        lines.append("# " + json.dumps(rep.header, sort_keys=True))
    lines.extend(e.line() for e in rep)
    nfail = len(rep.failures())
    lines.append(f"{len(rep)} checks, {nfail} failed")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------------------

def cmd_verify_hopf(args) -> int:
    obj = read_json(args.path)
    if "comult" in obj and "mult" not in obj:
        return _emit(verify_coalgebra_axioms(coalgebra_from_json(obj)), args)
    H = hopf_from_json(obj)
    return _emit(verify_hopf_axioms(H), args)


def cmd_build(args) -> int:
    fx = _fixture(args)
    if args.kind == "codouble":
        C: Coalgebra = drinfeld_codouble(fx.H)
    else:
        g = _one_pair(fx, args.label)
        C = diagonal_crossed_coproduct(fx.H, h_alpha_beta(fx.H, g))
        if args.kind == "ct-component":
            C = TuraevFamily(fx.H).component(g).coalgebra
    rep = verify_coalgebra_axioms(C)
    if not rep.ok:
        return _emit(rep, args)
    text = dumps(coalgebra_to_json(C))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args) -> int:
    fx = _fixture(args)
    kind = args.kind
    if kind == "oracle":
        if fx.group is None:
            raise UsageError("check oracle needs --group")
        return _emit(suite_oracle(fx.group), args)
    if kind in ("turaev", "tct"):
        rep = verify_turaev_axioms(
            TuraevFamily(fx.H),
            fx.pairs,
            sample=args.sample,
            seed=args.seed,
            jobs=args.jobs,
            truncated=fx.truncated,
            solve_sigma=kind == "turaev",
        )
        if kind == "tct":
            keep = Report(header=rep.header)
            for e in rep:
                if e.axiom.startswith(("TCT", "sigma", "pair set")):
                    keep.add(e)
            rep = keep
        return _emit(rep, args)
    mods = _modules(args, fx)
    if kind == "yd":
        rep = suite_yd(fx, mods, args.sample, args.seed)
    elif kind == "braiding":
        rep = suite_braiding(fx, mods, args.sample, args.seed)
    elif kind == "rigidity":
        rep = suite_rigidity(fx, mods)
    else:
        rep = suite_correspondence(fx, mods)
    return _emit(rep, args)


def cmd_oracle_group(args) -> int:
    G = _group(args.name)
    H = group_algebra(G)
    out = Path(args.output or ".")
    out.mkdir(parents=True, exist_ok=True)
    write_json(out / "hopf.json", hopf_to_json(H))
    auts = enumerate_automorphisms(G)
    for i, a in enumerate(auts):
        write_json(out / f"aut{i}.json", automorphism_to_json(a.matrix(H.field)))
    write_json(out / "group.json", {"name": G.name, **G.to_json()})
    sys.stdout.write(f"{G.name}: order {G.order}, {len(auts)} automorphisms written to {out}\n")
    return 0


# -- parser ----------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--group", help="built-in group (Z2, Z3, Z4, Z2xZ2, S3) or group table JSON")
    p.add_argument("--hopf", help="Hopf algebra JSON, or 'sweedler'")
    p.add_argument("--aut", action="append", help="automorphism JSON (repeatable); pairs are closed under the group law")
    p.add_argument("--pairs", default="all", help="'all', or pair names or indices separated by spaces or semicolons")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfcross", description="Exact checks for crossed coproducts, YD modules and CT(H).")
    sub = ap.add_subparsers(dest="command", required=True)

    def out_opts(p):
        p.add_argument("--format", choices=("human", "json-lines"), default="human")
        p.add_argument("--report", help="write the report here instead of stdout")

    p = sub.add_parser("verify-hopf", help="check a Hopf algebra (or coalgebra) JSON file")
    p.add_argument("path")
    out_opts(p)
    p.set_defaults(func=cmd_verify_hopf)

    p = sub.add_parser("build", help="construct a coalgebra and write it as JSON")
    p.add_argument("kind", choices=("codouble", "crossed-coproduct", "ct-component"))
    _common(p)
    p.add_argument("--label", help="pair name or index for crossed-coproduct / ct-component")
    p.add_argument("-o", "--output")
    out_opts(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("kind", choices=("yd", "braiding", "rigidity", "correspondence", "turaev", "tct", "oracle"))
    _common(p)
    p.add_argument("--module", action="append", help="YD module JSON (repeatable); default: canonical modules")
    p.add_argument("--sample", type=int, help="visit at most N tuples per sweep (seeded)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    out_opts(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle-group", help="write a group algebra and its automorphisms as JSON")
    p.add_argument("name", help="built-in group name or group table JSON")
    p.add_argument("-o", "--output", help="output directory")
    p.set_defaults(func=cmd_oracle_group)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if getattr(args, "sample", None) is not None and args.sample < 1:
            raise UsageError("--sample must be positive")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except MALFORMED as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
