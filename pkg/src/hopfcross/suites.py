"""Verification pipelines shared by the CLI, the demos and the acceptance tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .coproduct import diagonal_crossed_coproduct, h_alpha_beta, verify_coalgebra_axioms
from .groups import (
    FiniteGroup,
    GroupOracle,
    automorphism_pairs,
    builtin_group,
    degree_of,
    enumerate_automorphisms,
    gpair_perms,
    group_algebra,
    sweedler_fixture,
    sweedler_scaling,
)
from .hopf import FiniteDimHopfAlgebra, GPair, close_pairs, g_conj, g_inv, g_mul, g_unit
from .report import CheckResult, Report, compare
from .tensor import ExactArray
from .turaev import TuraevFamily, verify_correspondence_shadow
from .yd import (
    YDModule,
    braiding,
    canonical_yd,
    conjugate_yd,
    from_comodule,
    left_dual,
    right_dual,
    tensor_yd,
    to_comodule,
    trivial_yd,
    verify_associativity,
    verify_braiding,
    verify_comodule_axioms,
    verify_conjugation_laws,
    verify_hexagons,
    verify_rigidity,
    verify_yd,
)


@dataclass
class Fixture:
    """A Hopf algebra with a set of automorphism pairs (and its group, if any)."""

    H: FiniteDimHopfAlgebra
    pairs: list[GPair]
    group: FiniteGroup | None = None
    truncated: bool = False


def group_fixture(G: FiniteGroup | str) -> Fixture:
    if isinstance(G, str):
        G = builtin_group(G)
    H = group_algebra(G)
    return Fixture(H, automorphism_pairs(H, enumerate_automorphisms(G)), G)


def sweedler_pairs(H: FiniteDimHopfAlgebra, scalars: Sequence = (1, -1)) -> list[GPair]:
    """All pairs of scaling automorphisms ``x -> lam x`` for the given scalars."""
    auts = [sweedler_scaling(lam, H.field) for lam in scalars]
    return [GPair(H, a, b, name=f"(p{scalars[i]},p{scalars[j]})") for i, a in enumerate(auts) for j, b in enumerate(auts)]


def sweedler_fixture_set() -> Fixture:
    H = sweedler_fixture()
    return Fixture(H, sweedler_pairs(H))


def closed_fixture(H: FiniteDimHopfAlgebra, generators: Sequence[GPair], cap: int = 64) -> Fixture:
    pairs, truncated = close_pairs(list(generators) or [g_unit(H)], cap)
    for i, g in enumerate(pairs):
        if g.name is None:
            g.name = f"g{i}"
    return Fixture(H, pairs, None, truncated)


def canonical_modules(H: FiniteDimHopfAlgebra, pairs: Sequence[GPair]) -> list[YDModule]:
    mods = [canonical_yd(H, g, name=f"H{g.name or i}") for i, g in enumerate(pairs)]
    return mods + [trivial_yd(H)]


def pick(items: list, sample: int | None, seed: int, label: str, header: dict) -> list:
    """Seeded sub-sampling, recorded in the report header."""
    total = len(items)
    cov = header.setdefault("coverage", {})
    if sample is None or sample >= total:
        cov[label] = f"{total}/{total}"
        return items
    rng = random.Random(f"{seed}:{label}")
    idx = sorted(rng.sample(range(total), sample))
    cov[label] = f"{len(idx)}/{total}"
    return [items[i] for i in idx]


def _header(fx: Fixture, kind: str, sample, seed) -> dict:
    return {
        "check": kind,
        "algebra": fx.H.name,
        "pairs": len(fx.pairs),
        "mode": "exhaustive" if sample is None else "sampled",
        "seed": seed if sample is not None else None,
        "truncated": fx.truncated,
    }


def _label_check(axiom: str, where: str, M: YDModule, expected: GPair) -> CheckResult:
    ok = M.label == expected
    return CheckResult(axiom, where, "pass" if ok else "fail", None if ok else "label differs from the stated one")


# -- suites ------------------------------------------------------------------------

def suite_coproduct(fx: Fixture) -> Report:
    """Coassociativity and counitality of every crossed coproduct in the pair set."""
    rep = Report(header=_header(fx, "crossed-coproduct", None, 0))
    for g in fx.pairs:
        C = diagonal_crossed_coproduct(fx.H, h_alpha_beta(fx.H, g))
        for r in verify_coalgebra_axioms(C):
            r.location = f"{g.name}: {r.location}"
            rep.add(r)
    return rep


def suite_yd(fx: Fixture, mods: list[YDModule] | None = None, sample: int | None = None, seed: int = 0) -> Report:
    """Canonical modules, their tensor products and conjugates are YD modules with the stated labels."""
    rep = Report(header=_header(fx, "yd", sample, seed))
    mods = mods if mods is not None else canonical_modules(fx.H, fx.pairs)
    for M in mods:
        rep.extend(verify_yd(M))
    for M, N in pick(list(itertools.product(mods, repeat=2)), sample, seed, "module pairs", rep.header):
        T = tensor_yd(M, N)
        rep.extend(verify_yd(T))
        rep.add(_label_check("tensor label", f"({M.name},{N.name})", T, g_mul(M.label, N.label)))
    for g, N in pick(list(itertools.product(fx.pairs, mods)), sample, seed, "conjugates", rep.header):
        C = conjugate_yd(g, N)
        rep.extend(verify_yd(C))
        rep.add(_label_check("conjugate label", f"{g.name} on {N.name}", C, g_conj(g, N.label)))
    quads = list(itertools.product(fx.pairs, fx.pairs, mods, mods))
    for g, h, M, N in pick(quads, sample, seed, "conjugation laws", rep.header):
        rep.extend(verify_conjugation_laws(g, h, M, N))
    return rep


def suite_braiding(fx: Fixture, mods: list[YDModule] | None = None, sample: int | None = None, seed: int = 0) -> Report:
    """Braidings are invertible YD morphisms, conjugation invariant, and satisfy both hexagons."""
    rep = Report(header=_header(fx, "braiding", sample, seed))
    mods = mods if mods is not None else canonical_modules(fx.H, fx.pairs)
    for M, N in pick(list(itertools.product(mods, repeat=2)), sample, seed, "module pairs", rep.header):
        rep.extend(verify_braiding(M, N, fx.pairs))
    for U, V, W in pick(list(itertools.product(mods, repeat=3)), sample, seed, "module triples", rep.header):
        rep.extend(verify_hexagons(U, V, W))
        rep.add(verify_associativity(U, V, W))
    return rep


def suite_rigidity(fx: Fixture, mods: list[YDModule] | None = None) -> Report:
    """Left and right duals are YD modules and satisfy both zigzag identities."""
    rep = Report(header=_header(fx, "rigidity", None, 0))
    mods = mods if mods is not None else canonical_modules(fx.H, fx.pairs)
    for M in mods:
        for side, D in (("left", left_dual(M)), ("right", right_dual(M))):
            rep.extend(verify_yd(D))
            rep.add(_label_check(f"{side} dual label", M.name, D, g_inv(M.label)))
            rep.extend(verify_rigidity(M, D, side))
    return rep


def suite_correspondence(fx: Fixture, mods: list[YDModule] | None = None, fam: TuraevFamily | None = None) -> Report:
    """YD modules and comodules over the crossed coproduct correspond, objects and structure alike."""
    rep = Report(header=_header(fx, "correspondence", None, 0))
    mods = mods if mods is not None else canonical_modules(fx.H, fx.pairs)
    fam = fam or TuraevFamily(fx.H)
    fam.register(fx.pairs)
    for M in mods:
        X = to_comodule(M, fam.component(M.label).coalgebra)
        rep.extend(verify_comodule_axioms(X))
        back = from_comodule(X, fx.H, M.label, M.name)
        rep.add(compare("round trip (action)", M.name, back.action, M.action, 2, [list(fx.H.basis), M.basis]))
        rep.add(compare("round trip (coaction)", M.name, back.coaction, M.coaction, 1, [M.basis]))
    rep.extend(verify_correspondence_shadow(fam, mods, fx.pairs))
    return rep


def suite_oracle(G: FiniteGroup) -> Report:
    """Generic CT(k(G)) operations against the closed Kronecker-delta formulas."""
    fx = group_fixture(G)
    H, pairs = fx.H, fx.pairs
    fam = TuraevFamily(H)
    fam.register(pairs)
    O = GroupOracle(fx.group)
    perms = {g.key(): gpair_perms(fx.group, g) for g in pairs}
    rep = Report(header=_header(fx, "oracle", None, 0))
    names = [fam.basis()] * 3
    rep.add(compare("unit", "CT", fam.unit_vector(), O.unit_vector(H.field), 0))
    for x in pairs:
        X = perms[x.key()]
        rep.add(compare("comultiplication", x.name, fam.component(x).coalgebra.comult, O.comult_tensor(*X, field=H.field), 1, names))
        rep.add(compare("antipode", x.name, fam.antipode_matrix(x).T, O.antipode_matrix(X, H.field).T, 1, names))
        for y in pairs:
            Y = perms[y.key()]
            where = f"{x.name}x{y.name}"
            rep.add(compare("multiplication", where, fam.mult_tensor(x, y), O.mult_tensor(X, Y, H.field), 2, names))
            rep.add(compare("crossing", where, fam.crossing_matrix(x, y).T, O.crossing_matrix(X, Y, H.field).T, 1, names))
            rep.add(compare("sigma", where, fam.sigma_matrix(x, y), O.sigma_matrix(X, Y, H.field), 2, names))
    return rep


def suite_gradings(fx: Fixture, mods: list[YDModule] | None = None) -> Report:
    """Grading laws for YD modules over k(G), evaluated on the standard basis of each module.

    The tensor, conjugate and braiding laws are the closed forms; the dual law
    is the one the generic left dual realizes (degree ``beta^-1 alpha^-1 (a^-1)``).
    """
    G = fx.group
    if G is None:
        raise ValueError("grading laws need a group algebra fixture")
    H = fx.H
    mods = mods if mods is not None else canonical_modules(H, fx.pairs)
    rep = Report(header=_header(fx, "gradings", None, 0))
    inv = GroupOracle.inv
    comp = GroupOracle.comp

    def degrees(M: YDModule) -> list[int | None]:
        return [degree_of(M.coaction, ExactArray.basis_vector(M.dim, i, H.field), G) for i in range(M.dim)]

    def law(axiom, where, got, want):
        ok = got == want
        rep.add(CheckResult(axiom, where, "pass" if ok else "fail", None if ok else f"degree {got} != {want}"))

    deg = {id(M): degrees(M) for M in mods}
    for M in mods:
        a_, b_ = gpair_perms(G, M.label)
        dM = deg[id(M)]
        rep.add(CheckResult("standard basis is homogeneous", M.name, "pass" if None not in dM else "fail"))
        dD = degrees(left_dual(M))
        for i, a in enumerate(dM):
            law("dual grading", f"{M.name}[{i}]", dD[i], inv(b_)[inv(a_)[G.inv(a)]])
    for M, N in itertools.product(mods, repeat=2):
        a_, b_ = gpair_perms(G, M.label)
        g_, d_ = gpair_perms(G, N.label)
        dM, dN = deg[id(M)], deg[id(N)]
        dT = degrees(tensor_yd(M, N))
        K = comp(d_, a_, inv(d_))
        for i, j in itertools.product(range(M.dim), range(N.dim)):
            law("tensor grading", f"{M.name}[{i}]x{N.name}[{j}]", dT[i * N.dim + j], G.mul(d_[dM[i]], K[dN[j]]))
        # the conjugate of N by M's label, and where the braiding sends n
        dC = degrees(conjugate_yd(M.label, N))
        pull = comp(d_, inv(a_), inv(d_), b_)
        for j in range(N.dim):
            law("conjugate grading", f"{M.name} on {N.name}[{j}]", dN[j], pull[dC[j]])
        c = braiding(M, N)
        for i, j in itertools.product(range(M.dim), range(N.dim)):
            hits = c[:, i * N.dim + j].nonzero()
            a, b = dM[i], dN[j]
            target = G.prod(d_[inv(a_)[a]], b, g_[inv(a_)[G.inv(a)]])
            # the image a^-1(a).n (x) m is a single basis tensor for permutation modules
            got = dN[hits[0][0] // M.dim] if len(hits) == 1 else None
            law("braiding grading", f"{M.name}[{i}]x{N.name}[{j}]", got, target)
    return rep


def dump_report(rep: Report, path: str | Path, fmt: str = "json-lines") -> None:
    Path(path).write_text(rep.to_jsonl() if fmt == "json-lines" else rep.to_text(), encoding="utf-8")
