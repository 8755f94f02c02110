"""Finite-dimensional Hopf algebras given by structure constants.

Only the tensors are stored; every axiom is a finite conjunction of basis
identities and :func:`verify_hopf_axioms` checks each one exactly.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .field import QQ, Field
from .report import CheckResult, Report, compare
from .tensor import (
    DimensionError,
    ExactArray,
    SingularMatrixError,
    compose,
    einsum,
    invert,
)


@dataclass(frozen=True, eq=False)
class FiniteDimHopfAlgebra:
    """Structure constants of a Hopf algebra on basis ``h_0 .. h_{n-1}``.

    ``mult[i, j, k]``: coefficient of ``h_k`` in ``h_i h_j``;
    ``comult[i, j, k]``: coefficient of ``h_j (x) h_k`` in ``Delta(h_i)``;
    ``antipode[k, i]``: coefficient of ``h_k`` in ``S(h_i)``.
    """

    field: Field
    basis: tuple[str, ...]
    mult: ExactArray
    unit: ExactArray
    comult: ExactArray
    counit: ExactArray
    antipode: ExactArray
    name: str = field(default="H", compare=False)

    def __post_init__(self):
        n = len(self.basis)
        expected = {
            "mult": (n, n, n),
            "unit": (n,),
            "comult": (n, n, n),
            "counit": (n,),
            "antipode": (n, n),
        }
        for attr, shape in expected.items():
            arr = getattr(self, attr)
            if arr.shape != shape:
                raise DimensionError(f"{attr} has shape {arr.shape}, expected {shape}")
            if arr.field != self.field:
                raise DimensionError(f"{attr} is over {arr.field}, algebra over {self.field}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def antipode_inv(self) -> ExactArray:
        return invert(self.antipode)

    @cached_property
    def comult3(self) -> ExactArray:
        """``(Delta (x) id) Delta`` as ``[i, a, b, c]``."""
        return einsum("isc,sab->iabc", self.comult, self.comult)

    @cached_property
    def comult4(self) -> ExactArray:
        return einsum("isd,sabc->iabcd", self.comult, self.comult3)

    @cached_property
    def mult3(self) -> ExactArray:
        """``m(m (x) id)`` as ``[a, b, c, k]``."""
        return einsum("abs,sck->abck", self.mult, self.mult)

    @cached_property
    def fingerprint(self) -> str:
        h = hashlib.sha256(repr(self.field).encode())
        for arr in (self.mult, self.unit, self.comult, self.counit, self.antipode):
            h.update(repr(arr.key()).encode())
        return h.hexdigest()[:16]

    def identity_map(self) -> ExactArray:
        return ExactArray.identity(self.dim, self.field)

    def element(self, coeffs: dict) -> ExactArray:
        """Coordinate vector from ``{basis name or index: scalar}``."""
        v = [self.field.zero()] * self.dim
        for k, c in coeffs.items():
            i = self.basis.index(k) if isinstance(k, str) else k
            v[i] = self.field(c)
        return ExactArray.from_scalars(v, self.field)

    def multiply(self, x: ExactArray, y: ExactArray) -> ExactArray:
        return einsum("ijk,i,j->k", self.mult, x, y)

    def coproduct(self, x: ExactArray) -> ExactArray:
        return einsum("ijk,i->jk", self.comult, x)

    def replace(self, **changes) -> FiniteDimHopfAlgebra:
        data = dict(
            field=self.field,
            basis=self.basis,
            mult=self.mult,
            unit=self.unit,
            comult=self.comult,
            counit=self.counit,
            antipode=self.antipode,
            name=self.name,
        )
        data.update(changes)
        return FiniteDimHopfAlgebra(**data)

    def __repr__(self):
        return f"FiniteDimHopfAlgebra({self.name}, dim={self.dim}, field={self.field})"


def verify_algebra(mult: ExactArray, unit: ExactArray, names=None, where: str = "") -> list[CheckResult]:
    n = unit.shape[0]
    eye = ExactArray.identity(n, unit.field)
    out = [
        compare(
            "associativity",
            where,
            einsum("ijs,skl->ijkl", mult, mult),
            einsum("jks,isl->ijkl", mult, mult),
            3,
            names and [names] * 3,
        ),
        compare("left unit", where, einsum("s,sjk->jk", unit, mult), eye, 1, names and [names]),
        compare("right unit", where, einsum("s,jsk->jk", unit, mult), eye, 1, names and [names]),
    ]
    return out


def verify_coalgebra(comult: ExactArray, counit: ExactArray, names=None, where: str = "") -> list[CheckResult]:
    n = counit.shape[0]
    eye = ExactArray.identity(n, counit.field)
    return [
        compare(
            "coassociativity",
            where,
            einsum("isc,sab->iabc", comult, comult),
            einsum("ias,sbc->iabc", comult, comult),
            1,
            names and [names],
        ),
        compare("left counit", where, einsum("a,iab->ib", counit, comult), eye, 1, names and [names]),
        compare("right counit", where, einsum("b,iab->ia", counit, comult), eye, 1, names and [names]),
    ]


def verify_hopf_axioms(H: FiniteDimHopfAlgebra) -> Report:
    """Check every Hopf algebra axiom; failures carry the first violating basis tuple."""
    names = list(H.basis)
    where = H.name
    rep = Report()
    for r in verify_algebra(H.mult, H.unit, names, where):
        rep.add(r)
    for r in verify_coalgebra(H.comult, H.counit, names, where):
        rep.add(r)
    m, d, u, e, S = H.mult, H.comult, H.unit, H.counit, H.antipode
    rep.add(
        compare(
            "comultiplication is multiplicative",
            where,
            einsum("ijs,sab->ijab", m, d),
            einsum("ipq,jrs,pra,qsb->ijab", d, d, m, m),
            2,
            [names, names],
        )
    )
    rep.add(compare("comultiplication is unital", where, einsum("s,sab->ab", u, d), einsum("a,b->ab", u, u), 0))
    rep.add(
        compare("counit is multiplicative", where, einsum("ijs,s->ij", m, e), einsum("i,j->ij", e, e), 2, [names, names])
    )
    rep.add(compare("counit is unital", where, einsum("s,s->", u, e), ExactArray.from_scalars(1, H.field), 0))
    eta_eps = einsum("i,k->ik", e, u)
    rep.add(
        compare("antipode axiom", where, einsum("iab,ca,cbk->ik", d, S, m), eta_eps, 1, [names])
    )
    rep.add(
        compare("antipode axiom (right)", where, einsum("iab,cb,ack->ik", d, S, m), eta_eps, 1, [names])
    )
    try:
        Sinv = H.antipode_inv
    except SingularMatrixError as exc:
        rep.add(CheckResult("antipode bijective", where, "fail", witness=f"kernel {exc.kernel.format()}"))
    else:
        eye = H.identity_map()
        rep.add(compare("antipode bijective", where, compose(Sinv, S), eye, 0))
        S2 = compose(S, S)
        rep.add(
            CheckResult(
                "antipode squared is identity",
                where,
                "info",
                witness=None if S2 == eye else "S^2 != id",
            )
        )
    return rep


def dual_hopf(H: FiniteDimHopfAlgebra) -> FiniteDimHopfAlgebra:
    """The dual Hopf algebra on the dual basis ``p_i`` (``p_i(h_j) = delta_ij``)."""
    return FiniteDimHopfAlgebra(
        field=H.field,
        basis=tuple(_dual_name(b) for b in H.basis),
        mult=H.comult.transpose(1, 2, 0),
        unit=H.counit,
        comult=H.mult.transpose(2, 0, 1),
        counit=H.unit,
        antipode=H.antipode.T,
        name=f"{H.name}*",
    )


def _dual_name(name: str) -> str:
    if name.startswith("p_"):
        return name[2:]
    return f"p_{name}"


def dual_pairing(H: FiniteDimHopfAlgebra) -> ExactArray:
    """Matrix of ``<h^i, h_j>``; the identity in the dual basis."""
    return H.identity_map()


def opposite_algebra(H: FiniteDimHopfAlgebra) -> FiniteDimHopfAlgebra:
    """Same coalgebra, multiplication reversed; antipode becomes ``S^{-1}``."""
    return H.replace(mult=H.mult.transpose(1, 0, 2), antipode=H.antipode_inv, name=f"{H.name}^op")


def is_hopf_automorphism(H: FiniteDimHopfAlgebra, f: ExactArray) -> tuple[bool, Report]:
    if f.shape != (H.dim, H.dim):
        raise DimensionError(f"automorphism has shape {f.shape}, algebra has dim {H.dim}")
    names = list(H.basis)
    where = H.name
    rep = Report()
    try:
        invert(f)
    except SingularMatrixError as exc:
        rep.add(CheckResult("invertible", where, "fail", witness=f"kernel {exc.kernel.format()}"))
        return False, rep
    rep.add(CheckResult("invertible", where, "pass"))
    m, d = H.mult, H.comult
    rep.add(
        compare(
            "multiplicative",
            where,
            einsum("ijs,ks->ijk", m, f),
            einsum("ai,bj,abk->ijk", f, f, m),
            2,
            [names, names],
        )
    )
    rep.add(compare("unital", where, f @ H.unit, H.unit, 0))
    rep.add(
        compare(
            "comultiplicative",
            where,
            einsum("si,sab->iab", f, d),
            einsum("ipq,ap,bq->iab", d, f, f),
            1,
            [names],
        )
    )
    rep.add(compare("counital", where, einsum("s,si->i", H.counit, f), H.counit, 0))
    rep.add(compare("commutes with antipode", where, compose(f, H.antipode), compose(H.antipode, f), 1, [names]))
    return rep.ok, rep


class GPairError(ValueError):
    pass


class GPair:
    """An element ``(alpha, beta)`` of ``Aut_Hopf(H) x Aut_Hopf(H)``.

    The group law is ``(a, b) * (g, d) = (d a d^-1 g, d b)``.
    """

    __slots__ = ("H", "alpha", "beta", "_inv_cache", "name")

    def __init__(self, H: FiniteDimHopfAlgebra, alpha: ExactArray, beta: ExactArray, verify: bool = True, name=None):
        if verify:
            for label, f in (("alpha", alpha), ("beta", beta)):
                ok, rep = is_hopf_automorphism(H, f)
                if not ok:
                    bad = rep.first_failure()
                    raise GPairError(f"{label} is not a Hopf automorphism: {bad.axiom} ({bad.witness})")
        self.H = H
        self.alpha = alpha
        self.beta = beta
        self._inv_cache = None
        self.name = name

    @property
    def alpha_inv(self) -> ExactArray:
        return self._inverses()[0]

    @property
    def beta_inv(self) -> ExactArray:
        return self._inverses()[1]

    def _inverses(self):
        if self._inv_cache is None:
            self._inv_cache = (invert(self.alpha), invert(self.beta))
        return self._inv_cache

    def key(self) -> tuple:
        return (self.H.fingerprint, self.alpha.key(), self.beta.key())

    def __eq__(self, other):
        if not isinstance(other, GPair):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other: GPair) -> GPair:
        return g_mul(self, other)

    def is_unit(self) -> bool:
        eye = self.H.identity_map()
        return self.alpha == eye and self.beta == eye

    def __repr__(self):
        if self.name:
            return f"GPair({self.name})"
        return f"GPair(alpha={self.alpha.format()}, beta={self.beta.format()})"


def _same_algebra(p: GPair, q: GPair):
    if p.H is not q.H and p.H.fingerprint != q.H.fingerprint:
        raise GPairError("automorphism pairs of different Hopf algebras")


def _compose_names(*names):
    if any(n is None for n in names):
        return None
    return "*".join(names)


def g_mul(p: GPair, q: GPair) -> GPair:
    _same_algebra(p, q)
    a, b = p.alpha, p.beta
    g, d = q.alpha, q.beta
    return GPair(p.H, compose(d, a, q.beta_inv, g), compose(d, b), verify=False)


def g_inv(p: GPair) -> GPair:
    return GPair(p.H, compose(p.beta_inv, p.alpha_inv, p.beta), p.beta_inv, verify=False)


def g_unit(H: FiniteDimHopfAlgebra) -> GPair:
    eye = H.identity_map()
    return GPair(H, eye, eye, verify=False, name="(id,id)")


def g_conj(g: GPair, x: GPair) -> GPair:
    """``g * x * g^-1``."""
    return g_mul(g_mul(g, x), g_inv(g))


def close_pairs(generators: Sequence[GPair], cap: int = 64) -> tuple[list[GPair], bool]:
    """Close a generator set under ``g_mul``/``g_inv``; returns (pairs, truncated)."""
    if not generators:
        return [], False
    H = generators[0].H
    seen: dict[tuple, GPair] = {}
    order: list[GPair] = []

    def push(x):
        k = x.key()
        if k not in seen:
            seen[k] = x
            order.append(x)
            return True
        return False

    push(g_unit(H))
    for g in generators:
        push(g)
        push(g_inv(g))
    frontier = list(order)
    while frontier:
        new = []
        for x in frontier:
            for g in list(order):
                for y in (g_mul(x, g), g_mul(g, x)):
                    if y.key() in seen:
                        continue
                    if len(order) >= cap:
                        return order, True
                    push(y)
                    new.append(y)
        frontier = new
    return order, False
