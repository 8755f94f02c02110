"""Bimodule coalgebras, diagonal crossed coproducts and the Drinfel'd codouble.

The crossed coproduct lives on ``H* (x) C`` with basis ``p_a |><| c_b`` at
index ``a * dim(C) + b`` (dual-basis index major).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .field import Field
from .hopf import FiniteDimHopfAlgebra, GPair, verify_algebra, verify_coalgebra
from .report import CheckResult, Report, compare, merge
from .tensor import DimensionError, ExactArray, einsum


@dataclass(frozen=True, eq=False)
class Coalgebra:
    field: Field
    basis: tuple[str, ...]
    comult: ExactArray
    counit: ExactArray
    name: str = "C"
    factors: tuple[int, ...] | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.basis)
        if self.comult.shape != (n, n, n) or self.counit.shape != (n,):
            raise DimensionError(f"coalgebra {self.name}: tensor shapes do not match dim {n}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def same_structure(self, other: Coalgebra) -> bool:
        return self.comult == other.comult and self.counit == other.counit

    def __repr__(self):
        return f"Coalgebra({self.name}, dim={self.dim})"


def verify_coalgebra_axioms(C: Coalgebra) -> Report:
    rep = Report()
    for r in verify_coalgebra(C.comult, C.counit, list(C.basis), C.name):
        rep.add(r)
    return rep


@dataclass(frozen=True, eq=False)
class BimoduleCoalgebra:
    """A coalgebra with commuting left/right ``H``-actions.

    ``left_action[h, c, c']`` is the coefficient of ``c'`` in ``h . c``;
    ``right_action[c, h, c']`` the coefficient of ``c'`` in ``c . h``.
    """

    H: FiniteDimHopfAlgebra
    basis: tuple[str, ...]
    comult: ExactArray
    counit: ExactArray
    left_action: ExactArray
    right_action: ExactArray
    name: str = "C"

    def __post_init__(self):
        n, m = self.H.dim, len(self.basis)
        shapes = {
            "comult": (m, m, m),
            "counit": (m,),
            "left_action": (n, m, m),
            "right_action": (m, n, m),
        }
        for attr, shape in shapes.items():
            if getattr(self, attr).shape != shape:
                raise DimensionError(f"{attr} has shape {getattr(self, attr).shape}, expected {shape}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> Field:
        return self.H.field

    def coalgebra(self) -> Coalgebra:
        return Coalgebra(self.field, self.basis, self.comult, self.counit, self.name)


def regular_bimodule(H: FiniteDimHopfAlgebra) -> BimoduleCoalgebra:
    """``C = H`` acted on by multiplication from both sides."""
    return BimoduleCoalgebra(H, H.basis, H.comult, H.counit, H.mult, H.mult, name=H.name)


def trivial_bimodule(H: FiniteDimHopfAlgebra) -> BimoduleCoalgebra:
    """The one-dimensional bimodule coalgebra ``k`` with ``h . 1 = eps(h) = 1 . h``."""
    F = H.field
    one = ExactArray.from_scalars([[[1]]], F)
    act = H.counit.reshape(H.dim, 1, 1)
    return BimoduleCoalgebra(
        H,
        ("1",),
        one,
        ExactArray.from_scalars([1], F),
        act,
        act.transpose(1, 0, 2),
        name="k",
    )


def h_alpha_beta(H: FiniteDimHopfAlgebra, g: GPair) -> BimoduleCoalgebra:
    """``H(alpha, beta)``: the coalgebra ``H`` with ``h . c = beta(h) c`` and ``c . h = c alpha(h)``."""
    left = einsum("th,tck->hck", g.beta, H.mult)
    right = einsum("th,ctk->chk", g.alpha, H.mult)
    return BimoduleCoalgebra(H, H.basis, H.comult, H.counit, left, right, name=f"{H.name}{_label(g)}")


def _label(g: GPair) -> str:
    return g.name if g.name else "(alpha,beta)"


def verify_bimodule_coalgebra(H: FiniteDimHopfAlgebra, C: BimoduleCoalgebra) -> Report:
    rep = Report()
    where = C.name
    hn = list(H.basis)
    cn = list(C.basis)
    L, R, dC, eC = C.left_action, C.right_action, C.comult, C.counit
    m, d, u, e = H.mult, H.comult, H.unit, H.counit
    eye = ExactArray.identity(C.dim, H.field)
    for r in verify_coalgebra(dC, eC, cn, where):
        rep.add(r)
    rep.add(
        compare(
            "left module associativity",
            where,
            einsum("jcs,isk->ijck", L, L),
            einsum("ijs,sck->ijck", m, L),
            3,
            [hn, hn, cn],
        )
    )
    rep.add(compare("left module unit", where, einsum("s,sck->ck", u, L), eye, 1, [cn]))
    rep.add(
        compare(
            "right module associativity",
            where,
            einsum("cis,sjk->cijk", R, R),
            einsum("ijs,csk->cijk", m, R),
            3,
            [cn, hn, hn],
        )
    )
    rep.add(compare("right module unit", where, einsum("s,csk->ck", u, R), eye, 1, [cn]))
    rep.add(
        compare(
            "bimodule compatibility",
            where,
            einsum("ics,sjk->icjk", L, R),
            einsum("cjs,isk->icjk", R, L),
            3,
            [hn, cn, hn],
        )
    )
    rep.add(
        compare(
            "left action is comultiplicative",
            where,
            einsum("ics,sab->icab", L, dC),
            einsum("ipq,crs,pra,qsb->icab", d, dC, L, L),
            2,
            [hn, cn],
        )
    )
    rep.add(
        compare(
            "left action is counital",
            where,
            einsum("ics,s->ic", L, eC),
            einsum("i,c->ic", e, eC),
            2,
            [hn, cn],
        )
    )
    rep.add(
        compare(
            "right action is comultiplicative",
            where,
            einsum("cis,sab->ciab", R, dC),
            einsum("ipq,crs,rpa,sqb->ciab", d, dC, R, R),
            2,
            [cn, hn],
        )
    )
    rep.add(
        compare(
            "right action is counital",
            where,
            einsum("cis,s->ci", R, eC),
            einsum("c,i->ci", eC, e),
            2,
            [cn, hn],
        )
    )
    return rep


def crossed_basis(H: FiniteDimHopfAlgebra, cbasis) -> tuple[str, ...]:
    return tuple(f"p_{a}|{c}" for a in H.basis for c in cbasis)


def conjugation_tensor(H: FiniteDimHopfAlgebra, C: BimoduleCoalgebra) -> ExactArray:
    """``T[i, j, c, c']``: coefficient of ``c'`` in ``h_j . c . S^-1(h_i)``."""
    return einsum("jct,tsk,si->ijck", C.left_action, C.right_action, H.antipode_inv)


def diagonal_crossed_coproduct(H: FiniteDimHopfAlgebra, C: BimoduleCoalgebra) -> Coalgebra:
    """``H^{*op} |><| C`` with

    ``Delta(p |><| c) = sum_{i,j} p_1 |><| h_j . c_1 . S^-1(h_i) (x) h^i p_2 h^j |><| c_2``,
    where ``h^i p_2 h^j`` is the convolution product in the written order,
    and ``eps(p |><| c) = p(1) eps(c)``.
    """
    n, nc = H.dim, C.dim
    T = conjugation_tensor(H, C)
    # h^i p_2 h^j evaluated on h_z: d3[z, i, y, j] with p_2 = h^y and Delta(h^a) = m[x, y, a]
    B = einsum("xya,ziyj->axzij", H.mult, H.comult3)
    D = einsum("axzij,ijck,bcl->abxkzl", B, T, C.comult)
    N = n * nc
    comult = D.reshape(N, N, N)
    counit = einsum("a,b->ab", H.unit, C.counit).reshape(N)
    return Coalgebra(H.field, crossed_basis(H, C.basis), comult, counit, name=f"{H.name}*op|><|{C.name}", factors=(n, nc))


def drinfeld_codouble(H: FiniteDimHopfAlgebra) -> Coalgebra:
    C = diagonal_crossed_coproduct(H, regular_bimodule(H))
    return Coalgebra(C.field, C.basis, C.comult, C.counit, name=f"D^({H.name})", factors=C.factors)


# -- the codouble as an algebra and its actions ---------------------------

def codouble_algebra(H: FiniteDimHopfAlgebra) -> tuple[ExactArray, ExactArray]:
    """Multiplication and unit on ``H^{*op} (x) H`` (tensor product algebra).

    ``(p (x) h)(p' (x) h') = p'p (x) hh'`` with ``p'p`` convolution, ``p'`` first.
    """
    n = H.dim
    mult = einsum("rqp,hgk->phqgrk", H.comult, H.mult).reshape(n * n, n * n, n * n)
    unit = einsum("a,b->ab", H.counit, H.unit).reshape(n * n)
    return mult, unit


def codouble_actions(H: FiniteDimHopfAlgebra, C: BimoduleCoalgebra) -> tuple[ExactArray, ExactArray]:
    """Left and right actions of the codouble on ``H^{*op} |><| C``.

    ``(p (x) h) > (q |><| c) = qp |><| h . c`` and
    ``(q |><| c) < (p (x) h) = pq |><| c . h`` (products are convolutions in the written order).
    """
    n, nc = H.dim, C.dim
    d = H.comult
    left = einsum("rqp,hck->phqcrk", d, C.left_action).reshape(n * n, n * nc, n * nc)
    right = einsum("rpq,chk->qcphrk", d, C.right_action).reshape(n * nc, n * n, n * nc)
    return left, right


def verify_codouble_actions(H: FiniteDimHopfAlgebra, C: BimoduleCoalgebra) -> Report:
    """Bimodule-coalgebra axioms for the codouble acting on ``H^{*op} |><| C``."""
    rep = Report()
    D = drinfeld_codouble(H)
    Y = diagonal_crossed_coproduct(H, C)
    mult, unit = codouble_algebra(H)
    left, right = codouble_actions(H, C)
    where = f"{D.name} on {Y.name}"
    xn, yn = list(D.basis), list(Y.basis)
    eye = ExactArray.identity(Y.dim, H.field)
    rep.add(
        compare(
            "left module associativity",
            where,
            einsum("jys,isk->ijyk", left, left),
            einsum("ijs,syk->ijyk", mult, left),
            3,
            [xn, xn, yn],
        )
    )
    rep.add(compare("left module unit", where, einsum("s,syk->yk", unit, left), eye, 1, [yn]))
    rep.add(
        compare(
            "right module associativity",
            where,
            einsum("yis,sjk->yijk", right, right),
            einsum("ijs,ysk->yijk", mult, right),
            3,
            [yn, xn, xn],
        )
    )
    rep.add(compare("right module unit", where, einsum("s,ysk->yk", unit, right), eye, 1, [yn]))
    rep.add(
        compare(
            "bimodule compatibility",
            where,
            einsum("iys,sjk->iyjk", left, right),
            einsum("yjs,isk->iyjk", right, left),
            3,
            [xn, yn, xn],
        )
    )
    dX, dY = D.comult, Y.comult
    rep.add(
        compare(
            "left action is comultiplicative",
            where,
            einsum("iys,sab->iyab", left, dY),
            einsum("ipq,yrs,pra,qsb->iyab", dX, dY, left, left),
            2,
            [xn, yn],
        )
    )
    rep.add(
        compare(
            "left action is counital",
            where,
            einsum("iys,s->iy", left, Y.counit),
            einsum("i,y->iy", D.counit, Y.counit),
            2,
            [xn, yn],
        )
    )
    rep.add(
        compare(
            "right action is comultiplicative",
            where,
            einsum("yis,sab->yiab", right, dY),
            einsum("ipq,yrs,rpa,sqb->yiab", dX, dY, right, right),
            2,
            [yn, xn],
        )
    )
    rep.add(
        compare(
            "right action is counital",
            where,
            einsum("yis,s->yi", right, Y.counit),
            einsum("y,i->yi", Y.counit, D.counit),
            2,
            [yn, xn],
        )
    )
    return rep


def codouble_bialgebra_report(H: FiniteDimHopfAlgebra) -> Report:
    """Informational: is the codouble with the tensor-product algebra a bialgebra?"""
    D = drinfeld_codouble(H)
    mult, unit = codouble_algebra(H)
    rep = Report()
    for r in verify_algebra(mult, unit, None, D.name):
        rep.add(r)
    lhs = einsum("ijs,sab->ijab", mult, D.comult)
    rhs = einsum("ipq,jrs,pra,qsb->ijab", D.comult, D.comult, mult, mult)
    rep.add(compare("comultiplication is multiplicative", D.name, lhs, rhs, 2))
    return rep


# -- Yetter-Drinfel'd data (H, C, H) --------------------------------------

def verify_module(H: FiniteDimHopfAlgebra, action: ExactArray, where: str, names=None) -> list[CheckResult]:
    hn = list(H.basis)
    eye = ExactArray.identity(action.shape[1], H.field)
    return [
        compare(
            "module associativity",
            where,
            einsum("jms,isk->ijmk", action, action),
            einsum("ijs,smk->ijmk", H.mult, action),
            3,
            [hn, hn, names],
        ),
        compare("module unit", where, einsum("s,smk->mk", H.unit, action), eye, 1, [names]),
    ]


def verify_comodule(comult: ExactArray, counit: ExactArray, coaction: ExactArray, where: str, names=None) -> list[CheckResult]:
    """Right comodule axioms; ``coaction[m, m', c]`` is the coefficient of ``m' (x) c``."""
    eye = ExactArray.identity(coaction.shape[0], coaction.field)
    return [
        compare(
            "comodule coassociativity",
            where,
            einsum("mtb,tna->mnab", coaction, coaction),
            einsum("mns,sab->mnab", coaction, comult),
            1,
            [names],
        ),
        compare("comodule counit", where, einsum("mnc,c->mn", coaction, counit), eye, 1, [names]),
    ]


def verify_ydc_compat(H: FiniteDimHopfAlgebra, C: BimoduleCoalgebra, action: ExactArray, coaction: ExactArray, where: str = "M") -> Report:
    """Left H-module / right C-comodule compatibility, checked in both displayed forms."""
    rep = Report()
    dim = action.shape[1]
    mn = [f"m{i}" for i in range(dim)]
    hn = list(H.basis)
    for r in verify_module(H, action, where, mn):
        rep.add(r)
    for r in verify_comodule(C.comult, C.counit, coaction, where, mn):
        rep.add(r)
    d, L, R = H.comult, C.left_action, C.right_action
    # h_1 . m_0 (x) h_2 . m_1 = (h_2 . m)_0 (x) (h_2 . m)_1 . h_1
    lhs1 = einsum("hab,mtc,atn,bck->hmnk", d, coaction, action, L)
    rhs1 = einsum("hab,bmt,tnc,cak->hmnk", d, action, coaction, R)
    form1 = compare("YD compatibility (form 1)", where, lhs1, rhs1, 2, [hn, mn])
    # (h . m)_0 (x) (h . m)_1 = h_2 . m_0 (x) h_3 . m_1 . S^-1(h_1)
    lhs2 = einsum("hmt,tnk->hmnk", action, coaction)
    rhs2 = einsum("habc,mtx,btn,cxy,sa,ysk->hmnk", H.comult3, coaction, action, L, H.antipode_inv, R)
    form2 = compare("YD compatibility (form 2)", where, lhs2, rhs2, 2, [hn, mn])
    rep.add(form1)
    rep.add(form2)
    agree = form1.ok == form2.ok
    rep.add(
        CheckResult(
            "YD compatibility forms agree",
            where,
            "pass" if agree else "fail",
            None if agree else f"form 1 {form1.status}, form 2 {form2.status}",
        )
    )
    return rep
