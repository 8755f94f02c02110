"""(alpha, beta)-Yetter-Drinfel'd modules and their braided T-category calculus.

A module ``M`` of dimension ``m`` over ``H`` (dimension ``n``) carries

* ``action[h, i, j]``: coefficient of ``e_j`` in ``h . e_i``;
* ``coaction[i, j, c]``: coefficient of ``e_j (x) h_c`` in ``rho(e_i)``.

Linear maps between modules are ``dst x src`` matrices; tensor products use the
row-major basis ``e_i (x) f_j -> i * dim(N) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coproduct import (
    Coalgebra,
    diagonal_crossed_coproduct,
    h_alpha_beta,
    verify_comodule,
    verify_module,
)
from .hopf import FiniteDimHopfAlgebra, GPair, g_inv, g_mul, g_unit
from .report import CheckResult, Report, compare
from .tensor import DimensionError, ExactArray, compose, einsum, flip, map_tensor


class LabelError(ValueError):
    """Objects live over different Hopf algebras or carry mismatched labels."""


@dataclass(frozen=True, eq=False)
class YDModule:
    H: FiniteDimHopfAlgebra
    label: GPair
    action: ExactArray
    coaction: ExactArray
    name: str = "M"

    def __post_init__(self):
        n = self.H.dim
        m = self.action.shape[1] if self.action.ndim == 3 else -1
        if self.action.shape != (n, m, m):
            raise DimensionError(f"action of {self.name} has shape {self.action.shape}")
        if self.coaction.shape != (m, m, n):
            raise DimensionError(f"coaction of {self.name} has shape {self.coaction.shape}, expected {(m, m, n)}")
        if self.label.H is not self.H and self.label.H.fingerprint != self.H.fingerprint:
            raise LabelError("label automorphisms belong to a different Hopf algebra")

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def field(self):
        return self.H.field

    @property
    def basis(self) -> list[str]:
        return [f"{self.name}[{i}]" for i in range(self.dim)]

    def action_matrix(self, h: int) -> ExactArray:
        """Matrix of ``m -> h_h . m``."""
        return self.action[h].T

    def same_structure(self, other: YDModule) -> bool:
        return (
            self.label == other.label
            and self.action == other.action
            and self.coaction == other.coaction
        )

    def relabel(self, label: GPair, name: str | None = None) -> YDModule:
        return YDModule(self.H, label, self.action, self.coaction, name or self.name)

    def __repr__(self):
        return f"YDModule({self.name}, dim={self.dim}, label={self.label.name or '?'})"


def _same_H(*mods: YDModule) -> FiniteDimHopfAlgebra:
    H = mods[0].H
    for M in mods[1:]:
        if M.H is not H and M.H.fingerprint != H.fingerprint:
            raise LabelError(f"{mods[0].name} and {M.name} live over different Hopf algebras")
    return H


def verify_yd(M: YDModule) -> Report:
    """Module, comodule and (alpha, beta)-compatibility axioms of ``M``."""
    H, g = M.H, M.label
    rep = Report()
    names = M.basis
    for r in verify_module(H, M.action, M.name, names):
        rep.add(r)
    for r in verify_comodule(H.comult, H.counit, M.coaction, M.name, names):
        rep.add(r)
    # h_1 . m_0 (x) beta(h_2) m_1 = (h_2 . m)_0 (x) (h_2 . m)_1 alpha(h_1)
    d, mult, act, co = H.comult, H.mult, M.action, M.coaction
    lhs = einsum("hab,mtc,atn,ub,uck->hmnk", d, co, act, g.beta, mult)
    rhs = einsum("hab,bmt,tnc,ua,cuk->hmnk", d, act, co, g.alpha, mult)
    rep.add(compare("YD compatibility", M.name, lhs, rhs, 2, [list(H.basis), names]))
    return rep


def trivial_yd(H: FiniteDimHopfAlgebra, label: GPair | None = None) -> YDModule:
    """The unit object ``k``: ``h . 1 = eps(h)``, ``rho(1) = 1 (x) 1``."""
    label = label if label is not None else g_unit(H)
    return YDModule(H, label, H.counit.reshape(H.dim, 1, 1), H.unit.reshape(1, 1, H.dim), name="k")


def canonical_yd(H: FiniteDimHopfAlgebra, g: GPair, name: str | None = None) -> YDModule:
    """``H_{alpha,beta}``: regular action, ``rho(h) = h_2 (x) beta(h_3) S^-1 alpha(h_1)``."""
    sa = compose(H.antipode_inv, g.alpha)
    co = einsum("hanc,uc,va,uvk->hnk", H.comult3, g.beta, sa, H.mult)
    return YDModule(H, g, H.mult, co, name=name or f"{H.name}_{g.name or 'g'}")


def tensor_yd(M: YDModule, N: YDModule) -> YDModule:
    """``M (x) N``: ``h.(m (x) n) = h_2.m (x) h_1.n``, coaction ``m_0 (x) n_0 (x) delta(m_1) delta alpha delta^-1 (n_1)``."""
    H = _same_H(M, N)
    alpha, delta = M.label.alpha, N.label.beta
    K = compose(delta, alpha, N.label.beta_inv)
    a, b = M.dim, N.dim
    act = einsum("hxy,ymp,xnq->hmnpq", H.comult, M.action, N.action).reshape(H.dim, a * b, a * b)
    co = einsum("mpc,nqe,uc,ve,uvk->mnpqk", M.coaction, N.coaction, delta, K, H.mult).reshape(a * b, a * b, H.dim)
    return YDModule(H, g_mul(M.label, N.label), act, co, name=f"({M.name}*{N.name})")


def tensor_many(*mods: YDModule) -> YDModule:
    out = mods[0]
    for M in mods[1:]:
        out = tensor_yd(out, M)
    return out


def conjugate_yd(g: GPair, N: YDModule) -> YDModule:
    """``^{(alpha,beta)}N``: ``h -> n = alpha^-1 beta(h) . n``, coaction ``n_0 (x) beta^-1 delta alpha delta^-1 (n_1)``."""
    H = _same_H(N)
    gamma_delta = N.label
    f = compose(g.alpha_inv, g.beta)
    L = compose(g.beta_inv, gamma_delta.beta, g.alpha, gamma_delta.beta_inv)
    act = einsum("uh,umn->hmn", f, N.action)
    co = einsum("mnc,kc->mnk", N.coaction, L)
    label = g_mul(g_mul(g, gamma_delta), g_inv(g))
    return YDModule(H, label, act, co, name=f"^{g.name or 'g'}{N.name}")


def _yd_labels_match(M: YDModule, expected: GPair, where: str) -> CheckResult:
    ok = M.label == expected
    return CheckResult("label", where, "pass" if ok else "fail", None if ok else "label differs from the expected pair")


# -- morphisms ------------------------------------------------------------

def morphism_checks(f: ExactArray, src: YDModule, dst: YDModule, where: str) -> list[CheckResult]:
    """H-linearity and H-colinearity of ``f: src -> dst`` (``dst x src`` matrix)."""
    if f.shape != (dst.dim, src.dim):
        return [CheckResult("morphism shape", where, "fail", f"shape {f.shape} vs {(dst.dim, src.dim)}")]
    names = [list(src.H.basis), src.basis]
    lin = compare(
        "H-linear",
        where,
        einsum("hxs,ys->hxy", src.action, f),
        einsum("sx,hsy->hxy", f, dst.action),
        2,
        names,
    )
    colin = compare(
        "H-colinear",
        where,
        einsum("xsk,ys->xyk", src.coaction, f),
        einsum("sx,syk->xyk", f, dst.coaction),
        1,
        [src.basis],
    )
    return [lin, colin]


# -- braiding ---------------------------------------------------------------

def braiding(M: YDModule, N: YDModule) -> ExactArray:
    """``c_{M,N}: M (x) N -> ^M N (x) M``, ``m (x) n -> alpha^-1(m_1) . n (x) m_0``."""
    _same_H(M, N)
    c = einsum("mpc,uc,unq->mnqp", M.coaction, M.label.alpha_inv, N.action)
    return c.reshape(M.dim * N.dim, N.dim * M.dim).T


def braiding_inverse(M: YDModule, N: YDModule) -> ExactArray:
    """``c^-1(n (x) m) = m_0 (x) alpha^-1 S(m_1) . n``."""
    H = _same_H(M, N)
    t = compose(M.label.alpha_inv, H.antipode)
    c = einsum("mpc,uc,unq->nmpq", M.coaction, t, N.action)
    return c.reshape(N.dim * M.dim, M.dim * N.dim).T


def braiding_target(M: YDModule, N: YDModule) -> YDModule:
    return tensor_yd(conjugate_yd(M.label, N), M)


def _eye(n: int, field) -> ExactArray:
    return ExactArray.identity(n, field)


def hexagon_left(U: YDModule, V: YDModule, W: YDModule) -> tuple[ExactArray, ExactArray]:
    """Both sides of ``c_{U(x)V,W} = (c_{U,^V W} (x) id_V)(id_U (x) c_{V,W})``."""
    F = U.field
    lhs = braiding(tensor_yd(U, V), W)
    rhs = compose(
        map_tensor(braiding(U, conjugate_yd(V.label, W)), _eye(V.dim, F)),
        map_tensor(_eye(U.dim, F), braiding(V, W)),
    )
    return lhs, rhs


def hexagon_right(U: YDModule, V: YDModule, W: YDModule) -> tuple[ExactArray, ExactArray]:
    """Both sides of ``c_{U,V(x)W} = (id_{^U V} (x) c_{U,W})(c_{U,V} (x) id_W)``."""
    F = U.field
    lhs = braiding(U, tensor_yd(V, W))
    rhs = compose(
        map_tensor(_eye(V.dim, F), braiding(U, W)),
        map_tensor(braiding(U, V), _eye(W.dim, F)),
    )
    return lhs, rhs


def _map_compare(axiom: str, where: str, lhs: ExactArray, rhs: ExactArray) -> CheckResult:
    # columns are inputs: compare transposes so the witness names the source basis vector
    return compare(axiom, where, lhs.T, rhs.T, 1)


def verify_braiding(M: YDModule, N: YDModule, conjugators: list[GPair] | None = None) -> Report:
    """Invertibility, H-(co)linearity and conjugation invariance of ``c_{M,N}``."""
    rep = Report()
    where = f"c[{M.name},{N.name}]"
    F = M.field
    c = braiding(M, N)
    ci = braiding_inverse(M, N)
    rep.add(_map_compare("braiding inverse (right)", where, compose(c, ci), _eye(c.shape[0], F)))
    rep.add(_map_compare("braiding inverse (left)", where, compose(ci, c), _eye(c.shape[1], F)))
    src = tensor_yd(M, N)
    dst = braiding_target(M, N)
    rep.add(_yd_labels_match(dst, src.label, where + " target label"))
    for r in morphism_checks(c, src, dst, where):
        rep.add(r)
    for P in conjugators or []:
        rep.add(
            _map_compare(
                "braiding conjugation invariance",
                f"{where} under {P.name or 'P'}",
                braiding(conjugate_yd(P, M), conjugate_yd(P, N)),
                c,
            )
        )
    return rep


def verify_hexagons(U: YDModule, V: YDModule, W: YDModule) -> Report:
    rep = Report()
    where = f"({U.name},{V.name},{W.name})"
    rep.add(_map_compare("hexagon (tensor on the left)", where, *hexagon_left(U, V, W)))
    rep.add(_map_compare("hexagon (tensor on the right)", where, *hexagon_right(U, V, W)))
    return rep


def verify_conjugation_laws(g: GPair, h: GPair, M: YDModule, N: YDModule) -> Report:
    """Composition and monoidality of the conjugation functors, as structure-tensor equalities."""
    rep = Report()
    where = f"({g.name},{h.name}) on ({M.name},{N.name})"
    a = conjugate_yd(g_mul(g, h), N)
    b = conjugate_yd(g, conjugate_yd(h, N))
    rep.add(_struct_compare("conjugation composition", where, a, b))
    a = conjugate_yd(g, tensor_yd(M, N))
    b = tensor_yd(conjugate_yd(g, M), conjugate_yd(g, N))
    rep.add(_struct_compare("conjugation is monoidal", where, a, b))
    rep.add(_struct_compare("unit conjugation", N.name, conjugate_yd(g_unit(N.H), N), N))
    return rep


def _struct_compare(axiom: str, where: str, A: YDModule, B: YDModule) -> CheckResult:
    if A.label != B.label:
        return CheckResult(axiom, where, "fail", "labels differ")
    r = compare(axiom, where, A.action, B.action, 2, [list(A.H.basis), A.basis])
    if not r.ok:
        return r
    return compare(axiom, where, A.coaction, B.coaction, 1, [A.basis])


def verify_associativity(M: YDModule, N: YDModule, P: YDModule) -> CheckResult:
    return _struct_compare(
        "tensor associativity",
        f"({M.name},{N.name},{P.name})",
        tensor_yd(tensor_yd(M, N), P),
        tensor_yd(M, tensor_yd(N, P)),
    )


# -- duals and rigidity ----------------------------------------------------

def left_dual(M: YDModule) -> YDModule:
    """``M*`` with ``(h.f)(m) = f(S^-1(h).m)`` and ``f_0(m) f_1 = f(m_0) beta^-1 alpha^-1 S(m_1)``."""
    H, g = M.H, M.label
    act = einsum("uh,uji->hij", H.antipode_inv, M.action)
    t = compose(g.beta_inv, g.alpha_inv, H.antipode)
    co = einsum("jic,kc->ijk", M.coaction, t)
    return YDModule(H, g_inv(g), act, co, name=f"{M.name}*")


def right_dual(M: YDModule) -> YDModule:
    """``*M`` with ``(h.f)(m) = f(S(h).m)`` and ``f_0(m) f_1 = f(m_0) beta^-1 alpha^-1 S^-1(m_1)``."""
    H, g = M.H, M.label
    act = einsum("uh,uji->hij", H.antipode, M.action)
    t = compose(g.beta_inv, g.alpha_inv, H.antipode_inv)
    co = einsum("jic,kc->ijk", M.coaction, t)
    return YDModule(H, g_inv(g), act, co, name=f"*{M.name}")


def rigidity_maps(M: YDModule) -> tuple[ExactArray, ExactArray]:
    """``b_M: k -> M (x) M*`` (a column) and ``d_M: M* (x) M -> k`` (a row)."""
    m = M.dim
    flat = ExactArray.identity(m, M.field).reshape(m * m)
    return flat.reshape(m * m, 1), flat.reshape(1, m * m)


def verify_rigidity(M: YDModule, dual: YDModule | None = None, side: str = "left") -> Report:
    """Duality maps are YD morphisms and satisfy both zigzag identities exactly."""
    rep = Report()
    D = dual if dual is not None else (left_dual(M) if side == "left" else right_dual(M))
    F = M.field
    m = M.dim
    k = trivial_yd(M.H)
    b, d = rigidity_maps(M)
    I = _eye(m, F)
    where = f"{side} dual of {M.name}"
    if side == "left":
        # b: k -> M (x) M*, d: M* (x) M -> k
        for r in morphism_checks(b, k, tensor_yd(M, D), where + " b"):
            rep.add(r)
        for r in morphism_checks(d, tensor_yd(D, M), k, where + " d"):
            rep.add(r)
        z1 = compose(map_tensor(I, d), map_tensor(b, I))
        z2 = compose(map_tensor(d, I), map_tensor(I, b))
    else:
        # b: k -> *M (x) M, d: M (x) *M -> k
        for r in morphism_checks(b, k, tensor_yd(D, M), where + " b"):
            rep.add(r)
        for r in morphism_checks(d, tensor_yd(M, D), k, where + " d"):
            rep.add(r)
        z1 = compose(map_tensor(d, I), map_tensor(I, b))
        z2 = compose(map_tensor(I, d), map_tensor(b, I))
    rep.add(_map_compare("zigzag on M", where, z1, I))
    rep.add(_map_compare("zigzag on dual", where, z2, I))
    return rep


# -- comodules over the crossed coproduct ----------------------------------

@dataclass(frozen=True, eq=False)
class Comodule:
    coalgebra: Coalgebra
    coaction: ExactArray
    name: str = "X"

    def __post_init__(self):
        m = self.coaction.shape[0]
        if self.coaction.shape != (m, m, self.coalgebra.dim):
            raise DimensionError(f"coaction shape {self.coaction.shape} does not land in X (x) {self.coalgebra.name}")

    @property
    def dim(self) -> int:
        return self.coaction.shape[0]


def verify_comodule_axioms(X: Comodule) -> Report:
    rep = Report()
    names = [f"{X.name}[{i}]" for i in range(X.dim)]
    for r in verify_comodule(X.coalgebra.comult, X.coalgebra.counit, X.coaction, X.name, names):
        rep.add(r)
    return rep


def component_coalgebra(H: FiniteDimHopfAlgebra, g: GPair) -> Coalgebra:
    return diagonal_crossed_coproduct(H, h_alpha_beta(H, g))


def to_comodule(M: YDModule, coalgebra: Coalgebra | None = None) -> Comodule:
    """``m_[0] (x) m_[1] = sum_i h_i . m_0 (x) h^i |><| m_1``."""
    H = M.H
    n = H.dim
    D = coalgebra if coalgebra is not None else component_coalgebra(H, M.label)
    if D.dim != n * n:
        raise LabelError(f"{D.name} is not a crossed coproduct over {H.name}")
    co = einsum("mtc,itn->mnic", M.coaction, M.action).reshape(M.dim, M.dim, n * n)
    return Comodule(D, co, name=f"{M.name}^")


def from_comodule(X: Comodule, H: FiniteDimHopfAlgebra, label: GPair, name: str | None = None) -> YDModule:
    """``h . m = m_[0] <h (x) eps, m_[1]>`` and ``m_0 (x) m_1 = m_[0] (x) (eps* (x) id) m_[1]``."""
    n = H.dim
    if X.coalgebra.dim != n * n:
        raise LabelError(f"comodule over {X.coalgebra.name} does not match {H.name}")
    m = X.dim
    co4 = X.coaction.reshape(m, m, n, n)
    act = einsum("mnhc,c->hmn", co4, H.counit)
    co = einsum("mnic,i->mnc", co4, H.unit)
    return YDModule(H, label, act, co, name=name or X.name.rstrip("^"))


# -- braided T-category bookkeeping -----------------------------------------

def flip_map(M: YDModule, N: YDModule) -> ExactArray:
    return flip(M.dim, N.dim, M.field)
