"""Finite groups, group algebras and closed-form formulas on CT(k(pi)).

The closed forms here evaluate Kronecker deltas on group elements directly
and never touch the tensor engine, so they serve as an independent oracle
for the generic constructions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .field import QQ, Field, FieldError
from .hopf import FiniteDimHopfAlgebra, GPair
from .tensor import ExactArray, column_space, einsum

Perm = tuple[int, ...]


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Multiplication table on ``0 .. n-1`` with the identity at index 0."""

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None, name: str = "G"):
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n):
            raise GroupError(f"table must be square, got {t.shape}")
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        for i in range(n):
            if len(set(t[i])) != n:
                raise GroupError(f"row {i} repeats an element: not a Latin square")
            if len(set(t[:, i])) != n:
                raise GroupError(f"column {i} repeats an element: not a Latin square")
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise GroupError("index 0 must be the identity")
        assoc = t[t[:, :, None], np.arange(n)[None, None, :]]  # (ab)c indexed [a, b, c]
        assoc2 = t[np.arange(n)[:, None, None], t[None, :, :]]  # a(bc)
        if not np.array_equal(assoc, assoc2):
            a, b, c = (int(x) for x in np.argwhere(assoc != assoc2)[0])
            raise GroupError(f"table is not associative at ({a}, {b}, {c})")
        self.table = t
        self.table.setflags(write=False)
        self.order = n
        self.names = tuple(names) if names else tuple(f"g{i}" if i else "e" for i in range(n))
        self.name = name
        inv = np.zeros(n, dtype=np.int64)
        for a in range(n):
            inv[a] = int(np.nonzero(t[a] == 0)[0][0])
        self.inverse = inv

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def prod(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = int(self.table[out, x])
        return out

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def noncommuting_pair(self) -> tuple[int, int] | None:
        hits = np.argwhere(self.table != self.table.T)
        return (int(hits[0][0]), int(hits[0][1])) if len(hits) else None

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily."""
        gens: list[int] = []
        span = {0}
        for g in range(1, self.order):
            if g in span:
                continue
            gens.append(g)
            span = self._closure(gens)
            if len(span) == self.order:
                break
        return tuple(gens)

    def _closure(self, gens) -> set[int]:
        span = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        return span

    def to_json(self) -> dict:
        return {"order": self.order, "table": self.table.tolist(), "names": list(self.names)}

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    names = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], names, f"Z{n}")


def klein_group() -> FiniteGroup:
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return FiniteGroup(table, ["e", "a", "b", "ab"], "Z2xZ2")


def symmetric_group_3() -> FiniteGroup:
    # r = (0 1 2), s = (1 2); products compose right to left
    r = (1, 2, 0)
    s = (0, 2, 1)
    e = (0, 1, 2)

    def comp(p, q):
        return tuple(p[q[x]] for x in range(3))

    r2 = comp(r, r)
    elems = [e, r, r2, s, comp(s, r), comp(s, r2)]
    names = ["e", "r", "r2", "s", "sr", "sr2"]
    idx = {p: i for i, p in enumerate(elems)}
    table = [[idx[comp(p, q)] for q in elems] for p in elems]
    return FiniteGroup(table, names, "S3")


BUILTIN_GROUPS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z2xZ2": klein_group,
    "S3": symmetric_group_3,
}


def builtin_group(name: str) -> FiniteGroup:
    try:
        return BUILTIN_GROUPS[name]()
    except KeyError:
        raise GroupError(f"unknown group {name!r}; known: {', '.join(BUILTIN_GROUPS)}") from None


def group_from_json(obj: dict) -> FiniteGroup:
    table = obj["table"]
    if int(obj.get("order", len(table))) != len(table):
        raise GroupError("declared order does not match table size")
    return FiniteGroup(table, obj.get("names"), obj.get("name", "G"))


def group_algebra(G: FiniteGroup, field: Field = QQ) -> FiniteDimHopfAlgebra:
    """``k(G)``: group-like basis, ``S(g) = g^-1``."""
    n = G.order
    mult = np.zeros((n, n, n), dtype=np.int64)
    comult = np.zeros((n, n, n), dtype=np.int64)
    S = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        comult[a, a, a] = 1
        S[G.inv(a), a] = 1
        for b in range(n):
            mult[a, b, G.mul(a, b)] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    wrap = lambda x: ExactArray(x, 1, field)  # noqa: E731
    return FiniteDimHopfAlgebra(
        field=field,
        basis=G.names,
        mult=wrap(mult),
        unit=wrap(unit),
        comult=wrap(comult),
        counit=wrap(np.ones(n, dtype=np.int64)),
        antipode=wrap(S),
        name=f"k({G.name})",
    )


@dataclass(frozen=True)
class GroupAutomorphism:
    perm: Perm

    def __call__(self, a: int) -> int:
        return self.perm[a]

    def inverse(self) -> GroupAutomorphism:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return GroupAutomorphism(tuple(inv))

    def compose(self, other: GroupAutomorphism) -> GroupAutomorphism:
        """``self o other``."""
        return GroupAutomorphism(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def matrix(self, field: Field = QQ) -> ExactArray:
        n = len(self.perm)
        m = np.zeros((n, n), dtype=np.int64)
        for i, j in enumerate(self.perm):
            m[j, i] = 1
        return ExactArray(m, 1, field)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))


def is_group_automorphism(G: FiniteGroup, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(G.order)):
        return False
    p = np.asarray(perm)
    return bool(np.array_equal(p[G.table], G.table[p[:, None], p[None, :]]))


def enumerate_automorphisms(G: FiniteGroup, cap: int = 24) -> list[GroupAutomorphism]:
    """All automorphisms, by extending every assignment of the generators' images."""
    if G.order > cap:
        raise GroupError(f"group order {G.order} exceeds the automorphism cap {cap}")
    gens = G.generators
    # express every element as a word in the generators
    words = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for k, g in enumerate(gens):
                y = G.mul(x, g)
                if y not in words:
                    words[y] = words[x] + (k,)
                    nxt.append(y)
        frontier = nxt
    found = []
    for images in itertools.product(range(G.order), repeat=len(gens)):
        perm = [G.prod(*(images[k] for k in words[x])) for x in range(G.order)]
        if is_group_automorphism(G, perm):
            found.append(GroupAutomorphism(tuple(perm)))
    found.sort(key=lambda a: (not a.is_identity(), a.perm))
    return found


def automorphism_pairs(H: FiniteDimHopfAlgebra, auts: Sequence[GroupAutomorphism]) -> list[GPair]:
    """Every pair in ``Aut x Aut`` as a :class:`GPair` (identity pair first)."""
    mats = [a.matrix(H.field) for a in auts]
    out = []
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            out.append(GPair(H, a, b, verify=False, name=f"(a{i},a{j})"))
    return out


def gpair_perms(G: FiniteGroup, g: GPair) -> tuple[Perm, Perm]:
    """Read the permutations back off a GPair of permutation matrices."""
    def perm(m: ExactArray) -> Perm:
        num = m.num
        if m.den != 1:
            raise GroupError("not a permutation matrix")
        out = []
        for i in range(G.order):
            col = np.nonzero(num[:, i])[0]
            if len(col) != 1 or num[col[0], i] != 1:
                raise GroupError("not a permutation matrix")
            out.append(int(col[0]))
        return tuple(out)
    return perm(g.alpha), perm(g.beta)


# -- Sweedler's four-dimensional Hopf algebra -----------------------------

def sweedler_fixture(field: Field = QQ) -> FiniteDimHopfAlgebra:
    """Basis ``1, g, x, gx`` with ``g^2 = 1, x^2 = 0, xg = -gx``,
    ``Delta(g) = g (x) g``, ``Delta(x) = x (x) 1 + g (x) x``, ``S(x) = -gx``."""
    if field.characteristic == 2:
        raise FieldError("Sweedler's algebra needs characteristic != 2")
    # words as (g-exponent, x-exponent); gx has (1, 1)
    basis = [(0, 0), (1, 0), (0, 1), (1, 1)]
    idx = {b: i for i, b in enumerate(basis)}
    n = 4
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, (g1, x1) in enumerate(basis):
        for j, (g2, x2) in enumerate(basis):
            if x1 + x2 > 1:
                continue
            # g^g1 x^x1 g^g2 x^x2 = (-1)^(x1 g2) g^(g1+g2) x^(x1+x2)
            sign = -1 if (x1 and g2) else 1
            mult[i][j][idx[((g1 + g2) % 2, x1 + x2)]] = sign
    comult = [[[0] * n for _ in range(n)] for _ in range(n)]
    one, g, x, gx = range(4)
    comult[one][one][one] = 1
    comult[g][g][g] = 1
    comult[x][x][one] = 1
    comult[x][g][x] = 1
    comult[gx][gx][g] = 1
    comult[gx][one][gx] = 1
    S = [[0] * n for _ in range(n)]
    S[one][one] = 1
    S[g][g] = 1
    S[gx][x] = -1  # S(x) = -gx
    S[x][gx] = 1  # S(gx) = x
    wrap = lambda a: ExactArray.from_scalars(a, field)  # noqa: E731
    return FiniteDimHopfAlgebra(
        field=field,
        basis=("1", "g", "x", "gx"),
        mult=wrap(mult),
        unit=wrap([1, 0, 0, 0]),
        comult=wrap(comult),
        counit=wrap([1, 1, 0, 0]),
        antipode=wrap(S),
        name="H4",
    )


def sweedler_scaling(lam, field: Field = QQ) -> ExactArray:
    """The Hopf automorphism ``g -> g, x -> lam x`` of Sweedler's algebra."""
    lam = field(lam)
    z = field.zero()
    o = field.one()
    return ExactArray.from_scalars([[o, z, z, z], [z, o, z, z], [z, z, lam, z], [z, z, z, lam]], field)


# -- closed forms on CT(k(pi)) -------------------------------------------

class GroupOracle:
    """Kronecker-delta formulas for CT(k(pi)), indexed by group elements.

    Automorphisms are permutations; a component basis element ``p_c |><| d``
    has index ``c * n + d``.
    """

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.n = G.order

    # permutation helpers
    @staticmethod
    def inv(p: Perm) -> Perm:
        out = [0] * len(p)
        for i, j in enumerate(p):
            out[j] = i
        return tuple(out)

    @staticmethod
    def comp(*ps: Perm) -> Perm:
        """``comp(f, g, h) = f o g o h``."""
        n = len(ps[0])
        out = list(range(n))
        for p in reversed(ps):
            out = [p[i] for i in out]
        return tuple(out)

    def pair_mul(self, x, y):
        (a, b), (g, d) = x, y
        return self.comp(d, a, self.inv(d), g), self.comp(d, b)

    def pair_inv(self, x):
        a, b = x
        bi = self.inv(b)
        return self.comp(bi, self.inv(a), b), bi

    def idx(self, c: int, d: int) -> int:
        return c * self.n + d

    def comult(self, alpha: Perm, beta: Perm, c: int, d: int) -> list[tuple[int, int, int]]:
        """Terms ``(coefficient, left index, right index)`` of the coproduct of ``p_c |><| d``."""
        G = self.G
        terms = []
        for a in range(self.n):
            for b in range(self.n):
                if G.mul(a, b) != c:
                    continue
                mid = G.prod(beta[b], d, alpha[G.inv(b)])
                terms.append((1, self.idx(a, mid), self.idx(b, d)))
        return terms

    def mult(self, x, y, c: int, a: int, d: int, b: int) -> list[tuple[int, int]]:
        (alpha, beta), (gamma, delta) = x, y
        if c != d:
            return []
        k = self.comp(delta, alpha, self.inv(delta))
        return [(1, self.idx(c, self.G.mul(delta[a], k[b])))]

    def unit(self) -> list[tuple[int, int]]:
        return [(1, self.idx(a, 0)) for a in range(self.n)]

    def crossing(self, g, x, c: int, d: int) -> list[tuple[int, int]]:
        (alpha, beta), (gamma, delta) = g, x
        bi = self.inv(beta)
        left = self.comp(bi, alpha)[c]
        right = self.comp(bi, delta, alpha, self.inv(delta))[d]
        return [(1, self.idx(left, right))]

    def antipode(self, x, c: int, a: int) -> list[tuple[int, int]]:
        alpha, beta = x
        G = self.G
        bi, ai = self.inv(beta), self.inv(alpha)
        ci = G.inv(c)
        h = G.prod(bi[c], self.comp(bi, ai)[G.inv(a)], self.comp(bi, ai, beta)[ci])
        return [(1, self.idx(ci, h))]

    def sigma(self, x, y, c: int, a: int, d: int, b: int) -> int:
        delta = y[1]
        return int(b == delta[c] and d == 0)

    def sigma_inv(self, x, y, c: int, a: int, d: int, b: int) -> int:
        delta = y[1]
        return int(b == self.G.inv(delta[c]) and d == 0)

    # dense forms for comparison with the generic engine
    def comult_tensor(self, alpha, beta, field: Field = QQ) -> ExactArray:
        N = self.n * self.n
        out = np.zeros((N, N, N), dtype=np.int64)
        for c in range(self.n):
            for d in range(self.n):
                for coef, l, r in self.comult(alpha, beta, c, d):
                    out[self.idx(c, d), l, r] += coef
        return ExactArray(out, 1, field)

    def mult_tensor(self, x, y, field: Field = QQ) -> ExactArray:
        N = self.n * self.n
        out = np.zeros((N, N, N), dtype=np.int64)
        for c, a, d, b in itertools.product(range(self.n), repeat=4):
            for coef, k in self.mult(x, y, c, a, d, b):
                out[self.idx(c, a), self.idx(d, b), k] += coef
        return ExactArray(out, 1, field)

    def unit_vector(self, field: Field = QQ) -> ExactArray:
        out = np.zeros(self.n * self.n, dtype=np.int64)
        for coef, k in self.unit():
            out[k] += coef
        return ExactArray(out, 1, field)

    def crossing_matrix(self, g, x, field: Field = QQ) -> ExactArray:
        N = self.n * self.n
        out = np.zeros((N, N), dtype=np.int64)
        for c in range(self.n):
            for d in range(self.n):
                for coef, k in self.crossing(g, x, c, d):
                    out[k, self.idx(c, d)] += coef
        return ExactArray(out, 1, field)

    def antipode_matrix(self, x, field: Field = QQ) -> ExactArray:
        N = self.n * self.n
        out = np.zeros((N, N), dtype=np.int64)
        for c in range(self.n):
            for a in range(self.n):
                for coef, k in self.antipode(x, c, a):
                    out[k, self.idx(c, a)] += coef
        return ExactArray(out, 1, field)

    def sigma_matrix(self, x, y, field: Field = QQ, inverse: bool = False) -> ExactArray:
        N = self.n * self.n
        out = np.zeros((N, N), dtype=np.int64)
        f = self.sigma_inv if inverse else self.sigma
        for c, a, d, b in itertools.product(range(self.n), repeat=4):
            out[self.idx(c, a), self.idx(d, b)] = f(x, y, c, a, d, b)
        return ExactArray(out, 1, field)


def oracle_ct(G: FiniteGroup) -> GroupOracle:
    return GroupOracle(G)


# -- gradings of YD modules over k(pi) -----------------------------------

class GradingError(ValueError):
    pass


def yd_grading(coaction: ExactArray, G: FiniteGroup) -> dict[int, ExactArray]:
    """Split ``M = (+)_a M_a`` with ``M_a = {m : rho(m) = m (x) a}``.

    ``coaction[m, m', a]`` is the coefficient of ``e_m' (x) a`` in ``rho(e_m)``.
    Returns, for each ``a`` with ``M_a != 0``, a matrix whose columns span ``M_a``.
    """
    dim = coaction.shape[0]
    if coaction.shape != (dim, dim, G.order):
        raise GradingError(f"coaction shape {coaction.shape} does not land in M (x) k({G.name})")
    field = coaction.field
    eye = ExactArray.identity(dim, field)
    total = ExactArray.zeros((dim, dim), field)
    pieces: dict[int, ExactArray] = {}
    for a in range(G.order):
        P = coaction[:, :, a].T  # matrix of m -> component at a
        total = total + P
        if P @ P != P:
            raise GradingError(f"projection onto degree {G.names[a]} is not idempotent")
        if not P.is_zero():
            pieces[a] = column_space(P)
    if total != eye:
        raise GradingError("degree projections do not sum to the identity: not a comodule over k(pi)")
    if sum(p.shape[1] for p in pieces.values()) != dim:
        raise GradingError("homogeneous components do not span M")
    for a, basis in pieces.items():
        # defining equation: rho(m) = m (x) a on each basis vector
        rho = einsum("mna,mk->kna", coaction, basis)
        expect = np.zeros(rho.shape, dtype=object)
        target = einsum("mk->km", basis)
        for k in range(basis.shape[1]):
            for m in range(dim):
                expect[k, m, a] = target.item(k, m)
        if rho != ExactArray.from_scalars(expect.tolist(), field):
            raise GradingError(f"degree {G.names[a]} vectors are not homogeneous")
    return pieces


def degree_of(coaction: ExactArray, vec: ExactArray, G: FiniteGroup) -> int | None:
    """Degree of a homogeneous vector, or None if it is not homogeneous."""
    rho = einsum("mna,m->na", coaction, vec)
    hits = [a for a in range(G.order) if not rho[:, a].is_zero()]
    if len(hits) != 1:
        return None
    a = hits[0]
    return a if rho[:, a] == vec else None
